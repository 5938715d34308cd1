#pragma once

#include <memory>
#include <string>

#include "btsl/mat2.hpp"
#include "btsl/padic.hpp"

namespace btsl {

enum class SplitKind { Split, Inert, Ramified };

std::string to_string(SplitKind k);
SplitKind split_kind_from_string(const std::string& s);

class QuadExtElement;

/// Concrete model of the quadratic etale algebra E_p over Q_p for one
/// splitting behaviour of p, together with the fixed uniformizer of the
/// chosen prime above p and a matrix J realizing the Galois conjugation
/// inside GL_2 (J i(e) J^-1 = i(tau(e))).
///
/// Non-split models are Q_p[w]/(w^2 + b w + c):
///   inert:    w^2 = u, u the smallest quadratic non-residue mod p (odd p),
///             or w^2 + w + 1 = 0 for p = 2;
///   ramified: w^2 = u p (Eisenstein), u = 1 by default.
/// Split is Q_p x Q_p with coordinatewise operations.
class SplittingData : public std::enable_shared_from_this<SplittingData> {
public:
    static std::shared_ptr<const SplittingData> make_split(const PrimeContext& ctx,
                                                           bool conjugate_prime = false);
    static std::shared_ptr<const SplittingData> make_inert(const PrimeContext& ctx);
    static std::shared_ptr<const SplittingData> make_ramified(const PrimeContext& ctx,
                                                              long unit_scale = 1);
    static std::shared_ptr<const SplittingData> make(SplitKind kind, const PrimeContext& ctx,
                                                     bool conjugate_prime = false);

    SplitKind kind() const { return kind_; }
    const PrimeContext& ctx() const { return ctx_; }
    bool is_split() const { return kind_ == SplitKind::Split; }

    /// Minimal polynomial coefficients of w: x^2 + b x + c (non-split only).
    const PAdicNumber& min_b() const;
    const PAdicNumber& min_c() const;

    QuadExtElement uniformizer() const;
    const Matrix2& conjugation() const { return J_; }

    QuadExtElement one() const;
    QuadExtElement zero() const;
    QuadExtElement omega() const;  // non-split only
    QuadExtElement from_pair(const PAdicNumber& x, const PAdicNumber& y) const;
    QuadExtElement from_pair(long x, long y) const;

    /// eta_p: 0 inert, -1 ramified; split has no finite value (throws).
    int eta() const;
    bool eta_is_minus_infinity() const { return kind_ == SplitKind::Split; }

private:
    SplittingData(SplitKind kind, const PrimeContext& ctx, PAdicNumber b, PAdicNumber c,
                  Matrix2 J)
        : kind_(kind), ctx_(ctx), b_(std::move(b)), c_(std::move(c)), J_(std::move(J)) {}

    void verify_conjugation() const;

    SplitKind kind_;
    PrimeContext ctx_;
    PAdicNumber b_, c_;  // meaningful for non-split
    Matrix2 J_;
    bool conjugate_prime_ = false;
};

using SplittingDataPtr = std::shared_ptr<const SplittingData>;

/// Element of E_p: coordinates (x, y) meaning x + y*w for non-split types,
/// or the pair (t1, t2) of Q_p x Q_p in the split case.
class QuadExtElement {
public:
    QuadExtElement(SplittingDataPtr data, PAdicNumber x, PAdicNumber y)
        : data_(std::move(data)), x_(std::move(x)), y_(std::move(y)) {}

    const SplittingDataPtr& data() const { return data_; }
    const PrimeContext& ctx() const { return x_.ctx(); }
    const PAdicNumber& x() const { return x_; }
    const PAdicNumber& y() const { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    QuadExtElement operator+(const QuadExtElement& o) const;
    QuadExtElement operator-(const QuadExtElement& o) const;
    QuadExtElement operator*(const QuadExtElement& o) const;
    QuadExtElement operator-() const;
    QuadExtElement invert() const;
    QuadExtElement pow(long k) const;
    bool operator==(const QuadExtElement& o) const;
    bool operator!=(const QuadExtElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    SplittingDataPtr data_;
    PAdicNumber x_, y_;
};

/// tau: the nontrivial Galois automorphism (coordinate swap when split).
QuadExtElement galois_conj(const QuadExtElement& e);

/// N_{E/F}(e) = e * tau(e), an element of Q_p.
PAdicNumber reduced_norm(const QuadExtElement& e);

PAdicNumber trace(const QuadExtElement& e);

/// The fixed embedding of E_p into the 2x2 matrix algebra: diag(t1, t2) when
/// split, the regular representation [[x, -c y], [y, x - b y]] otherwise.
Matrix2 iota(const QuadExtElement& e);

}  // namespace btsl
