#pragma once

#include <array>
#include <string>

#include "btsl/padic.hpp"

namespace btsl {

/// 2x2 matrix over Q_p, row-major.
class Matrix2 {
public:
    explicit Matrix2(const PrimeContext& ctx)
        : e_{PAdicNumber(ctx), PAdicNumber(ctx), PAdicNumber(ctx), PAdicNumber(ctx)} {}

    Matrix2(PAdicNumber a, PAdicNumber b, PAdicNumber c, PAdicNumber d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Matrix2 identity(const PrimeContext& ctx) {
        return Matrix2(PAdicNumber(ctx, 1), PAdicNumber(ctx), PAdicNumber(ctx),
                       PAdicNumber(ctx, 1));
    }
    static Matrix2 diag(const PAdicNumber& a, const PAdicNumber& d) {
        return Matrix2(a, PAdicNumber(a.ctx()), PAdicNumber(a.ctx()), d);
    }
    static Matrix2 antidiag(const PAdicNumber& b, const PAdicNumber& c) {
        return Matrix2(PAdicNumber(b.ctx()), b, c, PAdicNumber(b.ctx()));
    }

    const PrimeContext& ctx() const { return e_[0].ctx(); }

    const PAdicNumber& at(int i, int j) const { return e_[2 * i + j]; }
    PAdicNumber& at(int i, int j) { return e_[2 * i + j]; }

    Matrix2 operator*(const Matrix2& o) const {
        return Matrix2(at(0, 0) * o.at(0, 0) + at(0, 1) * o.at(1, 0),
                       at(0, 0) * o.at(0, 1) + at(0, 1) * o.at(1, 1),
                       at(1, 0) * o.at(0, 0) + at(1, 1) * o.at(1, 0),
                       at(1, 0) * o.at(0, 1) + at(1, 1) * o.at(1, 1));
    }

    Matrix2 operator+(const Matrix2& o) const {
        return Matrix2(at(0, 0) + o.at(0, 0), at(0, 1) + o.at(0, 1), at(1, 0) + o.at(1, 0),
                       at(1, 1) + o.at(1, 1));
    }

    Matrix2 scaled(const PAdicNumber& s) const {
        return Matrix2(s * at(0, 0), s * at(0, 1), s * at(1, 0), s * at(1, 1));
    }

    PAdicNumber det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

    /// Adjugate divided by the determinant; truncating at working precision.
    Matrix2 inverse() const {
        PAdicNumber d = det();
        if (d.is_zero()) throw ZeroWithinPrecision("singular matrix");
        PAdicNumber di = d.invert();
        return Matrix2(at(1, 1) * di, -at(0, 1) * di, -at(1, 0) * di, at(0, 0) * di);
    }

    bool operator==(const Matrix2& o) const {
        for (int i = 0; i < 4; ++i)
            if (!(e_[i] == o.e_[i])) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& x : e_)
            if (!x.is_integral()) return false;
        return true;
    }

    /// min valuation over non-zero entries; throws if all entries are zero.
    long min_val() const {
        bool seen = false;
        long m = 0;
        for (const auto& x : e_) {
            if (x.is_zero()) continue;
            long v = x.val();
            if (!seen || v < m) m = v;
            seen = true;
        }
        if (!seen) throw ZeroWithinPrecision("zero matrix has no valuation");
        return m;
    }

    std::string to_string() const {
        return "[[" + at(0, 0).to_string() + ", " + at(0, 1).to_string() + "], [" +
               at(1, 0).to_string() + ", " + at(1, 1).to_string() + "]]";
    }

private:
    std::array<PAdicNumber, 4> e_;
};

}  // namespace btsl
