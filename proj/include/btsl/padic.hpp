#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "btsl/errors.hpp"

namespace btsl {

/// The prime p and the working precision N (number of significant p-adic
/// digits every inexact value is certified to carry).
struct PrimeContext {
    long p = 2;
    int precision = 32;

    PrimeContext() = default;
    PrimeContext(long p_, int precision_);

    bool operator==(const PrimeContext&) const = default;

    /// p^k as an exact integer, k >= 0.
    mpz_class pow(long k) const;
};

/// Element of Q_p in canonical form  value = p^val * unit  with unit coprime
/// to p.  Units are stored as exact integers; `prec` records how many leading
/// p-adic digits of the unit are certified.  Values constructed from
/// rationals are exact (prec = kExact) and stay exact under ring operations;
/// division generally truncates to the working precision N.  Any operation
/// that would leave fewer than one certified digit throws
/// InsufficientPrecision instead of returning junk.
class PAdicNumber {
public:
    static constexpr int32_t kExact = std::numeric_limits<int32_t>::max();

    /// Exact zero.
    explicit PAdicNumber(const PrimeContext& ctx);

    /// normalize: exact rational num / p^denom_exp -> canonical form.
    PAdicNumber(const PrimeContext& ctx, const mpz_class& num, long denom_exp = 0);
    PAdicNumber(const PrimeContext& ctx, long num, long denom_exp = 0);

    const PrimeContext& ctx() const { return ctx_; }
    bool is_zero() const { return zero_; }
    bool is_exact() const { return zero_ || prec_ == kExact; }

    /// p-adic valuation; throws on exact zero (valuation is +infinity).
    long val() const;
    /// Certified relative precision (number of correct unit digits).
    int32_t prec() const { return zero_ ? kExact : prec_; }
    /// Exact stored unit (coprime to p, may be negative / larger than p^N).
    const mpz_class& unit_raw() const { return unit_; }

    /// Canonical unit representative in [1, p^min(prec,N)).
    mpz_class unit_canonical() const;

    PAdicNumber operator-() const;
    PAdicNumber operator+(const PAdicNumber& o) const;
    PAdicNumber operator-(const PAdicNumber& o) const;
    PAdicNumber operator*(const PAdicNumber& o) const;
    /// Truncating division (exact when the unit quotient is an integer).
    PAdicNumber operator/(const PAdicNumber& o) const;

    PAdicNumber& operator+=(const PAdicNumber& o) { return *this = *this + o; }
    PAdicNumber& operator-=(const PAdicNumber& o) { return *this = *this - o; }
    PAdicNumber& operator*=(const PAdicNumber& o) { return *this = *this * o; }
    PAdicNumber& operator/=(const PAdicNumber& o) { return *this = *this / o; }

    /// x^-1 truncated to precision N; throws ZeroWithinPrecision on zero.
    PAdicNumber invert() const;

    /// x * p^k, exact shift.
    PAdicNumber shift(long k) const;

    /// Equality at working precision: valuations equal and units congruent
    /// mod p^w, w = min(prec_a, prec_b, N).
    bool operator==(const PAdicNumber& o) const;
    bool operator!=(const PAdicNumber& o) const { return !(*this == o); }

    /// True iff x == y mod p^k (absolute congruence).  Throws if the inputs
    /// are not certified deep enough to decide.
    bool congruent_mod(const PAdicNumber& o, long k) const;

    /// Canonical representative of the class mod p^k: the unique exact value
    /// with unit in [0, p^(k - val)) or exact zero when val >= k.
    PAdicNumber canonical_mod(long k) const;

    /// Integrality test: val >= 0 (zero counts as integral).
    bool is_integral() const { return zero_ || val_ >= 0; }

    std::string to_string() const;

    /// Total order on canonical forms; only used for deterministic keys in
    /// maps, no p-adic meaning.
    static int compare_key(const PAdicNumber& a, const PAdicNumber& b);

private:
    PrimeContext ctx_;
    bool zero_ = true;
    long val_ = 0;
    mpz_class unit_ = 0;
    int32_t prec_ = kExact;

    void canonicalize_from(const mpz_class& num, long denom_exp);
    static PAdicNumber make_raw(const PrimeContext& ctx, long val, const mpz_class& unit,
                                int32_t prec);
};

}  // namespace btsl
