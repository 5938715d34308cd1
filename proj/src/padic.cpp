#include "btsl/padic.hpp"

#include <algorithm>
#include <sstream>

namespace btsl {

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeContext::PrimeContext(long p_, int precision_) : p(p_), precision(precision_) {
    if (!is_prime_long(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
    if (precision < 1) throw ConfigError("precision must be >= 1");
}

mpz_class PrimeContext::pow(long k) const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

PAdicNumber::PAdicNumber(const PrimeContext& ctx) : ctx_(ctx) {}

PAdicNumber::PAdicNumber(const PrimeContext& ctx, const mpz_class& num, long denom_exp)
    : ctx_(ctx) {
    canonicalize_from(num, denom_exp);
}

PAdicNumber::PAdicNumber(const PrimeContext& ctx, long num, long denom_exp) : ctx_(ctx) {
    canonicalize_from(mpz_class(num), denom_exp);
}

void PAdicNumber::canonicalize_from(const mpz_class& num, long denom_exp) {
    if (num == 0) {
        zero_ = true;
        return;
    }
    mpz_class u = num;
    long k = 0;
    // strip p-powers from the numerator
    mpz_class q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(),
                       static_cast<unsigned long>(ctx_.p));
        if (r != 0) break;
        u = q;
        ++k;
    }
    zero_ = false;
    val_ = k - denom_exp;
    unit_ = u;
    prec_ = kExact;
}

PAdicNumber PAdicNumber::make_raw(const PrimeContext& ctx, long val, const mpz_class& unit,
                                  int32_t prec) {
    PAdicNumber x(ctx);
    x.zero_ = false;
    x.val_ = val;
    x.unit_ = unit;
    x.prec_ = prec;
    return x;
}

long PAdicNumber::val() const {
    if (zero_) throw ZeroWithinPrecision("valuation of exact zero requested");
    return val_;
}

mpz_class PAdicNumber::unit_canonical() const {
    if (zero_) return 0;
    long w = std::min<long>(prec_, ctx_.precision);
    mpz_class m = ctx_.pow(w);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    if (r == 0) r = m;  // cannot happen for a true unit, kept for safety
    return r;
}

PAdicNumber PAdicNumber::operator-() const {
    if (zero_) return *this;
    return make_raw(ctx_, val_, -unit_, prec_);
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& o) const {
    if (ctx_ != o.ctx_) throw Error("mixed prime contexts");
    if (zero_) return o;
    if (o.zero_) return *this;
    long v = std::min(val_, o.val_);
    mpz_class s = unit_ * ctx_.pow(val_ - v) + o.unit_ * ctx_.pow(o.val_ - v);
    // certified digit window of the sum, measured from p^v
    long wa = prec_ == kExact ? kExact : prec_ + (val_ - v);
    long wb = o.prec_ == kExact ? kExact : o.prec_ + (o.val_ - v);
    long w = std::min(wa, wb);
    if (s == 0) {
        if (w == kExact) return PAdicNumber(ctx_);  // exact cancellation
        throw InsufficientPrecision("sum cancels all certified digits");
    }
    mpz_class u = s;
    long k = 0;
    mpz_class q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(),
                       static_cast<unsigned long>(ctx_.p));
        if (r != 0) break;
        u = q;
        ++k;
    }
    if (w != kExact && k >= w)
        throw InsufficientPrecision("cancellation of " + std::to_string(k) +
                                    " digits exceeds certified window " + std::to_string(w));
    int32_t prec = w == kExact ? kExact : static_cast<int32_t>(w - k);
    return make_raw(ctx_, v + k, u, prec);
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& o) const { return *this + (-o); }

PAdicNumber PAdicNumber::operator*(const PAdicNumber& o) const {
    if (ctx_ != o.ctx_) throw Error("mixed prime contexts");
    if (zero_ || o.zero_) return PAdicNumber(ctx_);
    return make_raw(ctx_, val_ + o.val_, unit_ * o.unit_, std::min(prec_, o.prec_));
}

PAdicNumber PAdicNumber::invert() const {
    if (zero_) throw ZeroWithinPrecision("invert(0)");
    if (unit_ == 1 || unit_ == -1) return make_raw(ctx_, -val_, unit_, prec_);
    long w = std::min<long>(prec_, ctx_.precision);
    mpz_class m = ctx_.pow(w);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("unit not invertible (internal canonical form violated)");
    return make_raw(ctx_, -val_, inv, static_cast<int32_t>(w));
}

PAdicNumber PAdicNumber::operator/(const PAdicNumber& o) const {
    if (o.zero_) throw ZeroWithinPrecision("division by exact zero");
    if (zero_) return *this;
    if (mpz_divisible_p(unit_.get_mpz_t(), o.unit_.get_mpz_t())) {
        mpz_class q = unit_ / o.unit_;
        return make_raw(ctx_, val_ - o.val_, q, std::min(prec_, o.prec_));
    }
    return *this * o.invert();
}

PAdicNumber PAdicNumber::shift(long k) const {
    if (zero_) return *this;
    return make_raw(ctx_, val_ + k, unit_, prec_);
}

bool PAdicNumber::operator==(const PAdicNumber& o) const {
    if (ctx_ != o.ctx_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    if (val_ != o.val_) return false;
    long w = std::min<long>({static_cast<long>(prec_), static_cast<long>(o.prec_),
                             static_cast<long>(ctx_.precision)});
    mpz_class m = ctx_.pow(w);
    return mpz_congruent_p(unit_.get_mpz_t(), o.unit_.get_mpz_t(), m.get_mpz_t()) != 0;
}

bool PAdicNumber::congruent_mod(const PAdicNumber& o, long k) const {
    // decide whether val(x - y) >= k
    if (zero_ && o.zero_) return true;
    auto check_single = [&](const PAdicNumber& x) {
        // x == 0 mod p^k  <=>  val >= k; needs certification only when val < k
        if (x.zero_) return true;
        if (x.val_ >= k) return true;
        return false;
    };
    if (zero_) return check_single(o);
    if (o.zero_) return check_single(*this);
    long v = std::min(val_, o.val_);
    if (v >= k) return true;
    // each operand must be certified down to depth k
    if (prec_ != kExact && val_ + prec_ < k)
        throw InsufficientPrecision("congruence mod p^" + std::to_string(k) +
                                    " undecidable at certified precision");
    if (o.prec_ != kExact && o.val_ + o.prec_ < k)
        throw InsufficientPrecision("congruence mod p^" + std::to_string(k) +
                                    " undecidable at certified precision");
    mpz_class lhs = unit_ * ctx_.pow(val_ - v);
    mpz_class rhs = o.unit_ * ctx_.pow(o.val_ - v);
    mpz_class m = ctx_.pow(k - v);
    return mpz_congruent_p(lhs.get_mpz_t(), rhs.get_mpz_t(), m.get_mpz_t()) != 0;
}

PAdicNumber PAdicNumber::canonical_mod(long k) const {
    if (zero_) return *this;
    if (val_ >= k) return PAdicNumber(ctx_);
    long digits = k - val_;
    if (prec_ != kExact && prec_ < digits)
        throw InsufficientPrecision("reduction mod p^" + std::to_string(k) + " needs " +
                                    std::to_string(digits) + " digits, have " +
                                    std::to_string(prec_));
    mpz_class m = ctx_.pow(digits);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    // r is coprime to p and in [1, p^digits); the result is the exact
    // rational p^val * r, a canonical representative of the class.
    PAdicNumber out(ctx_);
    out.zero_ = false;
    out.val_ = val_;
    out.unit_ = r;
    out.prec_ = kExact;
    return out;
}

std::string PAdicNumber::to_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << ctx_.p << "^" << val_ << "*" << unit_canonical().get_str();
    return os.str();
}

int PAdicNumber::compare_key(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.zero_ != b.zero_) return a.zero_ ? -1 : 1;
    if (a.zero_) return 0;
    if (a.val_ != b.val_) return a.val_ < b.val_ ? -1 : 1;
    mpz_class ua = a.unit_canonical(), ub = b.unit_canonical();
    return mpz_cmp(ua.get_mpz_t(), ub.get_mpz_t());
}

}  // namespace btsl
