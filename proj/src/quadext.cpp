#include "btsl/quadext.hpp"

namespace btsl {

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::Split: return "split";
        case SplitKind::Inert: return "inert";
        case SplitKind::Ramified: return "ramified";
    }
    return "?";
}

SplitKind split_kind_from_string(const std::string& s) {
    if (s == "split") return SplitKind::Split;
    if (s == "inert") return SplitKind::Inert;
    if (s == "ramified") return SplitKind::Ramified;
    throw ConfigError("unknown splitting type '" + s + "'");
}

namespace {

long smallest_nonresidue(long p) {
    // p odd; brute force over the squares mod p
    std::vector<bool> sq(static_cast<size_t>(p), false);
    for (long a = 1; a < p; ++a) sq[static_cast<size_t>((a * a) % p)] = true;
    for (long u = 2; u < p; ++u)
        if (!sq[static_cast<size_t>(u)]) return u;
    throw Error("no quadratic non-residue found (p = " + std::to_string(p) + ")");
}

bool has_root_mod_p(long b, long c, long p) {
    for (long x = 0; x < p; ++x)
        if (((x * x + b * x + c) % p + p) % p == 0) return true;
    return false;
}

}  // namespace

std::shared_ptr<const SplittingData> SplittingData::make_split(const PrimeContext& ctx,
                                                               bool conjugate_prime) {
    PAdicNumber zero(ctx), one(ctx, 1);
    Matrix2 J = Matrix2::antidiag(one, one);
    auto d = std::shared_ptr<SplittingData>(
        new SplittingData(SplitKind::Split, ctx, zero, zero, J));
    d->conjugate_prime_ = conjugate_prime;
    d->verify_conjugation();
    return d;
}

std::shared_ptr<const SplittingData> SplittingData::make_inert(const PrimeContext& ctx) {
    long b, c;
    if (ctx.p == 2) {
        b = 1;
        c = 1;  // w^2 + w + 1
    } else {
        b = 0;
        c = -smallest_nonresidue(ctx.p);  // w^2 = u
    }
    if (has_root_mod_p(b, c, ctx.p)) throw Error("inert defining quadratic is reducible");
    // J = [[1, -b], [0, -1]] conjugates the regular representation onto its
    // Galois twist; equals diag(1,-1) whenever b = 0.
    Matrix2 J(PAdicNumber(ctx, 1), PAdicNumber(ctx, -b), PAdicNumber(ctx), PAdicNumber(ctx, -1));
    auto d = std::shared_ptr<SplittingData>(new SplittingData(
        SplitKind::Inert, ctx, PAdicNumber(ctx, b), PAdicNumber(ctx, c), J));
    d->verify_conjugation();
    return d;
}

std::shared_ptr<const SplittingData> SplittingData::make_ramified(const PrimeContext& ctx,
                                                                  long unit_scale) {
    if (unit_scale % ctx.p == 0) throw ConfigError("ramified unit scale must be prime to p");
    PAdicNumber b(ctx), c(ctx, -unit_scale * ctx.p);  // w^2 = u p, Eisenstein
    Matrix2 J(PAdicNumber(ctx, 1), PAdicNumber(ctx), PAdicNumber(ctx), PAdicNumber(ctx, -1));
    auto d = std::shared_ptr<SplittingData>(
        new SplittingData(SplitKind::Ramified, ctx, b, c, J));
    d->verify_conjugation();
    return d;
}

std::shared_ptr<const SplittingData> SplittingData::make(SplitKind kind, const PrimeContext& ctx,
                                                         bool conjugate_prime) {
    switch (kind) {
        case SplitKind::Split: return make_split(ctx, conjugate_prime);
        case SplitKind::Inert: return make_inert(ctx);
        case SplitKind::Ramified: return make_ramified(ctx);
    }
    throw ConfigError("bad splitting kind");
}

void SplittingData::verify_conjugation() const {
    auto self = std::shared_ptr<const SplittingData>(this, [](const SplittingData*) {});
    // deterministic spot checks; the full randomized invariant lives in tests
    std::vector<std::pair<long, long>> samples = {{1, 1}, {0, 1}, {2, 3}, {1, -2}, {5, 7}};
    Matrix2 Jinv = J_.inverse();
    for (auto [a, b] : samples) {
        QuadExtElement e(self, PAdicNumber(ctx_, a), PAdicNumber(ctx_, b));
        Matrix2 lhs = J_ * iota(e) * Jinv;
        Matrix2 rhs = iota(galois_conj(e));
        if (!(lhs == rhs))
            throw Error("conjugation matrix J fails J i(e) J^-1 = i(tau(e)) at e = " +
                        e.to_string());
    }
}

const PAdicNumber& SplittingData::min_b() const {
    if (is_split()) throw WrongSplittingType("split algebra has no defining quadratic");
    return b_;
}

const PAdicNumber& SplittingData::min_c() const {
    if (is_split()) throw WrongSplittingType("split algebra has no defining quadratic");
    return c_;
}

QuadExtElement SplittingData::uniformizer() const {
    auto self = shared_from_this();
    switch (kind_) {
        case SplitKind::Split:
            // (p, 1), or (1, p) when the conjugate prime was chosen
            return conjugate_prime_
                       ? QuadExtElement(self, PAdicNumber(ctx_, 1), PAdicNumber(ctx_, ctx_.p))
                       : QuadExtElement(self, PAdicNumber(ctx_, ctx_.p), PAdicNumber(ctx_, 1));
        case SplitKind::Inert:
            return QuadExtElement(self, PAdicNumber(ctx_, ctx_.p), PAdicNumber(ctx_));
        case SplitKind::Ramified:
            return QuadExtElement(self, PAdicNumber(ctx_), PAdicNumber(ctx_, 1));
    }
    throw Error("unreachable");
}

QuadExtElement SplittingData::one() const {
    auto self = shared_from_this();
    if (is_split())
        return QuadExtElement(self, PAdicNumber(ctx_, 1), PAdicNumber(ctx_, 1));
    return QuadExtElement(self, PAdicNumber(ctx_, 1), PAdicNumber(ctx_));
}

QuadExtElement SplittingData::zero() const {
    auto self = shared_from_this();
    return QuadExtElement(self, PAdicNumber(ctx_), PAdicNumber(ctx_));
}

QuadExtElement SplittingData::omega() const {
    if (is_split()) throw WrongSplittingType("split algebra has no omega");
    return QuadExtElement(shared_from_this(), PAdicNumber(ctx_), PAdicNumber(ctx_, 1));
}

QuadExtElement SplittingData::from_pair(const PAdicNumber& x, const PAdicNumber& y) const {
    return QuadExtElement(shared_from_this(), x, y);
}

QuadExtElement SplittingData::from_pair(long x, long y) const {
    return QuadExtElement(shared_from_this(), PAdicNumber(ctx_, x), PAdicNumber(ctx_, y));
}

int SplittingData::eta() const {
    switch (kind_) {
        case SplitKind::Inert: return 0;
        case SplitKind::Ramified: return -1;
        case SplitKind::Split:
            throw WrongSplittingType("eta_p is -infinity for split p");
    }
    throw Error("unreachable");
}

QuadExtElement QuadExtElement::operator+(const QuadExtElement& o) const {
    return QuadExtElement(data_, x_ + o.x_, y_ + o.y_);
}

QuadExtElement QuadExtElement::operator-(const QuadExtElement& o) const {
    return QuadExtElement(data_, x_ - o.x_, y_ - o.y_);
}

QuadExtElement QuadExtElement::operator-() const { return QuadExtElement(data_, -x_, -y_); }

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
    if (data_->is_split())
        return QuadExtElement(data_, x_ * o.x_, y_ * o.y_);
    // (x1 + y1 w)(x2 + y2 w) with w^2 = -b w - c
    const PAdicNumber& b = data_->min_b();
    const PAdicNumber& c = data_->min_c();
    PAdicNumber yy = y_ * o.y_;
    return QuadExtElement(data_, x_ * o.x_ - c * yy, x_ * o.y_ + y_ * o.x_ - b * yy);
}

QuadExtElement QuadExtElement::invert() const {
    if (data_->is_split()) {
        return QuadExtElement(data_, x_.invert(), y_.invert());
    }
    PAdicNumber n = reduced_norm(*this);
    if (n.is_zero()) throw ZeroWithinPrecision("inverting zero-norm element");
    PAdicNumber ni = n.invert();
    QuadExtElement conj = galois_conj(*this);
    return QuadExtElement(data_, conj.x() * ni, conj.y() * ni);
}

QuadExtElement QuadExtElement::pow(long k) const {
    QuadExtElement base = k >= 0 ? *this : invert();
    long e = k >= 0 ? k : -k;
    QuadExtElement acc = data_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool QuadExtElement::operator==(const QuadExtElement& o) const {
    return data_->kind() == o.data_->kind() && x_ == o.x_ && y_ == o.y_;
}

std::string QuadExtElement::to_string() const {
    if (data_->is_split()) return "(" + x_.to_string() + ", " + y_.to_string() + ")";
    return x_.to_string() + " + (" + y_.to_string() + ")*w";
}

QuadExtElement galois_conj(const QuadExtElement& e) {
    const auto& d = e.data();
    if (d->is_split()) return QuadExtElement(d, e.y(), e.x());
    // tau(w) = -b - w
    return QuadExtElement(d, e.x() - d->min_b() * e.y(), -e.y());
}

PAdicNumber reduced_norm(const QuadExtElement& e) {
    const auto& d = e.data();
    if (d->is_split()) return e.x() * e.y();
    // N(x + y w) = x^2 - b x y + c y^2
    return e.x() * e.x() - d->min_b() * e.x() * e.y() + d->min_c() * e.y() * e.y();
}

PAdicNumber trace(const QuadExtElement& e) {
    const auto& d = e.data();
    if (d->is_split()) return e.x() + e.y();
    return e.x() + e.x() - d->min_b() * e.y();
}

Matrix2 iota(const QuadExtElement& e) {
    const auto& d = e.data();
    if (d->is_split()) return Matrix2::diag(e.x(), e.y());
    return Matrix2(e.x(), -(d->min_c() * e.y()), e.y(), e.x() - d->min_b() * e.y());
}

}  // namespace btsl
