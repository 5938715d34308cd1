#include "btsl/torus.hpp"

#include <algorithm>
#include <sstream>

namespace btsl {

TorusElement::TorusElement(const QuadExtElement& rep) : rep_(rep) {
    const auto& d = rep.data();
    if (d->is_split()) {
        if (rep.x().is_zero() || rep.y().is_zero())
            throw ZeroWithinPrecision("split torus element with zero coordinate");
        rep_ = QuadExtElement(d, rep.x() / rep.y(), PAdicNumber(rep.ctx(), 1));
        return;
    }
    if (rep.is_zero()) throw ZeroWithinPrecision("torus element from zero");
    long vx = rep.x().is_zero() ? std::numeric_limits<long>::max() : rep.x().val();
    long vy = rep.y().is_zero() ? std::numeric_limits<long>::max() : rep.y().val();
    if (vx <= vy) {
        // leading coordinate x; scale to x = 1
        PAdicNumber s = rep.x().invert();
        rep_ = QuadExtElement(d, PAdicNumber(rep.ctx(), 1), rep.y() * s);
    } else {
        PAdicNumber s = rep.y().invert();
        rep_ = QuadExtElement(d, rep.x() * s, PAdicNumber(rep.ctx(), 1));
    }
}

long TorusElement::split_val() const {
    if (!data()->is_split()) throw WrongSplittingType("split_val on non-split torus element");
    return rep_.x().val();
}

bool in_unit_subgroup(const TorusElement& t, long m) {
    const auto& d = t.data();
    if (d->is_split()) {
        const PAdicNumber& x = t.rep().x();
        if (x.val() != 0) return false;
        if (m <= 0) return true;
        return x.congruent_mod(PAdicNumber(x.ctx(), 1), m);
    }
    if (d->kind() == SplitKind::Inert && m <= 0) return true;
    // canonical form: x-leading (1, y) lies in U^{(m)} iff val(y) >= m;
    // y-leading (x, 1) classes never do (for ramified m = 0 they are the
    // pi_P coset).
    const PAdicNumber& x = t.rep().x();
    const PAdicNumber& y = t.rep().y();
    bool x_leading = !x.is_zero() && x.val() == 0 &&
                     (y.is_zero() || y.val() >= 0) && x == PAdicNumber(x.ctx(), 1);
    if (!x_leading) return false;
    if (m <= 0) return true;
    return y.is_zero() || y.val() >= m;
}

bool coset_equivalent(const TorusElement& t1, const TorusElement& t2, long m) {
    return in_unit_subgroup(t1 * t2.inverse(), m);
}

namespace {

Vertex base_vertex(const PrimeContext& ctx) { return Vertex(0, PAdicNumber(ctx)); }

}  // namespace

long level(const SplittingData& data, const Vertex& v) {
    switch (data.kind()) {
        case SplitKind::Split: {
            // distance to the apartment between the two fixed ends 0, inf
            long va = v.a().is_zero() ? v.n() : std::min(v.n(), v.a().val());
            return v.n() - va;
        }
        case SplitKind::Inert:
            return distance(v, base_vertex(data.ctx()));
        case SplitKind::Ramified: {
            Vertex w0 = base_vertex(data.ctx());
            Vertex wm1(1, PAdicNumber(data.ctx()));
            return std::min(distance(v, w0), distance(v, wm1));
        }
    }
    throw Error("unreachable");
}

bool torus_fixes(const TorusElement& t, const Vertex& v) {
    // g fixes v  <=>  A_v^{-1} g A_v lies in GL_2(Z_p) up to scalars; with
    // the canonical representative this is integrality + unit determinant
    // after clearing the minimal valuation.
    Matrix2 g = iota(t.rep());
    const PrimeContext& ctx = v.ctx();
    PAdicNumber pn = PAdicNumber(ctx, 1).shift(v.n());
    PAdicNumber pninv = PAdicNumber(ctx, 1).shift(-v.n());
    // A^{-1} = [[p^-n, -a p^-n], [0, 1]]
    Matrix2 Ainv(pninv, -(v.a() * pninv), PAdicNumber(ctx), PAdicNumber(ctx, 1));
    Matrix2 A(pn, v.a(), PAdicNumber(ctx), PAdicNumber(ctx, 1));
    Matrix2 B = Ainv * g * A;
    long mv = B.min_val();
    // scale to min valuation 0 (projective action)
    Matrix2 Bs = B.scaled(PAdicNumber(ctx, 1).shift(-mv));
    return Bs.is_integral() && !Bs.det().is_zero() && Bs.det().val() == 0;
}

long level_by_stabilizer(const SplittingDataPtr& data, const Vertex& v) {
    const PrimeContext& ctx = data->ctx();
    long depth = std::labs(v.n()) + (v.a().is_zero() ? 0 : std::max(0L, -v.a().val()));
    long span = depth + 2;
    mpz_class bound = ctx.pow(span);

    auto fixes_all = [&](long m) {
        if (data->is_split()) {
            for (mpz_class c = 0; c < bound; ++c) {
                mpz_class u = m == 0 ? c : 1 + ctx.pow(m) * c;
                if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ctx.p)))
                    continue;  // not a unit
                TorusElement t(data->from_pair(PAdicNumber(ctx, u), PAdicNumber(ctx, 1)));
                if (!torus_fixes(t, v)) return false;
            }
            return true;
        }
        // non-split: 1 + p^m c w over c, plus w itself at m = 0 (inert)
        for (mpz_class c = 0; c < bound; ++c) {
            QuadExtElement e = data->from_pair(PAdicNumber(ctx, 1),
                                               PAdicNumber(ctx, mpz_class(ctx.pow(m) * c)));
            if (!torus_fixes(TorusElement(e), v)) return false;
        }
        if (m == 0 && data->kind() == SplitKind::Inert)
            if (!torus_fixes(TorusElement(data->omega()), v)) return false;
        return true;
    };

    for (long m = 0;; ++m) {
        if (fixes_all(m)) return m;
        if (m > 2 * depth + 8)
            throw Error("stabilizer probe did not terminate at vertex " + v.to_string());
    }
}

ChainData::ChainData(SplittingDataPtr data, long depth) : data_(std::move(data)), depth_(depth) {
    if (depth < 1) throw Error("chain depth must be >= 1");
    const PrimeContext& ctx = data_->ctx();
    switch (data_->kind()) {
        case SplitKind::Inert: lowest_ = 0; break;
        case SplitKind::Ramified: lowest_ = -1; break;
        case SplitKind::Split: lowest_ = -depth; break;
    }
    ws_.assign(static_cast<size_t>(depth - lowest_ + 1), base_vertex(ctx));

    auto set_w = [&](long i, const Vertex& v) { ws_[static_cast<size_t>(i - lowest_)] = v; };

    set_w(0, base_vertex(ctx));
    if (data_->kind() == SplitKind::Ramified) {
        set_w(-1, act(iota(data_->uniformizer()), w(0)));
    } else if (data_->is_split()) {
        Matrix2 piinv = iota(data_->uniformizer().invert());
        Vertex cur = w(0);
        for (long j = 1; j <= depth; ++j) {
            cur = act(piinv, cur);
            set_w(-j, cur);
        }
    }
    for (long i = 1; i <= depth; ++i) {
        const Vertex& prev = w(i - 1);
        bool found = false;
        for (const Vertex& cand : neighbours(prev)) {
            if (cand.n() != prev.n() + 1) continue;  // least residue children, in order
            if (level(*data_, cand) == i) {
                set_w(i, cand);
                found = true;
                break;
            }
        }
        if (!found) throw Error("no eligible child at chain step " + std::to_string(i));
    }
}

const Vertex& ChainData::w(long i) const {
    if (i < lowest_ || i > depth_)
        throw Error("chain vertex w_" + std::to_string(i) + " outside built range [" +
                    std::to_string(lowest_) + ", " + std::to_string(depth_) + "]");
    return ws_[static_cast<size_t>(i - lowest_)];
}

PathN ChainData::base_path(long m, long n) const {
    if (n < 0) throw Error("base path needs n >= 0");
    if (!data_->eta_is_minus_infinity() && m - n < data_->eta())
        throw Error("base path (w_{m-n},...,w_m) requires m - n >= eta_p");
    std::vector<Vertex> vs;
    vs.reserve(static_cast<size_t>(n + 1));
    for (long i = m - n; i <= m; ++i) vs.push_back(w(i));
    return PathN(std::move(vs));
}

std::string ChainData::to_string() const {
    std::ostringstream os;
    for (long i = lowest_; i <= depth_; ++i)
        os << "w_" << i << " = " << w(i).to_string() << "\n";
    return os.str();
}

std::string path_key(const PathN& path) {
    std::ostringstream os;
    for (const auto& v : path.vertices()) {
        os << v.n() << ":";
        if (v.a().is_zero())
            os << "z";
        else
            os << v.a().val() << "." << v.a().unit_raw().get_str();
        os << ";";
    }
    return os.str();
}

void CosetSpace::index_rep(const TorusElement& t) {
    std::string key = coset_key(t);
    auto [it, fresh] = index_.emplace(key, static_cast<int>(reps_.size()));
    if (!fresh) throw Error("coset enumeration produced a duplicate representative");
    reps_.push_back(t);
}

std::string CosetSpace::coset_key(const TorusElement& t) const {
    return path_key(act(iota(t.rep()), key_path_));
}

int CosetSpace::index_of(const TorusElement& t) const {
    auto it = index_.find(coset_key(t));
    if (it == index_.end()) return -1;
    return it->second;
}

CosetSpace CosetSpace::enumerate(const ChainPtr& chain, long m) {
    const auto& data = chain->data();
    if (data->is_split()) throw WindowRequired("split coset space needs a valuation window");
    if (m < 0) throw Error("coset level must be >= 0");
    if (m + 1 > chain->depth())
        throw Error("chain too shallow for coset level " + std::to_string(m));

    CosetSpace cs(chain, m);
    // the stabilizer of (w_{eta}, ..., w_m) is exactly U^{(m)}, so path
    // images are faithful coset keys
    {
        std::vector<Vertex> vs;
        for (long i = data->eta(); i <= m; ++i) vs.push_back(chain->w(i));
        cs.key_path_ = PathN(std::move(vs));
    }
    const PrimeContext& ctx = data->ctx();

    // level tower: start at m = 0 and extend along U^{(j)}/U^{(j+1)}
    std::vector<TorusElement> cur;
    cur.emplace_back(data->one());
    if (data->kind() == SplitKind::Ramified) cur.emplace_back(data->uniformizer());
    for (long j = 1; j <= m; ++j) {
        std::vector<TorusElement> fiber;
        if (j == 1 && data->kind() == SplitKind::Inert) {
            // U^(0)/U^(1) has p + 1 classes: 1 + c w and w
            for (long c = 0; c < ctx.p; ++c)
                fiber.emplace_back(data->from_pair(1, c));
            fiber.emplace_back(data->omega());
        } else {
            for (long c = 0; c < ctx.p; ++c)
                fiber.emplace_back(
                    data->from_pair(PAdicNumber(ctx, 1), PAdicNumber(ctx, c).shift(j - 1)));
        }
        std::vector<TorusElement> next;
        next.reserve(cur.size() * fiber.size());
        for (const auto& r : cur)
            for (const auto& f : fiber) next.push_back(r * f);
        cur = std::move(next);
    }
    for (const auto& t : cur) cs.index_rep(t);

    // the group order is computed, not assumed
    size_t expected = data->kind() == SplitKind::Inert
                          ? (m == 0 ? 1 : static_cast<size_t>(ctx.p + 1) *
                                              static_cast<size_t>(mpz_class(ctx.pow(m - 1)).get_ui()))
                          : 2 * static_cast<size_t>(mpz_class(ctx.pow(m)).get_ui());
    if (cs.reps_.size() != expected)
        throw Error("coset count mismatch: got " + std::to_string(cs.reps_.size()) +
                    ", expected " + std::to_string(expected));
    return cs;
}

CosetSpace CosetSpace::enumerate(const ChainPtr& chain, long m, long k_min, long k_max) {
    const auto& data = chain->data();
    if (!data->is_split()) {
        // windows are a split-only concept; ignore and enumerate fully
        return enumerate(chain, m);
    }
    if (m < 0) throw Error("coset level must be >= 0");
    if (k_min > k_max) throw Error("empty valuation window");
    if (m + 1 > chain->depth())
        throw Error("chain too shallow for coset level " + std::to_string(m));

    CosetSpace cs(chain, m);
    cs.windowed_ = true;
    cs.k_min_ = k_min;
    cs.k_max_ = k_max;
    {
        std::vector<Vertex> vs;
        for (long i = -1; i <= m; ++i) vs.push_back(chain->w(i));
        cs.key_path_ = PathN(std::move(vs));
    }
    const PrimeContext& ctx = data->ctx();
    mpz_class pm = ctx.pow(m);
    for (long k = k_min; k <= k_max; ++k) {
        for (mpz_class u = 1; u < (m == 0 ? mpz_class(2) : pm); ++u) {
            if (m > 0 && mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ctx.p)))
                continue;
            PAdicNumber x(ctx, u);
            cs.index_rep(TorusElement(data->from_pair(x.shift(k), PAdicNumber(ctx, 1))));
        }
    }
    return cs;
}

BoundaryPoint kappa(const ChainData& chain, const TorusElement& t, long resolution) {
    Matrix2 g = iota(t.rep());
    Vertex prev = act(g, chain.w(1));
    for (long j = 2; j <= chain.depth(); ++j) {
        Vertex cur = act(g, chain.w(j));
        bool descending = cur.n() == prev.n() + 1 && cur.a().congruent_mod(prev.a(), prev.n());
        if (descending && prev.n() >= resolution) return BoundaryPoint(resolution, prev.a());
        // a geodesic climbing past depth -(resolution+1) agrees with the
        // infinite end on everything visible at this resolution
        if (cur.n() == prev.n() - 1 && cur.n() <= -(resolution + 1))
            return BoundaryPoint::infinity(resolution);
        prev = cur;
    }
    throw InsufficientPrecision("kappa: chain depth " + std::to_string(chain.depth()) +
                                " too small for resolution " + std::to_string(resolution));
}

std::vector<BoundaryPoint> fixed_ends(const SplittingData& data, long resolution) {
    if (!data.is_split()) return {};
    return {BoundaryPoint(resolution, PAdicNumber(data.ctx())),
            BoundaryPoint::infinity(resolution)};
}

}  // namespace btsl
