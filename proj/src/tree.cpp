#include "btsl/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace btsl {

EdgeT::EdgeT(Vertex f, Vertex t) : from(std::move(f)), to(std::move(t)) {
    if (!adjacent(from, to))
        throw Error("EdgeT endpoints are not adjacent: " + from.to_string() + ", " +
                    to.to_string());
}

PathN::PathN(std::vector<Vertex> vs) : verts_(std::move(vs)) {
    if (verts_.empty()) throw Error("empty path");
    for (size_t i = 0; i + 1 < verts_.size(); ++i)
        if (!adjacent(verts_[i], verts_[i + 1]))
            throw Error("path vertices not adjacent at position " + std::to_string(i));
    for (size_t i = 0; i + 2 < verts_.size(); ++i)
        if (verts_[i] == verts_[i + 2])
            throw Error("path backtracks at position " + std::to_string(i));
}

PathN PathN::reversed() const {
    std::vector<Vertex> r(verts_.rbegin(), verts_.rend());
    return PathN(std::move(r));
}

bool PathN::operator<(const PathN& o) const {
    return std::lexicographical_compare(verts_.begin(), verts_.end(), o.verts_.begin(),
                                        o.verts_.end());
}

std::string PathN::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < verts_.size(); ++i) os << (i ? " ~ " : "") << verts_[i].to_string();
    return os.str();
}

BoundaryPoint BoundaryPoint::infinity(long resolution) {
    BoundaryPoint b;
    b.k_ = resolution;
    b.inf_ = true;
    return b;
}

BoundaryPoint::BoundaryPoint(long resolution, const PAdicNumber& value) {
    if (resolution < 1) throw Error("boundary point resolution must be >= 1");
    k_ = resolution;
    inf_ = false;
    val_ = value.canonical_mod(resolution);
}

const PAdicNumber& BoundaryPoint::value() const {
    if (inf_) throw Error("the infinite end has no p-adic value");
    return *val_;
}

BoundaryPoint BoundaryPoint::at_resolution(long k) const {
    if (k > k_)
        throw InsufficientResolution("refining a boundary point from resolution " +
                                     std::to_string(k_) + " to " + std::to_string(k));
    if (inf_) return infinity(k);
    return BoundaryPoint(k, *val_);
}

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
    if (k_ != o.k_ || inf_ != o.inf_) return false;
    if (inf_) return true;
    return PAdicNumber::compare_key(*val_, *o.val_) == 0;
}

std::string BoundaryPoint::to_string() const {
    if (inf_) return "inf";
    return val_->to_string() + " mod p^" + std::to_string(k_);
}

std::vector<Vertex> neighbours(const Vertex& v) {
    const PrimeContext& ctx = v.ctx();
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(ctx.p) + 1);
    out.emplace_back(v.n() - 1, v.a());
    for (long c = 0; c < ctx.p; ++c) {
        PAdicNumber shift(ctx, c);
        out.emplace_back(v.n() + 1, v.a() + shift.shift(v.n()));
    }
    return out;
}

bool adjacent(const Vertex& v, const Vertex& w) { return distance(v, w) == 1; }

long distance(const Vertex& v, const Vertex& w) {
    long lo = std::min(v.n(), w.n());
    PAdicNumber d = v.a() - w.a();
    long meet = d.is_zero() ? lo : std::min(lo, d.val());
    return (v.n() - meet) + (w.n() - meet);
}

Vertex act(const Matrix2& g, const Vertex& v) {
    const PrimeContext& ctx = v.ctx();
    PAdicNumber det = g.det();
    if (det.is_zero()) throw ZeroWithinPrecision("acting by a singular matrix");
    // stated margin for truncated inputs
    long margin = std::labs(v.n()) + 2 * std::labs(det.val()) + 4;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const PAdicNumber& e = g.at(i, j);
            if (!e.is_zero() && !e.is_exact() && e.prec() < margin)
                throw InsufficientPrecision("matrix entries certified to " +
                                            std::to_string(e.prec()) + " digits, need " +
                                            std::to_string(margin));
        }

    PAdicNumber pn(ctx, 1);
    pn = pn.shift(v.n());
    // columns of g * [[p^n, a], [0, 1]]
    PAdicNumber c1top = g.at(0, 0) * pn, c1bot = g.at(1, 0) * pn;
    PAdicNumber c2top = g.at(0, 0) * v.a() + g.at(0, 1);
    PAdicNumber c2bot = g.at(1, 0) * v.a() + g.at(1, 1);

    // pivot = bottom entry of minimal valuation, ties to column 1
    bool pivot_is_c1;
    if (c1bot.is_zero())
        pivot_is_c1 = false;
    else if (c2bot.is_zero())
        pivot_is_c1 = true;
    else
        pivot_is_c1 = c1bot.val() <= c2bot.val();

    PAdicNumber ptop = pivot_is_c1 ? c1top : c2top;
    PAdicNumber pbot = pivot_is_c1 ? c1bot : c2bot;
    PAdicNumber otop = pivot_is_c1 ? c2top : c1top;
    PAdicNumber obot = pivot_is_c1 ? c2bot : c1bot;
    if (pbot.is_zero()) throw ZeroWithinPrecision("lattice image degenerate");

    // clear the other column's bottom entry; it is zero by construction
    if (!obot.is_zero()) {
        PAdicNumber q = obot / pbot;
        otop = otop - q * ptop;
    }
    if (otop.is_zero()) throw ZeroWithinPrecision("lattice image degenerate");

    long nprime = otop.val() - pbot.val();
    PAdicNumber aprime = ptop / pbot;
    return Vertex(nprime, aprime);
}

PathN act(const Matrix2& g, const PathN& path) {
    std::vector<Vertex> out;
    out.reserve(path.vertices().size());
    for (const auto& v : path.vertices()) out.push_back(act(g, v));
    return PathN(std::move(out));
}

bool end_ball_contains(const EdgeT& e, const BoundaryPoint& pt) {
    bool downward = e.to.n() == e.from.n() + 1;
    if (downward) {
        if (pt.is_infinity()) return false;
        long depth = e.to.n();
        if (pt.resolution() < depth)
            throw InsufficientResolution("edge at depth " + std::to_string(depth) +
                                         ", point resolved mod p^" +
                                         std::to_string(pt.resolution()));
        return pt.value().congruent_mod(e.to.a(), depth);
    }
    // upward edge: complement of the ball of e.from, plus the infinite end
    if (pt.is_infinity()) return true;
    long depth = e.from.n();
    if (pt.resolution() < depth)
        throw InsufficientResolution("edge at depth " + std::to_string(depth) +
                                     ", point resolved mod p^" + std::to_string(pt.resolution()));
    return !pt.value().congruent_mod(e.from.a(), depth);
}

std::vector<Vertex> ball(const Vertex& center, long radius) {
    std::vector<Vertex> frontier{center};
    std::set<Vertex> seen{center};
    std::vector<Vertex> out{center};
    for (long r = 0; r < radius; ++r) {
        std::vector<Vertex> next;
        for (const auto& v : frontier)
            for (const auto& w : neighbours(v))
                if (seen.insert(w).second) {
                    next.push_back(w);
                    out.push_back(w);
                }
        frontier = std::move(next);
    }
    return out;
}

std::vector<Vertex> sphere(const Vertex& center, long radius) {
    std::vector<Vertex> frontier{center};
    std::set<Vertex> seen{center};
    for (long r = 0; r < radius; ++r) {
        std::vector<Vertex> next;
        for (const auto& v : frontier)
            for (const auto& w : neighbours(v))
                if (seen.insert(w).second) next.push_back(w);
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace btsl
