#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btsl/mat2.hpp"
#include "btsl/padic.hpp"

namespace btsl {

/// Vertex of the Bruhat-Tits tree of PGL_2(Q_p) in the ball model: the pair
/// (n, a mod p^n) stands for the lattice class spanned by the columns of
/// [[p^n, a], [0, 1]].  The representative a is kept canonically reduced.
class Vertex {
public:
    Vertex(long n, const PAdicNumber& a) : n_(n), a_(a.canonical_mod(n)) {}

    long n() const { return n_; }
    const PAdicNumber& a() const { return a_; }
    const PrimeContext& ctx() const { return a_.ctx(); }

    bool operator==(const Vertex& o) const {
        return n_ == o.n_ && PAdicNumber::compare_key(a_, o.a_) == 0;
    }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    bool operator<(const Vertex& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return PAdicNumber::compare_key(a_, o.a_) < 0;
    }

    std::string to_string() const { return "(" + std::to_string(n_) + ", " + a_.to_string() + ")"; }

private:
    long n_;
    PAdicNumber a_;
};

/// Oriented edge; (v, v') and (v', v) are distinct.
struct EdgeT {
    Vertex from;
    Vertex to;

    EdgeT(Vertex f, Vertex t);

    bool operator==(const EdgeT& o) const { return from == o.from && to == o.to; }
    bool operator<(const EdgeT& o) const {
        if (!(from == o.from)) return from < o.from;
        return to < o.to;
    }
    EdgeT reversed() const { return EdgeT(to, from); }
    std::string to_string() const { return from.to_string() + "->" + to.to_string(); }
};

/// Non-backtracking path (v_0, ..., v_n).
class PathN {
public:
    explicit PathN(std::vector<Vertex> vs);

    size_t length() const { return verts_.size() - 1; }  // number of edges
    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& operator[](size_t i) const { return verts_[i]; }
    const Vertex& front() const { return verts_.front(); }
    const Vertex& back() const { return verts_.back(); }

    PathN reversed() const;

    bool operator==(const PathN& o) const { return verts_ == o.verts_; }
    bool operator<(const PathN& o) const;

    std::string to_string() const;

private:
    std::vector<Vertex> verts_;
};

/// End of the tree at finite resolution: either the distinguished end
/// "infinity" or a class a mod p^k of Q_p, identified with P^1(Q_p).
class BoundaryPoint {
public:
    static BoundaryPoint infinity(long resolution);
    BoundaryPoint(long resolution, const PAdicNumber& value);

    long resolution() const { return k_; }
    bool is_infinity() const { return inf_; }
    const PAdicNumber& value() const;

    /// Image at a coarser resolution k' <= k.
    BoundaryPoint at_resolution(long k) const;

    bool operator==(const BoundaryPoint& o) const;
    std::string to_string() const;

private:
    BoundaryPoint() = default;
    long k_ = 1;
    bool inf_ = false;
    std::optional<PAdicNumber> val_;
};

/// The p+1 neighbours: the parent (n-1, a) and the children (n+1, a + c p^n).
std::vector<Vertex> neighbours(const Vertex& v);

bool adjacent(const Vertex& v, const Vertex& w);

/// Graph distance via the deepest common ancestor in the ball model.
long distance(const Vertex& v, const Vertex& w);

/// Left action of GL_2(Q_p) on lattice classes, by column Hermite reduction
/// over Z_p.  Requires an invertible g; with truncated entries the certified
/// precision must exceed |n| + 2|val(det g)| + 4.
Vertex act(const Matrix2& g, const Vertex& v);

PathN act(const Matrix2& g, const PathN& path);

/// Membership of a boundary point in U(e), the set of ends with a
/// representative through e.  Throws InsufficientResolution when the point
/// is not resolved deep enough to decide.
bool end_ball_contains(const EdgeT& e, const BoundaryPoint& pt);

/// All vertices at distance <= radius from center (breadth-first).
std::vector<Vertex> ball(const Vertex& center, long radius);

/// All vertices at distance exactly radius from center.
std::vector<Vertex> sphere(const Vertex& center, long radius);

}  // namespace btsl
