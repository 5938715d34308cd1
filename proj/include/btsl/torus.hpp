#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "btsl/quadext.hpp"
#include "btsl/tree.hpp"

namespace btsl {

/// Element of T_p = E_p^* / F_p^*, stored as a canonically scaled
/// representative: split (t, 1) with t in F_p^*; non-split scaled so that
/// min(val x, val y) = 0 and the leading coordinate (x if it is a unit,
/// else y) equals 1.
class TorusElement {
public:
    explicit TorusElement(const QuadExtElement& rep);

    const QuadExtElement& rep() const { return rep_; }
    const SplittingDataPtr& data() const { return rep_.data(); }

    TorusElement operator*(const TorusElement& o) const { return TorusElement(rep_ * o.rep_); }
    TorusElement inverse() const { return TorusElement(rep_.invert()); }
    TorusElement pow(long k) const { return TorusElement(rep_.pow(k)); }

    bool operator==(const TorusElement& o) const { return rep_ == o.rep_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    /// Split only: the valuation of the F_p^*-coordinate.
    long split_val() const;

    std::string to_string() const { return rep_.to_string(); }

private:
    QuadExtElement rep_;
};

/// Membership in U_T^{(m)}, the image of the units of O_F + p^m O_E.
bool in_unit_subgroup(const TorusElement& t, long m);

/// t1 and t2 represent the same class mod U_T^{(m)}.
bool coset_equivalent(const TorusElement& t1, const TorusElement& t2, long m);

/// The distinguished vertices w_i with l_p(w_i) = i (i >= 0), w_{-1} for
/// ramified p and w_{-j} = pi_P^{-j} w_0 for split p.  Built depth-first with
/// the lexicographically least eligible child at every step.
class ChainData {
public:
    ChainData(SplittingDataPtr data, long depth);

    const SplittingDataPtr& data() const { return data_; }
    long depth() const { return depth_; }
    long lowest() const { return lowest_; }

    const Vertex& w(long i) const;

    /// Base path (w_{m-n}, ..., w_m) of the boundary map at level m.
    PathN base_path(long m, long n) const;

    std::string to_string() const;

private:
    SplittingDataPtr data_;
    long depth_;
    long lowest_;
    std::vector<Vertex> ws_;  // ws_[i - lowest_] = w_i
};

using ChainPtr = std::shared_ptr<const ChainData>;

/// l_p(v): the level of the stabilizer of v, computed from the geometry of
/// the fixed-point set of T_p (center w_0 for inert, the edge {w_0, w_{-1}}
/// for ramified, the standard apartment for split).
long level(const SplittingData& data, const Vertex& v);

/// Literal stabilizer probe: smallest m such that every sampled topological
/// generator of U^{(m)} (1 + p^m c w, c over residues mod p^{depth+2},
/// together with w itself where needed) fixes v.  Used to cross-validate
/// level(); degenerate for p = 2 split where U^{(0)} = U^{(1)}.
long level_by_stabilizer(const SplittingDataPtr& data, const Vertex& v);

/// Whether the torus element fixes the vertex (exact integrality test).
bool torus_fixes(const TorusElement& t, const Vertex& v);

/// Complete list of coset representatives of T_p/U^{(m)}; split spaces are
/// infinite and require an explicit valuation window [k_min, k_max].
class CosetSpace {
public:
    static CosetSpace enumerate(const ChainPtr& chain, long m);
    static CosetSpace enumerate(const ChainPtr& chain, long m, long k_min, long k_max);

    long m() const { return m_; }
    SplitKind kind() const { return chain_->data()->kind(); }
    const ChainPtr& chain() const { return chain_; }
    size_t size() const { return reps_.size(); }
    const std::vector<TorusElement>& reps() const { return reps_; }
    const TorusElement& rep(size_t i) const { return reps_[i]; }

    bool has_window() const { return windowed_; }
    long k_min() const { return k_min_; }
    long k_max() const { return k_max_; }

    /// Index of the coset of t; -1 if t falls outside the window.
    int index_of(const TorusElement& t) const;

    /// Canonical key of the coset of t (image of the defining base path).
    std::string coset_key(const TorusElement& t) const;

private:
    CosetSpace(ChainPtr chain, long m) : chain_(std::move(chain)), m_(m) {}
    void index_rep(const TorusElement& t);

    ChainPtr chain_;
    long m_;
    bool windowed_ = false;
    long k_min_ = 0, k_max_ = 0;
    std::vector<TorusElement> reps_;
    std::map<std::string, int> index_;
    PathN key_path_ = PathN({Vertex(0, PAdicNumber(PrimeContext()))});  // set by enumerate
};

/// Representatives of U^{(l)} / U^{(l+1)} inside T_p.
std::vector<TorusElement> fiber_reps(const SplittingDataPtr& data, long l);

/// Exhaustive check of the neighbour classification on the ball of the given
/// radius around w_0: counts of lower-level neighbours per splitting type,
/// the uniformizer formula for the level-zero ones, and simple transitivity
/// of U^{(l)}/U^{(l+1)} on the level-(l+1) neighbours.  Throws on the first
/// violation.
void check_neighbours_census(const SplittingDataPtr& data, long radius);

/// Checks that the stabilizer of (w_{m-n}, ..., w_m) among the enumerated
/// cosets of T_p/U^{(m+2)} is exactly U^{(m)}/U^{(m+2)}.
void check_stab_formula(const ChainPtr& chain, long m, long n, long window = 2);

/// kappa: the end t.[w_infinity] truncated to the requested resolution.
BoundaryPoint kappa(const ChainData& chain, const TorusElement& t, long resolution);

/// The T_p-fixed ends: two for split p (o_P and o_{P^tau}), none otherwise.
std::vector<BoundaryPoint> fixed_ends(const SplittingData& data, long resolution);

std::string path_key(const PathN& path);

}  // namespace btsl
