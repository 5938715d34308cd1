#include <algorithm>
#include <random>
#include <set>

#include "btsl/tree.hpp"
#include "doctest.h"

using namespace btsl;

namespace {

Vertex origin(const PrimeContext& ctx) { return Vertex(0, PAdicNumber(ctx)); }

Matrix2 random_invertible(std::mt19937_64& rng, const PrimeContext& ctx) {
    std::uniform_int_distribution<long> coef(-20, 20);
    std::uniform_int_distribution<long> sh(-2, 2);
    while (true) {
        Matrix2 g(PAdicNumber(ctx, coef(rng)).shift(sh(rng)),
                  PAdicNumber(ctx, coef(rng)).shift(sh(rng)),
                  PAdicNumber(ctx, coef(rng)).shift(sh(rng)),
                  PAdicNumber(ctx, coef(rng)).shift(sh(rng)));
        if (!g.det().is_zero()) return g;
    }
}

Vertex random_vertex(std::mt19937_64& rng, const PrimeContext& ctx) {
    std::uniform_int_distribution<long> nd(-3, 3);
    std::uniform_int_distribution<long> ad(-40, 40);
    std::uniform_int_distribution<long> sh(-2, 0);
    return Vertex(nd(rng), PAdicNumber(ctx, ad(rng)).shift(sh(rng)));
}

}  // namespace

TEST_CASE("neighbours") {
    PrimeContext c2(2, 32);
    auto nb = neighbours(origin(c2));
    CHECK(nb.size() == 3);
    std::set<Vertex> got(nb.begin(), nb.end());
    CHECK(got.count(Vertex(-1, PAdicNumber(c2))));
    CHECK(got.count(Vertex(1, PAdicNumber(c2))));
    CHECK(got.count(Vertex(1, PAdicNumber(c2, 1))));

    PrimeContext c3(3, 32);
    Vertex v(1, PAdicNumber(c3, 2));
    auto nb3 = neighbours(v);
    CHECK(nb3.size() == 4);
    std::set<Vertex> got3(nb3.begin(), nb3.end());
    CHECK(got3.count(Vertex(0, PAdicNumber(c3))));  // 2 mod 3^0 is the 0-class
    CHECK(got3.count(Vertex(2, PAdicNumber(c3, 2))));
    CHECK(got3.count(Vertex(2, PAdicNumber(c3, 5))));
    CHECK(got3.count(Vertex(2, PAdicNumber(c3, 8))));

    for (long p : {2L, 3L, 5L}) {
        PrimeContext ctx(p, 32);
        std::mt19937_64 rng(11 + p);
        for (int i = 0; i < 50; ++i) {
            Vertex w = random_vertex(rng, ctx);
            CHECK(neighbours(w).size() == static_cast<size_t>(p + 1));
        }
    }
}

TEST_CASE("act on lattice classes") {
    PrimeContext c3(3, 32);
    Vertex o = origin(c3);

    CHECK(act(Matrix2::identity(c3), o) == o);

    Matrix2 d = Matrix2::diag(PAdicNumber(c3, 3), PAdicNumber(c3, 1));
    CHECK(act(d, o) == Vertex(1, PAdicNumber(c3)));

    Matrix2 w = Matrix2::antidiag(PAdicNumber(c3, 1), PAdicNumber(c3, 1));
    CHECK(act(w, Vertex(1, PAdicNumber(c3))) == Vertex(-1, PAdicNumber(c3)));
}

TEST_CASE("distance") {
    PrimeContext c2(2, 32);
    CHECK(distance(origin(c2), origin(c2)) == 0);
    CHECK(distance(Vertex(1, PAdicNumber(c2)), Vertex(1, PAdicNumber(c2, 1))) == 2);

    PrimeContext c3(3, 32);
    CHECK(distance(Vertex(-1, PAdicNumber(c3)), Vertex(2, PAdicNumber(c3, 4))) == 3);
}

TEST_CASE("action is a PGL2 action preserving the tree") {
    std::mt19937_64 rng(123);
    for (long p : {2L, 3L, 5L}) {
        PrimeContext ctx(p, 32);
        for (int i = 0; i < 300; ++i) {
            Matrix2 g = random_invertible(rng, ctx);
            Matrix2 h = random_invertible(rng, ctx);
            Vertex v = random_vertex(rng, ctx);
            CHECK(act(g * h, v) == act(g, act(h, v)));

            Vertex w = random_vertex(rng, ctx);
            CHECK(distance(act(g, v), act(g, w)) == distance(v, w));

            // scalars act trivially
            PAdicNumber lam = PAdicNumber(ctx, 7).shift(1);
            CHECK(act(g.scaled(lam), v) == act(g, v));
        }
    }
}

TEST_CASE("end balls") {
    PrimeContext c2(2, 32);
    Vertex o = origin(c2);
    EdgeT down(o, Vertex(1, PAdicNumber(c2)));
    CHECK(end_ball_contains(down, BoundaryPoint(2, PAdicNumber(c2))));

    EdgeT up(o, Vertex(-1, PAdicNumber(c2)));
    CHECK(end_ball_contains(up, BoundaryPoint::infinity(2)));

    EdgeT down1(o, Vertex(1, PAdicNumber(c2, 1)));
    CHECK(!end_ball_contains(down1, BoundaryPoint(2, PAdicNumber(c2))));

    CHECK_THROWS_AS(
        end_ball_contains(EdgeT(Vertex(2, PAdicNumber(c2)), Vertex(3, PAdicNumber(c2))),
                          BoundaryPoint(2, PAdicNumber(c2))),
        InsufficientResolution);
}

TEST_CASE("balls out of a vertex partition the visible ends") {
    for (long p : {2L, 3L}) {
        PrimeContext ctx(p, 32);
        Vertex o = origin(ctx);
        std::vector<EdgeT> star;
        for (const auto& w : neighbours(o)) star.emplace_back(o, w);

        for (long res = 1; res <= 4; ++res) {
            std::vector<BoundaryPoint> pts;
            pts.push_back(BoundaryPoint::infinity(res));
            mpz_class top = 1;
            for (long i = 0; i < res; ++i) top *= p;
            for (mpz_class a = 0; a < top; ++a)
                pts.emplace_back(res, PAdicNumber(ctx, a));
            // a few ends with negative valuation
            pts.emplace_back(res, PAdicNumber(ctx, 1, 1));
            pts.emplace_back(res, PAdicNumber(ctx, 1, 2));

            for (const auto& pt : pts) {
                int hits = 0;
                for (const auto& e : star)
                    if (end_ball_contains(e, pt)) ++hits;
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("ball and sphere enumeration") {
    for (long p : {2L, 3L}) {
        PrimeContext ctx(p, 32);
        Vertex o = origin(ctx);
        for (long r = 1; r <= 4; ++r) {
            auto sph = sphere(o, r);
            // (p+1) p^(r-1) vertices at distance exactly r
            size_t expect = static_cast<size_t>(p + 1);
            for (long i = 1; i < r; ++i) expect *= static_cast<size_t>(p);
            CHECK(sph.size() == expect);
            for (const auto& v : sph) CHECK(distance(o, v) == r);
        }
        auto b = ball(o, 2);
        CHECK(b.size() == 1 + static_cast<size_t>(p + 1) + static_cast<size_t>((p + 1) * p));
    }
}
