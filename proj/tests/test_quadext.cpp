#include <random>

#include "btsl/quadext.hpp"
#include "doctest.h"

using namespace btsl;

namespace {

QuadExtElement random_element(std::mt19937_64& rng, const SplittingDataPtr& d) {
    std::uniform_int_distribution<long> coef(-50, 50);
    const PrimeContext& ctx = d->ctx();
    while (true) {
        QuadExtElement e = d->from_pair(PAdicNumber(ctx, coef(rng)), PAdicNumber(ctx, coef(rng)));
        if (!e.is_zero() && !reduced_norm(e).is_zero()) return e;
    }
}

std::vector<SplittingDataPtr> all_types(long p) {
    PrimeContext ctx(p, 32);
    return {SplittingData::make_split(ctx), SplittingData::make_inert(ctx),
            SplittingData::make_ramified(ctx)};
}

}  // namespace

TEST_CASE("galois conjugation") {
    PrimeContext c3(3, 32);
    auto sp = SplittingData::make_split(c3);
    QuadExtElement pi = sp->uniformizer();
    QuadExtElement tpi = galois_conj(pi);
    CHECK(tpi.x() == PAdicNumber(c3, 1));
    CHECK(tpi.y() == PAdicNumber(c3, 3));

    PrimeContext c5(5, 32);
    auto in = SplittingData::make_inert(c5);  // w^2 = 2
    CHECK(in->min_c() == PAdicNumber(c5, -2));
    QuadExtElement e = in->from_pair(1, 1);
    QuadExtElement t = galois_conj(e);
    CHECK(t.x() == PAdicNumber(c5, 1));
    CHECK(t.y() == PAdicNumber(c5, -1));

    auto ra = SplittingData::make_ramified(c3);  // w^2 = 3
    QuadExtElement f = ra->from_pair(2, 1);
    QuadExtElement tf = galois_conj(f);
    CHECK(tf.x() == PAdicNumber(c3, 2));
    CHECK(tf.y() == PAdicNumber(c3, -1));
}

TEST_CASE("reduced norm values") {
    PrimeContext c5(5, 32);
    auto sp = SplittingData::make_split(c5);
    QuadExtElement e = sp->from_pair(10, 3);
    CHECK(reduced_norm(e) == PAdicNumber(c5, 30));

    auto in = SplittingData::make_inert(c5);  // w^2 = 2
    CHECK(reduced_norm(in->from_pair(1, 1)) == PAdicNumber(c5, -1));

    PrimeContext c3(3, 32);
    auto ra = SplittingData::make_ramified(c3);
    PAdicNumber n = reduced_norm(ra->omega());
    CHECK(n == PAdicNumber(c3, -3));
    CHECK(n.val() == 1);
}

TEST_CASE("norm is multiplicative, all splitting types") {
    std::mt19937_64 rng(77);
    for (long p : {2L, 3L, 5L}) {
        for (const auto& d : all_types(p)) {
            for (int i = 0; i < 200; ++i) {
                QuadExtElement a = random_element(rng, d);
                QuadExtElement b = random_element(rng, d);
                CHECK(reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b));
            }
        }
    }
}

TEST_CASE("conjugation matrix invariant") {
    std::mt19937_64 rng(78);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (const auto& d : all_types(p)) {
            Matrix2 J = d->conjugation();
            Matrix2 Jinv = J.inverse();
            for (int i = 0; i < 100; ++i) {
                QuadExtElement e = random_element(rng, d);
                CHECK((J * iota(e) * Jinv) == iota(galois_conj(e)));
            }
        }
    }
}

TEST_CASE("field laws and inverse") {
    std::mt19937_64 rng(79);
    for (long p : {2L, 3L, 5L}) {
        for (const auto& d : all_types(p)) {
            for (int i = 0; i < 100; ++i) {
                QuadExtElement a = random_element(rng, d);
                QuadExtElement b = random_element(rng, d);
                QuadExtElement c = random_element(rng, d);
                CHECK(((a * b) * c) == (a * (b * c)));
                CHECK((a * b) == (b * a));
                CHECK((a * a.invert()) == d->one());
            }
        }
    }
}

TEST_CASE("iota is the regular representation") {
    PrimeContext c5(5, 32);
    auto sp = SplittingData::make_split(c5);
    Matrix2 m = iota(sp->uniformizer());
    CHECK(m.at(0, 0) == PAdicNumber(c5, 5));
    CHECK(m.at(1, 1) == PAdicNumber(c5, 1));
    CHECK(m.at(0, 1).is_zero());

    auto in = SplittingData::make_inert(c5);  // w^2 = 2
    Matrix2 mi = iota(in->from_pair(1, 1));
    CHECK(mi.at(0, 0) == PAdicNumber(c5, 1));
    CHECK(mi.at(0, 1) == PAdicNumber(c5, 2));
    CHECK(mi.at(1, 0) == PAdicNumber(c5, 1));
    CHECK(mi.at(1, 1) == PAdicNumber(c5, 1));

    PrimeContext c3(3, 32);
    auto ra = SplittingData::make_ramified(c3);
    Matrix2 mr = iota(ra->omega());
    CHECK(mr.at(0, 1) == PAdicNumber(c3, 3));
    CHECK(mr.at(1, 0) == PAdicNumber(c3, 1));
    CHECK(mr.at(0, 0).is_zero());
    CHECK(mr.at(1, 1).is_zero());

    // iota is multiplicative
    std::mt19937_64 rng(80);
    for (const auto& d : all_types(3)) {
        for (int i = 0; i < 50; ++i) {
            QuadExtElement a = random_element(rng, d);
            QuadExtElement b = random_element(rng, d);
            CHECK((iota(a) * iota(b)) == iota(a * b));
        }
    }
}
