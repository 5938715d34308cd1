#include <random>

#include "btsl/padic.hpp"
#include "doctest.h"

using namespace btsl;

namespace {

// extended-gcd inverse oracle, independent of the library path
long egcd_inverse(long a, long m) {
    long old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        std::swap(old_r, r);
        r -= q * old_r;
        std::swap(old_s, s);
        s -= q * old_s;
    }
    long inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

PAdicNumber random_value(std::mt19937_64& rng, const PrimeContext& ctx) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(0, 3);
    long n = num(rng);
    while (n == 0) n = num(rng);
    return PAdicNumber(ctx, n, den(rng));
}

}  // namespace

TEST_CASE("normalize canonical forms") {
    PrimeContext c5(5, 32);
    PAdicNumber a(c5, 50);
    CHECK(a.val() == 2);
    CHECK(a.unit_canonical() == 2);

    PAdicNumber z(c5, 0);
    CHECK(z.is_zero());

    PrimeContext c3(3, 4);
    PAdicNumber b(c3, 7, 1);  // 7/3
    CHECK(b.val() == -1);
    CHECK(b.unit_canonical() == 7);
}

TEST_CASE("invert") {
    PrimeContext c5(5, 32);
    PAdicNumber two(c5, 2);
    PAdicNumber inv2 = two.invert();
    CHECK(inv2.val() == 0);
    CHECK((two * inv2) == PAdicNumber(c5, 1));

    PAdicNumber five(c5, 5);
    PAdicNumber inv5 = five.invert();
    CHECK(inv5.val() == -1);
    CHECK(inv5.unit_canonical() == 1);

    PrimeContext c7(7, 3);
    PAdicNumber three(c7, 3);
    PAdicNumber inv3 = three.invert();
    CHECK(inv3.unit_canonical() == egcd_inverse(3, 343));
    CHECK(inv3.unit_canonical() == 115);

    CHECK_THROWS_AS(PAdicNumber(c5, 0).invert(), ZeroWithinPrecision);
}

TEST_CASE("ring laws on random values") {
    std::mt19937_64 rng(20240901);
    for (long p : {2L, 3L, 5L, 7L}) {
        PrimeContext ctx(p, 32);
        for (int i = 0; i < 500; ++i) {
            PAdicNumber x = random_value(rng, ctx);
            PAdicNumber y = random_value(rng, ctx);
            PAdicNumber z = random_value(rng, ctx);
            CHECK(((x * y) * z) == (x * (y * z)));
            CHECK((x.invert().invert()) == x);
            CHECK((x * y).val() == x.val() + y.val());
            CHECK((x + y) == (y + x));
            CHECK(((x + y) * z) == (x * z + y * z));
        }
    }
}

TEST_CASE("exact cancellation and congruences") {
    PrimeContext ctx(3, 8);
    PAdicNumber x(ctx, 7, 1);
    CHECK((x - x).is_zero());

    PAdicNumber a(ctx, 10), b(ctx, 1);
    CHECK(a.congruent_mod(b, 2));  // 10 = 1 + 9
    CHECK(!a.congruent_mod(b, 3));

    // canonical reduction
    PAdicNumber r = a.canonical_mod(2);
    CHECK(r.val() == 0);
    CHECK(r.unit_raw() == 1);
    CHECK(PAdicNumber(ctx, 9).canonical_mod(2).is_zero());
}

TEST_CASE("truncated division certifies its window") {
    PrimeContext ctx(5, 6);
    PAdicNumber q = PAdicNumber(ctx, 1) / PAdicNumber(ctx, 3);
    CHECK(q.prec() == 6);
    CHECK((q * PAdicNumber(ctx, 3)) == PAdicNumber(ctx, 1));
    // subtracting the truncated inverse from itself cancels every certified
    // digit, which must be refused rather than silently treated as zero
    CHECK_THROWS_AS(q - q, InsufficientPrecision);
}

TEST_CASE("serialization-ready canonical unit") {
    PrimeContext ctx(5, 4);
    PAdicNumber m(ctx, -1);
    CHECK(m.unit_canonical() == 624);  // 5^4 - 1
}
