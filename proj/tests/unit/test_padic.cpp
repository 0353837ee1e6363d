#include <doctest.h>

#include <random>

#include "padl/padic.hpp"

using namespace padl;

TEST_CASE("context rejects bad primes") {
    CHECK_THROWS_AS(make_context(2, 4), schema_error);
    CHECK_THROWS_AS(make_context(9, 4), schema_error);
    CHECK_THROWS_AS(make_context(5, 0), schema_error);
}

TEST_CASE("valuation") {
    auto c5 = make_context(5, 6);
    CHECK(PadicScalar(c5, 50L).valuation() == 2);
    CHECK_THROWS_AS(PadicScalar(c5, 0L).valuation(), precision_exhausted);

    auto c37 = make_context(37, 4);
    mpz_class x = mpz_class(37) * 37 * 37 * 5;
    CHECK(PadicScalar(c37, x).valuation() == 3);
}

TEST_CASE("valuation is additive under multiplication") {
    auto ctx = make_context(7, 10);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        unsigned va = rng() % 3, vb = rng() % 3;
        long ua = 1 + static_cast<long>(rng() % 6);
        long ub = 1 + static_cast<long>(rng() % 6);
        if (ua % 7 == 0) ++ua;
        if (ub % 7 == 0) ++ub;
        mpz_class xa = mpz_class(ua), xb = mpz_class(ub);
        for (unsigned t = 0; t < va; ++t) xa *= 7;
        for (unsigned t = 0; t < vb; ++t) xb *= 7;
        PadicScalar s(ctx, xa), t(ctx, xb);
        CHECK((s * t).valuation() == va + vb);
    }
}

TEST_CASE("teichmuller examples and properties") {
    auto c5 = make_context(5, 3);
    CHECK(teichmuller(1, c5).value() == 1);
    CHECK(teichmuller(4, c5).value() == 124);  // the lift of -1
    CHECK(teichmuller(2, c5).value() == 57);
    CHECK_THROWS_AS(teichmuller(10, c5), padl_error);

    auto ctx = make_context(13, 6);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        long a = 1 + static_cast<long>(rng() % 1000000);
        if (a % 13 == 0) ++a;
        long b = 1 + static_cast<long>(rng() % 1000000);
        if (b % 13 == 0) ++b;
        PadicScalar wa = teichmuller(a, ctx), wb = teichmuller(b, ctx);
        // multiplicative
        CHECK(wa * wb == teichmuller(mpz_class(a) * b, ctx));
        // (p-1)-th root of unity
        CHECK(wa.pow(12).value() == 1);
        // congruent to a mod p
        CHECK((wa.value() - a) % 13 == 0);
    }
}

TEST_CASE("embed_rational") {
    auto c5 = make_context(5, 2);
    CHECK(embed_rational(mpz_class(1), mpz_class(2), c5).value() == 13);
    CHECK(embed_rational(mpz_class(0), mpz_class(7), c5).value() == 0);
    CHECK_THROWS_AS(embed_rational(mpz_class(1), mpz_class(10), c5), padl_error);

    auto c125 = make_context(5, 3);
    PadicScalar x = embed_rational(mpz_class(-691), mpz_class(2730), c125);
    mpz_class check = (x.value() * 2730 + 691) % 125;
    CHECK(check == 0);
}

TEST_CASE("embed_rational respects field operations") {
    auto ctx = make_context(11, 8);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        long a = static_cast<long>(rng() % 2000) - 1000;
        long b = 1 + static_cast<long>(rng() % 999);
        long c = static_cast<long>(rng() % 2000) - 1000;
        long d = 1 + static_cast<long>(rng() % 999);
        if (b % 11 == 0) ++b;
        if (d % 11 == 0) ++d;
        mpq_class q1(a, b), q2(c, d);
        q1.canonicalize();
        q2.canonicalize();
        mpq_class s = q1 + q2;
        if (mpz_divisible_ui_p(s.get_den().get_mpz_t(), 11)) continue;
        CHECK(embed_rational(q1, ctx) + embed_rational(q2, ctx) == embed_rational(s, ctx));
    }
}

TEST_CASE("pow_onep") {
    auto c5 = make_context(5, 3);
    CHECK(pow_onep(0, c5).value() == 1);
    CHECK(pow_onep(2, c5).value() == 36);
    CHECK(pow_onep(-1, c5).value() == 21);
}

TEST_CASE("precision bookkeeping") {
    auto ctx = make_context(5, 6);
    PadicScalar a(ctx, 50L);            // prec 6
    PadicScalar b = a.div_pow_p(2);     // 2, prec 4
    CHECK(b.prec() == 4);
    CHECK(b.value() == 2);
    PadicScalar c = a.with_prec(3);
    CHECK(c.prec() == 3);
    CHECK(c.value() == 50 % 125);
    // canonical: digits above prec are zeroed
    PadicScalar d(ctx, 130L, 2);
    CHECK(d.value() == 5);
    // division by a unit preserves precision
    PadicScalar u(ctx, 7L);
    CHECK(a.div(u).prec() == 6);
    // div by p^v reduces it
    CHECK(a.div(PadicScalar(ctx, 25L)).prec() == 4);
}
