#include <doctest.h>

#include <random>

#include "padl/resultant.hpp"

using namespace padl;

TEST_CASE("resultant of a unit constant is 0") {
    auto ctx = make_context(5, 6);
    DistinguishedPoly one(ctx, {PadicScalar(ctx, 1L)});
    for (unsigned n = 0; n <= 2; ++n) CHECK(resultant_valuation(one, n) == 0);
}

TEST_CASE("P = T shares the root T = 0 with omega_n") {
    auto ctx = make_context(5, 6);
    DistinguishedPoly P(ctx, {PadicScalar(ctx, 0L), PadicScalar(ctx, 1L)});
    CHECK_THROWS_AS(resultant_valuation(P, 1), precision_exhausted);
}

TEST_CASE("P = T - p c has e = 2 at p = 5, n = 1") {
    auto ctx = make_context(5, 6);
    for (long c : {1L, 2L, 3L}) {
        DistinguishedPoly P(ctx, {PadicScalar(ctx, -5 * c), PadicScalar(ctx, 1L)});
        CHECK(resultant_valuation(P, 1) == 2);
        // growth: each level adds lambda = 1
        CHECK(resultant_valuation(P, 2) == 3);
        CHECK(resultant_valuation(P, 0) == 1);
    }
}

TEST_CASE("the two routes agree on random distinguished polynomials") {
    std::mt19937_64 rng(2024);
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        auto ctx = make_context(p, 8);
        for (int iter = 0; iter < 34; ++iter) {
            unsigned lambda = 1 + rng() % 4;
            std::vector<PadicScalar> pc;
            for (unsigned t = 0; t < lambda; ++t)
                pc.emplace_back(ctx, static_cast<long>(p) * static_cast<long>(rng() % 200));
            pc.emplace_back(ctx, 1L);
            DistinguishedPoly P(ctx, pc);
            for (unsigned n = 0; n <= 2; ++n) {
                auto a = resultant_valuation_multmatrix(ctx, n, P.coeffs());
                auto b = resultant_valuation_sylvester(ctx, n, P.coeffs());
                REQUIRE(a.has_value() == b.has_value());
                if (a) CHECK(*a == *b);
            }
        }
    }
}

TEST_CASE("growth law: e increments by lambda once p^n >= lambda") {
    auto ctx = make_context(5, 12);
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        unsigned lambda = 1 + rng() % 3;
        std::vector<PadicScalar> pc;
        for (unsigned t = 0; t < lambda; ++t)
            pc.emplace_back(ctx, 5L * (1 + static_cast<long>(rng() % 100)));
        pc.emplace_back(ctx, 1L);
        DistinguishedPoly P(ctx, pc);
        unsigned e1 = resultant_valuation(P, 1);
        unsigned e2 = resultant_valuation(P, 2);
        CHECK(e2 - e1 == lambda);  // p^1 = 5 >= lambda
    }
}

TEST_CASE("u64 kernel matches the mpz reference") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        unsigned long p = 5;
        unsigned M = 6;
        unsigned long dim = 2 + rng() % 10;
        std::vector<uint64_t> m64(dim * dim);
        std::vector<mpz_class> mz(dim * dim);
        uint64_t mod = 1;
        for (unsigned i = 0; i < M; ++i) mod *= p;
        for (size_t i = 0; i < m64.size(); ++i) {
            m64[i] = rng() % mod;
            mz[i] = static_cast<unsigned long>(m64[i]);
        }
        auto a = kernels::det_valuation_u64_omp(m64, dim, p, M);
        auto b = kernels::det_valuation_mpz_serial(mz, dim, p, M);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(*a == *b);
    }
}

TEST_CASE("fits_u64 cutoffs") {
    CHECK(kernels::fits_u64(37, 12));
    CHECK(!kernels::fits_u64(37, 13));
    CHECK(kernels::fits_u64(5, 27));
    CHECK(kernels::fits_u64(3, 39));
}
