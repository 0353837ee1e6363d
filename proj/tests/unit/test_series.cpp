#include <doctest.h>

#include <random>

#include "padl/series.hpp"

using namespace padl;

namespace {

TruncatedSeries make_series(const CtxPtr& ctx, std::vector<long> cs) {
    std::vector<PadicScalar> v;
    for (long c : cs) v.emplace_back(ctx, c);
    return TruncatedSeries(ctx, std::move(v));
}

}  // namespace

TEST_CASE("series multiplication") {
    auto ctx = make_context(5, 6);
    auto f = make_series(ctx, {1, 1, 0});   // 1 + T
    auto g = make_series(ctx, {1, -1, 0});  // 1 - T
    auto h = mul(f, g);                     // 1 - T^2
    CHECK(h.coeff(0).value() == 1);
    CHECK(h.coeff(1).value() == 0);
    CHECK(h.coeff(2).value() == ctx->modulus() - 1);

    auto one = make_series(ctx, {1, 0, 0});
    auto ff = make_series(ctx, {3, 7, 2});
    auto id = mul(ff, one);
    for (unsigned t = 0; t < 3; ++t) CHECK(id.coeff(t) == ff.coeff(t));

    // (1 + pT)(1 - pT + p^2 T^2) = 1 + p^3 T^3, truncated to length 3
    auto a = make_series(ctx, {1, 5, 0});
    auto b = make_series(ctx, {1, -5, 25});
    auto c = mul(a, b);
    CHECK(c.coeff(0).value() == 1);
    CHECK(c.coeff(1).value() == 0);
    CHECK(c.coeff(2).value() == 0);
}

TEST_CASE("eval_at") {
    auto ctx = make_context(5, 6);
    auto f = make_series(ctx, {1, 1});
    PadicScalar p5(ctx, 5L);
    CHECK(eval_at(f, p5).value() == 6);

    // geometric series: all coefficients 1, N = M, at x = p: (1-p)^{-1}
    auto geo = make_series(ctx, std::vector<long>(6, 1));
    PadicScalar lhs = eval_at(geo, p5);
    PadicScalar rhs = (PadicScalar(ctx, 1L) - p5).inverse();
    CHECK(lhs.congruent(rhs, lhs.prec()));

    auto cst = make_series(ctx, {42, 0, 0});
    CHECK(eval_at(cst, p5).value() == 42);

    CHECK_THROWS_AS(eval_at(f, PadicScalar(ctx, 2L)), padl_error);

    // reported precision is capped by N * v(x)
    auto shortf = make_series(ctx, {1, 1, 1});
    CHECK(eval_at(shortf, p5).prec() == 3);
}

TEST_CASE("weierstrass preparation examples") {
    auto ctx = make_context(5, 8);
    // f = T + p: already distinguished
    auto f = make_series(ctx, {5, 1, 0, 0, 0, 0});
    WeierstrassData wd = weierstrass_prepare(f);
    CHECK(wd.lambda == 1);
    CHECK(wd.P.coeff(0).value() == 5);
    CHECK(wd.P.coeff(1).value() == 1);
    CHECK(wd.u.coeff(0).value() == 1);
    for (unsigned t = 1; t < wd.u.N(); ++t) CHECK(wd.u.coeff(t).value() == 0);

    // f = (T + p)(1 + T)
    auto g = mul(make_series(ctx, {5, 1, 0, 0, 0, 0}), make_series(ctx, {1, 1, 0, 0, 0, 0}));
    WeierstrassData wg = weierstrass_prepare(g);
    CHECK(wg.lambda == 1);
    CHECK(wg.P.coeff(0).congruent(PadicScalar(ctx, 5L), wg.P.coeff(0).prec()));
    CHECK(wg.u.coeff(0).value() == 1);
    CHECK(wg.u.coeff(1).value() == 1);
    CHECK(wg.u.coeff(2).value() == 0);

    // mu > 0 detection
    auto h = make_series(ctx, {5, 5, 5});
    CHECK_THROWS_AS(weierstrass_prepare(h), mu_positive);
}

TEST_CASE("weierstrass round trip on random pairs") {
    auto ctx = make_context(7, 12);
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        unsigned lambda = rng() % 6;
        unsigned N = 16;
        // random distinguished P
        std::vector<PadicScalar> pc;
        for (unsigned t = 0; t < lambda; ++t)
            pc.emplace_back(ctx, mpz_class(7) * static_cast<long>(rng() % 1000));
        pc.emplace_back(ctx, 1L);
        DistinguishedPoly P(ctx, pc);
        // random unit series
        std::vector<PadicScalar> uc;
        long u0 = 1 + static_cast<long>(rng() % 6);
        if (u0 % 7 == 0) u0 = 1;
        uc.emplace_back(ctx, u0);
        for (unsigned t = 1; t < N; ++t) uc.emplace_back(ctx, static_cast<long>(rng() % 100000));
        TruncatedSeries u(ctx, uc);

        std::vector<PadicScalar> fc = pc;
        fc.resize(N, PadicScalar(ctx, 0L));
        TruncatedSeries f = mul(TruncatedSeries(ctx, fc), u);

        WeierstrassData wd = weierstrass_prepare(f);
        REQUIRE(wd.lambda == lambda);
        for (unsigned t = 0; t <= lambda; ++t)
            CHECK(wd.P.coeff(t).congruent(P.coeff(t), 10));
        // product reconstructs f
        std::vector<PadicScalar> pcc = wd.P.coeffs();
        pcc.resize(N, PadicScalar(ctx, 0L));
        std::vector<PadicScalar> ucc = wd.u.coeffs();
        ucc.resize(N, PadicScalar(ctx, 0L));
        TruncatedSeries back = mul(TruncatedSeries(ctx, pcc), TruncatedSeries(ctx, ucc));
        for (unsigned t = 0; t + lambda < N; ++t) CHECK(back.coeff(t).congruent(f.coeff(t), 10));
    }
}

TEST_CASE("reduce_mod_omega") {
    auto ctx = make_context(5, 6);
    unsigned n = 1;
    // f = omega_1 itself reduces to 0
    std::vector<mpz_class> w = omega_coeffs(ctx, n);
    std::vector<PadicScalar> fc;
    for (unsigned long i = 0; i <= 5; ++i) fc.emplace_back(ctx, w[i]);
    fc.resize(8, PadicScalar(ctx, 0L));
    GroupRingElement r = reduce_mod_omega(TruncatedSeries(ctx, fc), n);
    for (unsigned long t = 0; t < r.dim(); ++t) CHECK(r.coeff(t).value() == 0);

    // degree < p^n: identity
    auto g = make_series(ctx, {3, 1, 4, 1, 5});
    GroupRingElement rg = reduce_mod_omega(g, n);
    for (unsigned long t = 0; t < 5; ++t) CHECK(rg.coeff(t) == g.coeff(t));

    // T^{p^n} reduces to T^{p^n} - omega_n
    std::vector<PadicScalar> tc(6, PadicScalar(ctx, 0L));
    tc[5] = PadicScalar(ctx, 1L);
    GroupRingElement rt = reduce_mod_omega(TruncatedSeries(ctx, tc), n);
    CHECK(rt.coeff(0).value() == 0);
    for (unsigned long t = 1; t < 5; ++t)
        CHECK((rt.coeff(t).value() + w[t]) % ctx->modulus() == 0);

    CHECK_THROWS_AS(reduce_mod_omega(make_series(ctx, {1, 2}), 1), padl_error);
}

TEST_CASE("reduce_mod_omega is multiplicative") {
    auto ctx = make_context(5, 5);
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<PadicScalar> fc, gc;
        for (int t = 0; t < 12; ++t) {
            fc.emplace_back(ctx, static_cast<long>(rng() % 3000));
            gc.emplace_back(ctx, static_cast<long>(rng() % 3000));
        }
        TruncatedSeries f(ctx, fc), g(ctx, gc);
        // compare reduce(f*g) with reduce(f)*reduce(g); product truncated to 12
        GroupRingElement lhs = reduce_mod_omega(mul(f, g), 1);
        GroupRingElement rhs = gr_mul(reduce_mod_omega(f, 1), reduce_mod_omega(g, 1));
        // truncation: f*g is only known to T^12, but both factors have degree
        // < 12, so their product mod omega_1 needs the full degree-22 product
        std::vector<PadicScalar> full(23, PadicScalar(ctx, 0L));
        for (unsigned i = 0; i < 12; ++i)
            for (unsigned j = 0; j < 12; ++j) full[i + j] = full[i + j] + fc[i] * gc[j];
        GroupRingElement lhs_full = reduce_mod_omega(TruncatedSeries(ctx, full), 1);
        for (unsigned long t = 0; t < 5; ++t) CHECK(lhs_full.coeff(t) == rhs.coeff(t));
        (void)lhs;
    }
}

TEST_CASE("tail certificate") {
    CHECK(tail_certified_digits(60, 5, 1) == 12);
    CHECK(tail_certified_digits(60, 5, 2) == 2);
    CHECK(tail_certified_digits(16, 37, 1) == 0);
}

TEST_CASE("shift_variable") {
    auto ctx = make_context(5, 6);
    // P = T -> Q = t - 1
    DistinguishedPoly P1(ctx, {PadicScalar(ctx, 0L), PadicScalar(ctx, 1L)});
    ShiftedPoly Q1 = shift_variable(P1);
    CHECK(Q1.coeffs[0].value() == ctx->modulus() - 1);
    CHECK(Q1.coeffs[1].value() == 1);

    // P = T + p -> Q = t - 1 + p
    DistinguishedPoly P2(ctx, {PadicScalar(ctx, 5L), PadicScalar(ctx, 1L)});
    ShiftedPoly Q2 = shift_variable(P2);
    CHECK(Q2.coeffs[0].value() == 4);
    CHECK(Q2.coeffs[1].value() == 1);

    // P = T^2 + pT + p -> Q = t^2 + (p-2)t + 1
    DistinguishedPoly P3(ctx, {PadicScalar(ctx, 5L), PadicScalar(ctx, 5L), PadicScalar(ctx, 1L)});
    ShiftedPoly Q3 = shift_variable(P3);
    CHECK(Q3.coeffs[0].value() == 1);
    CHECK(Q3.coeffs[1].value() == 3);
    CHECK(Q3.coeffs[2].value() == 1);
}
