#include "padl/resultant.hpp"

#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padl {
namespace kernels {

bool fits_u64(unsigned long p, unsigned M) {
    unsigned __int128 x = 1;
    for (unsigned i = 0; i < M; ++i) {
        x *= p;
        if (x >= (static_cast<unsigned __int128>(1) << 63)) return false;
    }
    return true;
}

std::optional<unsigned> det_valuation_mpz_serial(std::vector<mpz_class> mat, unsigned long dim,
                                                 unsigned long p, unsigned M) {
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, M);
    auto at = [&](unsigned long r, unsigned long c) -> mpz_class& { return mat[r * dim + c]; };
    unsigned e = 0, W = M;
    for (unsigned long col = 0; col < dim; ++col) {
        long piv = -1;
        unsigned pv = 0;
        for (unsigned long r = col; r < dim; ++r) {
            mpz_class x = at(r, col) % mod;
            if (x < 0) x += mod;
            if (x == 0) continue;
            unsigned v = 0;
            while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
                mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
                ++v;
            }
            if (v >= W) continue;
            if (piv < 0 || v < pv) {
                piv = static_cast<long>(r);
                pv = v;
            }
        }
        if (piv < 0) return std::nullopt;
        if (static_cast<unsigned long>(piv) != col)
            for (unsigned long c = col; c < dim; ++c) std::swap(at(col, c), at(static_cast<unsigned long>(piv), c));
        e += pv;
        W -= pv;
        mpz_class punit = at(col, col);
        mpz_class ppow;
        mpz_ui_pow_ui(ppow.get_mpz_t(), p, pv);
        mpz_divexact(punit.get_mpz_t(), punit.get_mpz_t(), ppow.get_mpz_t());
        mpz_class pinv;
        mpz_invert(pinv.get_mpz_t(), punit.get_mpz_t(), mod.get_mpz_t());
        for (unsigned long r = col + 1; r < dim; ++r) {
            mpz_class x = at(r, col) % mod;
            if (x < 0) x += mod;
            if (x == 0) continue;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ppow.get_mpz_t());
            mpz_class mult = x * pinv % mod;
            if (mult == 0) continue;
            for (unsigned long c = col; c < dim; ++c) {
                at(r, c) -= mult * at(col, c);
                mpz_fdiv_r(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), mod.get_mpz_t());
            }
        }
    }
    return e;
}

namespace {

// Montgomery arithmetic mod an odd modulus < 2^63.
struct Mont64 {
    uint64_t mod, r2, ninv;

    explicit Mont64(uint64_t m) : mod(m) {
        uint64_t inv = m;  // inverse of m mod 2^64 by Newton
        for (int i = 0; i < 6; ++i) inv *= 2 - m * inv;
        ninv = ~inv + 1;  // -m^{-1} mod 2^64
        unsigned __int128 r = (~static_cast<unsigned __int128>(0)) % m;  // 2^128-1 mod m
        r = (r + 1) % m;                                                 // 2^128 mod m
        r2 = static_cast<uint64_t>(r);
    }
    uint64_t reduce(unsigned __int128 t) const {
        uint64_t q = static_cast<uint64_t>(t) * ninv;
        unsigned __int128 s = t + static_cast<unsigned __int128>(q) * mod;
        uint64_t r = static_cast<uint64_t>(s >> 64);
        return r >= mod ? r - mod : r;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(static_cast<unsigned __int128>(a) * b); }
    uint64_t to(uint64_t a) const { return mul(a % mod, r2); }
    uint64_t from(uint64_t a) const { return reduce(a); }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + mod - b; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = to(1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

std::optional<unsigned> det_valuation_u64_omp(std::vector<uint64_t> mat, unsigned long dim,
                                              unsigned long p, unsigned M) {
    assert(fits_u64(p, M));
    uint64_t mod = 1;
    for (unsigned i = 0; i < M; ++i) mod *= p;
    Mont64 mont(mod);
    // phi(p^M) - 1: exponent for unit inverses
    uint64_t phi = mod / p * (p - 1);

    for (auto& x : mat) x = mont.to(x);
    auto val_of = [&](uint64_t x) -> unsigned {
        // 2^64 is a unit mod p^M, so valuations are unchanged in Montgomery form
        unsigned v = 0;
        while (x % p == 0 && v < M) {
            x /= p;
            ++v;
        }
        return x == 0 ? M : v;
    };

    unsigned e = 0, W = M;
    for (unsigned long col = 0; col < dim; ++col) {
        long piv = -1;
        unsigned pv = 0;
        for (unsigned long r = col; r < dim; ++r) {
            uint64_t x = mat[r * dim + col];
            if (x == 0) continue;
            unsigned v = val_of(x);
            if (v >= W) continue;
            if (piv < 0 || v < pv) {
                piv = static_cast<long>(r);
                pv = v;
            }
        }
        if (piv < 0) return std::nullopt;
        if (static_cast<unsigned long>(piv) != col)
            for (unsigned long c = col; c < dim; ++c)
                std::swap(mat[col * dim + c], mat[static_cast<unsigned long>(piv) * dim + c]);
        e += pv;
        W -= pv;
        uint64_t ppow = 1;
        for (unsigned i = 0; i < pv; ++i) ppow *= p;
        uint64_t pivot_unit = mat[col * dim + col] / ppow;  // still in Montgomery form
        uint64_t pinv = mont.pow(pivot_unit, phi - 1);
        const uint64_t* prow = &mat[col * dim];

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (unsigned long r = col + 1; r < dim; ++r) {
            uint64_t x = mat[r * dim + col];
            if (x == 0) continue;
            uint64_t mult = mont.mul(x / ppow, pinv);
            if (mult == 0) continue;
            uint64_t* row = &mat[r * dim];
            for (unsigned long c = col; c < dim; ++c)
                row[c] = mont.sub(row[c], mont.mul(mult, prow[c]));
        }
    }
    return e;
}

}  // namespace kernels

namespace {

// Effective degree of the operand mod p^prec; nullopt if identically zero.
std::optional<unsigned long> effective_degree(const std::vector<PadicScalar>& poly) {
    for (unsigned long d = poly.size(); d-- > 0;)
        if (!poly[d].is_zero()) return d;
    return std::nullopt;
}

std::optional<unsigned> run_elimination(const CtxPtr& ctx, const std::vector<mpz_class>& mat,
                                        unsigned long dim, unsigned M) {
    if (kernels::fits_u64(ctx->p(), M)) {
        std::vector<uint64_t> m64(mat.size());
        for (size_t i = 0; i < mat.size(); ++i) m64[i] = mpz_get_ui(mat[i].get_mpz_t());
        return kernels::det_valuation_u64_omp(std::move(m64), dim, ctx->p(), M);
    }
    return kernels::det_valuation_mpz_serial(mat, dim, ctx->p(), M);
}

unsigned working_prec(const CtxPtr& ctx, const std::vector<PadicScalar>& poly) {
    unsigned prec = ctx->M();
    for (const auto& c : poly) prec = std::min(prec, c.prec());
    return prec;
}

}  // namespace

std::optional<unsigned> resultant_valuation_multmatrix(const CtxPtr& ctx, unsigned n,
                                                       const std::vector<PadicScalar>& poly) {
    unsigned long pn = pow_pn(ctx->p(), n);
    unsigned M = working_prec(ctx, poly);
    const mpz_class& mod = ctx->pow_p(M);
    std::vector<mpz_class> w = omega_coeffs(ctx, n);

    // columns: Z * T^j mod omega_n
    std::vector<mpz_class> mat(pn * pn);
    std::vector<mpz_class> cur(pn);
    for (unsigned long t = 0; t < pn && t < poly.size(); ++t) cur[t] = poly[t].value() % mod;
    for (unsigned long j = 0; j < pn; ++j) {
        for (unsigned long i = 0; i < pn; ++i) mat[i * pn + j] = cur[i];
        if (j + 1 < pn) {
            // cur *= T mod omega_n
            mpz_class carry = cur[pn - 1];
            for (unsigned long t = pn - 1; t > 0; --t) cur[t] = cur[t - 1];
            cur[0] = 0;
            if (carry != 0) {
                for (unsigned long t = 1; t < pn; ++t) {
                    cur[t] -= carry * w[t];
                    mpz_fdiv_r(cur[t].get_mpz_t(), cur[t].get_mpz_t(), mod.get_mpz_t());
                }
            }
        }
    }
    return run_elimination(ctx, mat, pn, M);
}

std::optional<unsigned> resultant_valuation_sylvester(const CtxPtr& ctx, unsigned n,
                                                      const std::vector<PadicScalar>& poly) {
    unsigned long pn = pow_pn(ctx->p(), n);
    unsigned M = working_prec(ctx, poly);
    const mpz_class& mod = ctx->pow_p(M);
    auto dopt = effective_degree(poly);
    if (!dopt) return std::nullopt;
    unsigned long d = *dopt;
    if (d == 0) {
        // Res(omega_n, c) = c^{p^n}
        unsigned v = poly[0].valuation();
        unsigned __int128 total = static_cast<unsigned __int128>(v) * pn;
        if (total >= M) return std::nullopt;
        return static_cast<unsigned>(total);
    }
    std::vector<mpz_class> w = omega_coeffs(ctx, n);
    unsigned long dim = pn + d;
    std::vector<mpz_class> mat(dim * dim);
    // d rows of omega_n coefficients (degree pn, monic), pn rows of Z
    for (unsigned long r = 0; r < d; ++r)
        for (unsigned long i = 0; i <= pn; ++i) mat[r * dim + r + i] = w[pn - i] % mod;
    for (unsigned long r = 0; r < pn; ++r)
        for (unsigned long i = 0; i <= d; ++i) mat[(d + r) * dim + r + i] = poly[d - i].value() % mod;
    return run_elimination(ctx, mat, dim, M);
}

namespace {

unsigned agree_or_throw(const std::optional<unsigned>& a, const std::optional<unsigned>& b) {
    if (!a || !b) throw precision_exhausted("resultant determinant vanishes mod p^M");
    if (*a != *b)
        throw padl_error("resultant routes disagree: mult-matrix " + std::to_string(*a) +
                         " vs sylvester " + std::to_string(*b));
    return *a;
}

}  // namespace

unsigned resultant_valuation(const GroupRingElement& Z) {
    auto a = resultant_valuation_multmatrix(Z.ctx(), Z.level(), Z.coeffs());
    auto b = resultant_valuation_sylvester(Z.ctx(), Z.level(), Z.coeffs());
    return agree_or_throw(a, b);
}

unsigned resultant_valuation(const DistinguishedPoly& P, unsigned n) {
    unsigned long pn = pow_pn(P.ctx()->p(), n);
    if (P.lambda() >= pn) {
        // regard P as a residue mod omega_n first
        std::vector<PadicScalar> cs = P.coeffs();
        cs.resize(std::max<size_t>(cs.size(), pn), PadicScalar(P.ctx(), 0L));
        TruncatedSeries f(P.ctx(), std::move(cs));
        return resultant_valuation(reduce_mod_omega(f, n));
    }
    auto a = resultant_valuation_multmatrix(P.ctx(), n, P.coeffs());
    auto b = resultant_valuation_sylvester(P.ctx(), n, P.coeffs());
    return agree_or_throw(a, b);
}

}  // namespace padl
