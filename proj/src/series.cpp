#include "padl/series.hpp"

#include <cassert>

namespace padl {

TruncatedSeries::TruncatedSeries(CtxPtr ctx, std::vector<PadicScalar> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    assert(!coeffs_.empty());
#ifndef NDEBUG
    for (const auto& c : coeffs_) assert(c.ctx()->same(*ctx_));
#endif
}

TruncatedSeries::TruncatedSeries(CtxPtr ctx, unsigned N) : ctx_(std::move(ctx)) {
    assert(N > 0);
    coeffs_.assign(N, PadicScalar(ctx_, 0L));
}

void TruncatedSeries::set_coeff(unsigned t, PadicScalar c) {
    assert(c.ctx()->same(*ctx_));
    coeffs_.at(t) = std::move(c);
}

unsigned TruncatedSeries::min_prec() const {
    unsigned m = ctx_->M();
    for (const auto& c : coeffs_) m = std::min(m, c.prec());
    return m;
}

TruncatedSeries TruncatedSeries::truncate(unsigned N) const {
    assert(N >= 1 && N <= coeffs_.size());
    return TruncatedSeries(ctx_, std::vector<PadicScalar>(coeffs_.begin(), coeffs_.begin() + N));
}

TruncatedSeries TruncatedSeries::to_ctx(const CtxPtr& c) const {
    std::vector<PadicScalar> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x.to_ctx(c));
    return TruncatedSeries(c, std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    assert(f.ctx()->same(*g.ctx()));
    unsigned N = std::min(f.N(), g.N());
    std::vector<PadicScalar> out;
    out.reserve(N);
    for (unsigned t = 0; t < N; ++t) out.push_back(f.coeff(t) + g.coeff(t));
    return TruncatedSeries(f.ctx(), std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    assert(f.ctx()->same(*g.ctx()));
    unsigned N = std::min(f.N(), g.N());
    std::vector<PadicScalar> out;
    out.reserve(N);
    for (unsigned t = 0; t < N; ++t) out.push_back(f.coeff(t) - g.coeff(t));
    return TruncatedSeries(f.ctx(), std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    assert(f.ctx()->same(*g.ctx()));
    unsigned N = std::min(f.N(), g.N());
    TruncatedSeries out(f.ctx(), N);
    for (unsigned t = 0; t < N; ++t) {
        PadicScalar acc(f.ctx(), 0L);
        for (unsigned i = 0; i <= t; ++i) acc = acc + f.coeff(i) * g.coeff(t - i);
        out.set_coeff(t, std::move(acc));
    }
    return out;
}

TruncatedSeries invert_unit(const TruncatedSeries& f) {
    if (!f.coeff(0).is_unit()) throw padl_error("invert_unit: constant term is not a unit");
    unsigned N = f.N();
    TruncatedSeries out(f.ctx(), N);
    PadicScalar c0inv = f.coeff(0).inverse();
    out.set_coeff(0, c0inv);
    for (unsigned t = 1; t < N; ++t) {
        PadicScalar acc(f.ctx(), 0L);
        for (unsigned i = 1; i <= t; ++i) acc = acc + f.coeff(i) * out.coeff(t - i);
        out.set_coeff(t, -(c0inv * acc));
    }
    return out;
}

PadicScalar eval_at(const TruncatedSeries& f, const PadicScalar& x) {
    unsigned vx = x.is_zero() ? f.ctx()->M() : x.valuation();
    if (vx < 1) throw padl_error("eval_at requires v(x) >= 1 to control the tail");
    PadicScalar acc(f.ctx(), 0L);
    for (unsigned t = f.N(); t-- > 0;) acc = acc * x + f.coeff(t);
    // tail T^N contributes valuation >= N * v(x)
    unsigned long tail = static_cast<unsigned long>(f.N()) * vx;
    unsigned cap = tail >= f.ctx()->M() ? f.ctx()->M() : static_cast<unsigned>(tail);
    return acc.with_prec(std::min(acc.prec(), cap));
}

DistinguishedPoly::DistinguishedPoly(CtxPtr ctx, std::vector<PadicScalar> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    assert(!coeffs_.empty());
    if (!(coeffs_.back().value() == 1)) throw padl_error("distinguished polynomial must be monic");
    for (unsigned t = 0; t + 1 < coeffs_.size(); ++t) {
        if (!coeffs_[t].is_zero() && coeffs_[t].valuation() == 0)
            throw padl_error("distinguished polynomial has a unit below the leading term");
    }
}

GroupRingElement::GroupRingElement(CtxPtr ctx, unsigned n, std::vector<PadicScalar> coeffs)
    : ctx_(std::move(ctx)), n_(n), coeffs_(std::move(coeffs)) {
    assert(coeffs_.size() == pow_pn(ctx_->p(), n_));
}

PadicScalar GroupRingElement::eval_node(long s) const {
    PadicScalar x = pow_onep(s, ctx_) - PadicScalar(ctx_, 1L);
    PadicScalar acc(ctx_, 0L);
    for (unsigned long t = coeffs_.size(); t-- > 0;) acc = acc * x + coeffs_[t];
    return acc;
}

unsigned long pow_pn(unsigned long p, unsigned n) {
    unsigned long r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r > (1ul << 40) / p) throw padl_error("p^n too large");
        r *= p;
    }
    return r;
}

std::vector<mpz_class> omega_coeffs(const CtxPtr& ctx, unsigned n) {
    unsigned long pn = pow_pn(ctx->p(), n);
    std::vector<mpz_class> w(pn + 1);
    // C(pn, i) mod p^M by the multiplicative recurrence over exact integers
    mpz_class binom = 1;
    w[0] = 0;  // omega_n(0) = 0
    for (unsigned long i = 1; i <= pn; ++i) {
        binom *= static_cast<unsigned long>(pn - i + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i));
        w[i] = binom % ctx->modulus();
    }
    return w;
}

GroupRingElement reduce_mod_omega(const TruncatedSeries& f, unsigned n) {
    const CtxPtr& ctx = f.ctx();
    unsigned long pn = pow_pn(ctx->p(), n);
    if (f.N() < pn) throw padl_error("insufficient truncation: N < p^n");
    std::vector<mpz_class> w = omega_coeffs(ctx, n);
    unsigned prec = f.min_prec();
    const mpz_class& mod = ctx->pow_p(prec);

    std::vector<mpz_class> cs(f.N());
    for (unsigned t = 0; t < f.N(); ++t) cs[t] = f.coeff(t).value() % mod;
    // synthetic division by the monic omega_n: T^{pn} == -sum_{0<i<pn} C(pn,i) T^i
    for (unsigned long d = cs.size(); d-- > pn;) {
        mpz_class lead = cs[d];
        cs[d] = 0;
        if (lead != 0) {
            for (unsigned long i = 1; i < pn; ++i) {
                cs[d - pn + i] -= lead * w[i];
                mpz_fdiv_r(cs[d - pn + i].get_mpz_t(), cs[d - pn + i].get_mpz_t(), mod.get_mpz_t());
            }
        }
    }
    std::vector<PadicScalar> out;
    out.reserve(pn);
    for (unsigned long t = 0; t < pn; ++t) out.emplace_back(ctx, cs[t], prec);
    return GroupRingElement(ctx, n, std::move(out));
}

unsigned tail_certified_digits(unsigned N, unsigned long p, unsigned n) {
    unsigned long pn = pow_pn(p, n);
    return static_cast<unsigned>(N / pn);
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
    assert(a.ctx()->same(*b.ctx()) && a.level() == b.level());
    const CtxPtr& ctx = a.ctx();
    unsigned long pn = a.dim();
    unsigned prec = std::min(ctx->M(), std::min(a.coeffs()[0].prec(), b.coeffs()[0].prec()));
    for (const auto& c : a.coeffs()) prec = std::min(prec, c.prec());
    for (const auto& c : b.coeffs()) prec = std::min(prec, c.prec());
    const mpz_class& mod = ctx->pow_p(prec);

    std::vector<mpz_class> prod(2 * pn - 1);
    for (unsigned long i = 0; i < pn; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (unsigned long j = 0; j < pn; ++j) {
            prod[i + j] += a.coeff(i).value() * b.coeff(j).value();
        }
    }
    std::vector<mpz_class> w = omega_coeffs(ctx, a.level());
    for (unsigned long d = prod.size(); d-- > pn;) {
        mpz_fdiv_r(prod[d].get_mpz_t(), prod[d].get_mpz_t(), mod.get_mpz_t());
        mpz_class lead = prod[d];
        prod[d] = 0;
        if (lead != 0)
            for (unsigned long i = 1; i < pn; ++i) prod[d - pn + i] -= lead * w[i];
    }
    std::vector<PadicScalar> out;
    out.reserve(pn);
    for (unsigned long t = 0; t < pn; ++t) out.emplace_back(ctx, prod[t], prec);
    return GroupRingElement(ctx, a.level(), std::move(out));
}

GroupRingElement gamma_to_T(const CtxPtr& ctx, unsigned n, const std::vector<PadicScalar>& gamma_coeffs) {
    unsigned long pn = pow_pn(ctx->p(), n);
    assert(gamma_coeffs.size() == pn);
    unsigned prec = ctx->M();
    for (const auto& c : gamma_coeffs) prec = std::min(prec, c.prec());
    const mpz_class& mod = ctx->pow_p(prec);
    std::vector<mpz_class> w = omega_coeffs(ctx, n);

    std::vector<mpz_class> poly(pn), row(pn);
    row[0] = 1;  // (1+T)^0
    for (unsigned long i = 0; i < pn; ++i) {
        const mpz_class& gi = gamma_coeffs[i].value();
        if (gi != 0)
            for (unsigned long t = 0; t < pn; ++t) {
                if (row[t] != 0) {
                    poly[t] += gi * row[t];
                    mpz_fdiv_r(poly[t].get_mpz_t(), poly[t].get_mpz_t(), mod.get_mpz_t());
                }
            }
        if (i + 1 < pn) {
            // row *= (1+T), reducing T^{pn} via omega_n
            mpz_class carry = row[pn - 1];
            for (unsigned long t = pn - 1; t > 0; --t) {
                row[t] += row[t - 1];
                mpz_fdiv_r(row[t].get_mpz_t(), row[t].get_mpz_t(), mod.get_mpz_t());
            }
            if (carry != 0) {
                for (unsigned long t = 1; t < pn; ++t) {
                    row[t] -= carry * w[t];
                    mpz_fdiv_r(row[t].get_mpz_t(), row[t].get_mpz_t(), mod.get_mpz_t());
                }
            }
        }
    }
    std::vector<PadicScalar> out;
    out.reserve(pn);
    for (unsigned long t = 0; t < pn; ++t) out.emplace_back(ctx, poly[t], prec);
    return GroupRingElement(ctx, n, std::move(out));
}

WeierstrassData weierstrass_prepare(const TruncatedSeries& f) {
    const CtxPtr& ctx = f.ctx();
    if (ctx->M() < 2) throw padl_error("weierstrass_prepare needs M >= 2");
    unsigned N = f.N();

    // lambda = least index with a unit coefficient
    unsigned lambda = N;
    for (unsigned t = 0; t < N; ++t) {
        if (!f.coeff(t).is_zero() && f.coeff(t).valuation() == 0) {
            lambda = t;
            break;
        }
    }
    if (lambda == N) throw mu_positive();
    if (N <= lambda + 1 && lambda > 0) throw padl_error("truncation too short for lambda");

    unsigned Nu = N - lambda;
    // f = E + T^lambda * h with h a unit series, E supported below lambda
    std::vector<PadicScalar> hc(f.coeffs().begin() + lambda, f.coeffs().end());
    TruncatedSeries h(ctx, std::move(hc));
    TruncatedSeries hinv = invert_unit(h);

    // Weierstrass division of T^lambda by f:  T^lambda = q f + r.
    // Iterate on the p-adically small remainder; M passes suffice.
    TruncatedSeries q(ctx, Nu);
    std::vector<PadicScalar> r(lambda, PadicScalar(ctx, 0L));
    TruncatedSeries g(ctx, N);
    if (lambda < N)
        g.set_coeff(lambda, PadicScalar(ctx, 1L));
    for (unsigned pass = 0; pass <= ctx->M(); ++pass) {
        bool zero = true;
        for (unsigned t = 0; t < N && zero; ++t) zero = g.coeff(t).is_zero();
        if (zero) break;
        // q_i = (g div T^lambda) * h^{-1}; r_i = g mod T^lambda
        std::vector<PadicScalar> top(g.coeffs().begin() + lambda, g.coeffs().end());
        TruncatedSeries qi = mul(TruncatedSeries(ctx, std::move(top)), hinv);
        q = q + qi;
        for (unsigned t = 0; t < lambda; ++t) r[t] = r[t] + g.coeff(t);
        // g <- -q_i * E  (each pass gains one power of p)
        TruncatedSeries next(ctx, N);
        for (unsigned t = 0; t < lambda; ++t) {
            // coefficient of T^{t+i} in -q_i * E
            if (f.coeff(t).is_zero()) continue;
            for (unsigned i = 0; i < Nu && t + i < N; ++i)
                next.set_coeff(t + i, next.coeff(t + i) - qi.coeff(i) * f.coeff(t));
        }
        g = next;
    }

    // P = T^lambda - r, u = q^{-1}
    std::vector<PadicScalar> pc(lambda + 1, PadicScalar(ctx, 0L));
    for (unsigned t = 0; t < lambda; ++t) pc[t] = -r[t];
    pc[lambda] = PadicScalar(ctx, 1L);
    DistinguishedPoly P(ctx, std::move(pc));
    TruncatedSeries u = invert_unit(q);
    return WeierstrassData{lambda, std::move(P), std::move(u)};
}

ShiftedPoly shift_variable(const DistinguishedPoly& P) {
    const CtxPtr& ctx = P.ctx();
    unsigned deg = P.lambda();
    // Q(t) = P(t-1): expand each (t-1)^i
    std::vector<PadicScalar> out(deg + 1, PadicScalar(ctx, 0L));
    std::vector<PadicScalar> pow{PadicScalar(ctx, 1L)};  // (t-1)^0
    for (unsigned i = 0; i <= deg; ++i) {
        for (unsigned j = 0; j < pow.size(); ++j) out[j] = out[j] + pow[j] * P.coeff(i);
        if (i < deg) {
            std::vector<PadicScalar> next(pow.size() + 1, PadicScalar(ctx, 0L));
            for (unsigned j = 0; j < pow.size(); ++j) {
                next[j + 1] = next[j + 1] + pow[j];
                next[j] = next[j] - pow[j];
            }
            pow = std::move(next);
        }
    }
    return ShiftedPoly{ctx, std::move(out)};
}

}  // namespace padl
