#include "padl/lfunction.hpp"

#include <cassert>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padl {

// ---------------------------------------------------------------- Bernoulli

namespace {

std::mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli;  // B_0, B_1, ...
bool g_cache_loaded = false;

std::string cache_file() {
    const char* dir = std::getenv("PADL_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/bernoulli.txt";
}

void load_disk_cache() {
    g_cache_loaded = true;
    std::string path = cache_file();
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return;
    unsigned m;
    std::string frac;
    std::vector<mpq_class> loaded;
    while (in >> m >> frac) {
        if (m != loaded.size()) return;  // corrupt; ignore
        loaded.emplace_back(frac);
        loaded.back().canonicalize();
    }
    if (loaded.size() > g_bernoulli.size()) g_bernoulli = std::move(loaded);
}

void store_disk_cache() {
    std::string path = cache_file();
    if (path.empty()) return;
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    for (unsigned m = 0; m < g_bernoulli.size(); ++m)
        out << m << ' ' << g_bernoulli[m].get_str() << '\n';
}

}  // namespace

const mpq_class& bernoulli(unsigned m, unsigned bound) {
    if (m > bound) throw padl_error("bernoulli index " + std::to_string(m) + " exceeds bound " + std::to_string(bound));
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (!g_cache_loaded) load_disk_cache();
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    bool grew = false;
    while (g_bernoulli.size() <= m) {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        unsigned n = static_cast<unsigned>(g_bernoulli.size());
        mpq_class s = 0;
        mpz_class binom = 1;  // C(n+1, j)
        for (unsigned j = 0; j < n; ++j) {
            s += mpq_class(binom) * g_bernoulli[j];
            binom *= (n + 1 - j);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
        }
        s /= static_cast<long>(n + 1);
        g_bernoulli.push_back(-s);
        grew = true;
    }
    if (grew) store_disk_cache();
    return g_bernoulli[m];
}

mpq_class zeta_neg(long l, unsigned bound) {
    if (l >= 0) throw padl_error("zeta_neg requires l < 0");
    if (l % 2 == 0) return 0;  // trivial zero
    unsigned m = static_cast<unsigned>(1 - l);
    return -bernoulli(m, bound) / mpq_class(static_cast<long>(m));
}

// ------------------------------------------------------------------ Branch

BranchSpec::BranchSpec(CtxPtr c, unsigned k_, unsigned N_) : ctx(std::move(c)), k(k_), N(N_) {
    if (k % 2 == 0) throw schema_error("component index k must be odd");
    unsigned long pm1 = ctx->p() - 1;
    if (k % pm1 == 1) throw schema_error("k = 1 mod (p-1) is excluded");
    if (N < 1) throw schema_error("truncation N must be >= 1");
}

unsigned BranchSpec::k_norm() const {
    unsigned long pm1 = ctx->p() - 1;
    unsigned r = static_cast<unsigned>(k % pm1);
    return r;  // odd since k odd and p-1 even
}

std::vector<long> branch_nodes(unsigned long p, unsigned k, unsigned count) {
    long pm1 = static_cast<long>(p - 1);
    long l0 = static_cast<long>(k % (p - 1)) - pm1;  // largest negative = k
    std::vector<long> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) out.push_back(l0 - pm1 * static_cast<long>(i));
    return out;
}

PadicScalar interp_value(const CtxPtr& ctx, unsigned k, long l, unsigned bernoulli_bound) {
    unsigned long pm1 = ctx->p() - 1;
    if (l >= 0) throw padl_error("interpolation node must be negative");
    if (((l % static_cast<long>(pm1)) + static_cast<long>(pm1)) % static_cast<long>(pm1) !=
        static_cast<long>(k % pm1))
        throw padl_error("node " + std::to_string(l) + " is not = k mod (p-1)");
    if (l % 2 == 0) throw padl_error("even node sits at a trivial zero");
    // (1 - p^{-l}) zeta(l);  p^{-l} = p^{|l|} is integral
    mpz_class ppow;
    mpz_ui_pow_ui(ppow.get_mpz_t(), ctx->p(), static_cast<unsigned long>(-l));
    mpq_class val = (1 - mpq_class(ppow)) * zeta_neg(l, bernoulli_bound);
    return embed_rational(val, ctx);
}

TruncatedSeries branch_by_interpolation(const BranchSpec& spec, unsigned bernoulli_bound) {
    const CtxPtr& ctx = spec.ctx;
    unsigned long p = ctx->p();
    unsigned N = spec.N;
    unsigned guard = N + (N + static_cast<unsigned>(p) - 2) / (static_cast<unsigned>(p) - 1) + 2;
    CtxPtr work = make_context(p, ctx->M() + guard);

    std::vector<long> ls = branch_nodes(p, spec.k, N);
    std::vector<PadicScalar> xs, dd;
    xs.reserve(N);
    dd.reserve(N);
    PadicScalar one(work, 1L);
    for (long l : ls) {
        xs.push_back(pow_onep(l, work) - one);
        dd.push_back(interp_value(work, spec.k, l, bernoulli_bound));
    }
    // Newton divided differences; node differences have valuation 1 + v_p(i-i')
    for (unsigned d = 1; d < N; ++d)
        for (unsigned i = N - 1; i >= d; --i) dd[i] = (dd[i] - dd[i - 1]).div(xs[i] - xs[i - d]);

    // expand sum_d dd[d] * prod_{i<d} (T - x_i)
    std::vector<PadicScalar> coeffs(N, PadicScalar(work, 0L));
    std::vector<PadicScalar> basis{one};
    for (unsigned d = 0; d < N; ++d) {
        for (unsigned t = 0; t < basis.size(); ++t) coeffs[t] = coeffs[t] + dd[d] * basis[t];
        if (d + 1 < N) {
            std::vector<PadicScalar> next(basis.size() + 1, PadicScalar(work, 0L));
            for (unsigned t = 0; t < basis.size(); ++t) {
                next[t + 1] = next[t + 1] + basis[t];
                next[t] = next[t] - xs[d] * basis[t];
            }
            basis = std::move(next);
        }
    }
    std::vector<PadicScalar> out;
    out.reserve(N);
    for (auto& c : coeffs) {
        if (c.prec() < ctx->M())
            throw precision_exhausted("divided differences consumed the guard (have " +
                                      std::to_string(c.prec()) + ", need " + std::to_string(ctx->M()) + ")");
        out.push_back(c.to_ctx(ctx));
    }
    return TruncatedSeries(ctx, std::move(out));
}

// ------------------------------------------------------------ Stickelberger

namespace kernels {

namespace {

inline void tally_one(unsigned long a, unsigned long p, unsigned long F, unsigned long pn, int iota_sign,
                      const std::vector<mpz_class>& wk, const std::vector<unsigned long>& winv_modF,
                      const std::vector<uint32_t>& iota_table, std::vector<mpz_class>& acc) {
    unsigned long r = a % p;
    // iota(a): exponent of the 1-unit part a / omega(a) mod F
    unsigned long u = static_cast<unsigned long>((static_cast<unsigned __int128>(a) * winv_modF[r]) % F);
    unsigned long iota = iota_table[u];
    unsigned long slot = iota_sign > 0 ? iota % pn : (pn - iota % pn) % pn;
    mpz_addmul_ui(acc[slot].get_mpz_t(), wk[r].get_mpz_t(), a);
}

}  // namespace

std::vector<mpz_class> stickelberger_tally_serial(unsigned long p, unsigned long F, unsigned long pn,
                                                  int iota_sign, const std::vector<mpz_class>& wk,
                                                  const std::vector<unsigned long>& winv_modF,
                                                  const std::vector<uint32_t>& iota_table,
                                                  const mpz_class& mod) {
    std::vector<mpz_class> acc(pn, mpz_class(0));
    for (unsigned long a = 1; a < F; ++a) {
        if (a % p == 0) continue;
        tally_one(a, p, F, pn, iota_sign, wk, winv_modF, iota_table, acc);
    }
    for (auto& x : acc) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return acc;
}

std::vector<mpz_class> stickelberger_tally_omp(unsigned long p, unsigned long F, unsigned long pn,
                                               int iota_sign, const std::vector<mpz_class>& wk,
                                               const std::vector<unsigned long>& winv_modF,
                                               const std::vector<uint32_t>& iota_table,
                                               const mpz_class& mod) {
    std::vector<mpz_class> acc(pn, mpz_class(0));
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<mpz_class> local(pn, mpz_class(0));
#pragma omp for schedule(static) nowait
        for (long long a = 1; a < static_cast<long long>(F); ++a) {
            if (a % static_cast<long long>(p) == 0) continue;
            tally_one(static_cast<unsigned long>(a), p, F, pn, iota_sign, wk, winv_modF, iota_table, local);
        }
#pragma omp critical
        for (unsigned long j = 0; j < pn; ++j) acc[j] += local[j];
    }
#else
    for (unsigned long a = 1; a < F; ++a) {
        if (a % p == 0) continue;
        tally_one(a, p, F, pn, iota_sign, wk, winv_modF, iota_table, acc);
    }
#endif
    for (auto& x : acc) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return acc;
}

}  // namespace kernels

GroupRingElement stickelberger_element(const CtxPtr& ctx, unsigned n, const Calibration& conv) {
    unsigned long p = ctx->p();
    unsigned long pn = pow_pn(p, n);
    unsigned long F = pn * p;  // p^{n+1}
    unsigned W = ctx->M() + n + 1;
    CtxPtr work = make_context(p, W);
    const mpz_class& mod = work->modulus();

    // omega(a)^{twist} depends only on a mod p
    std::vector<mpz_class> wk(p);
    std::vector<unsigned long> winv_modF(p);
    for (unsigned long r = 1; r < p; ++r) {
        PadicScalar w = teichmuller(static_cast<long>(r), work);
        long e = conv.twist;
        unsigned long pm1 = p - 1;
        unsigned long epos = static_cast<unsigned long>(((e % static_cast<long>(pm1)) + static_cast<long>(pm1)) % static_cast<long>(pm1));
        wk[r] = w.pow(epos).value();
        mpz_class wf = w.value() % F, winv;
        mpz_invert(winv.get_mpz_t(), wf.get_mpz_t(), mpz_class(F).get_mpz_t());
        winv_modF[r] = mpz_get_ui(winv.get_mpz_t());
    }
    // iota table: (1+p)^j mod F -> j
    std::vector<uint32_t> iota_table(F, 0);
    {
        mpz_class g = 1, onep = p + 1, Fz = F;
        for (unsigned long j = 0; j < pn; ++j) {
            iota_table[mpz_get_ui(g.get_mpz_t())] = static_cast<uint32_t>(j);
            g = g * onep % Fz;
        }
    }

    std::vector<mpz_class> acc = kernels::stickelberger_tally_omp(p, F, pn, conv.iota_sign, wk,
                                                                  winv_modF, iota_table, mod);

    // normalize by p^{n+1}; the eigenprojection makes each slot divisible
    std::vector<PadicScalar> gamma;
    gamma.reserve(pn);
    const mpz_class& Fpow = work->pow_p(n + 1);
    for (auto& s : acc) {
        if (!mpz_divisible_p(s.get_mpz_t(), Fpow.get_mpz_t()))
            throw calibration_failure("Stickelberger slot not divisible by p^{n+1} (twist " +
                                      std::to_string(conv.twist) + ")");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), s.get_mpz_t(), Fpow.get_mpz_t());
        if (conv.global_sign < 0) q = -q;
        gamma.emplace_back(ctx, q, ctx->M());
    }
    return gamma_to_T(ctx, n, gamma);
}

namespace {

std::mutex g_cal_mutex;
std::map<std::pair<unsigned long, unsigned>, Calibration> g_cal_cache;

}  // namespace

Calibration calibrate_stickelberger(unsigned long p, unsigned k) {
    unsigned long pm1 = p - 1;
    unsigned kn = static_cast<unsigned>(k % pm1);
    {
        std::lock_guard<std::mutex> lock(g_cal_mutex);
        auto it = g_cal_cache.find({p, kn});
        if (it != g_cal_cache.end()) return it->second;
    }

    const unsigned n_cal = 1, M_cal = 8;
    CtxPtr ctx = make_context(p, M_cal);
    long kl = static_cast<long>(kn);
    std::vector<long> twists = {-kl, kl - 1, 1 - kl, kl};
    // normalize mod p-1 and dedupe (e.g. -k = k when 2k = 0 mod p-1)
    std::vector<long> uniq;
    for (long t : twists) {
        long tn = ((t % static_cast<long>(pm1)) + static_cast<long>(pm1)) % static_cast<long>(pm1);
        bool seen = false;
        for (long u : uniq) seen = seen || u == tn;
        if (!seen) uniq.push_back(tn);
    }

    std::vector<long> ls = branch_nodes(p, kn, 3);
    std::vector<Calibration> winners;
    std::string attempts;
    for (long twist : uniq)
        for (int isign : {-1, +1})
            for (int gsign : {-1, +1}) {
                Calibration c{twist, isign, gsign};
                attempts += "(w^" + std::to_string(twist) + "," + (isign > 0 ? "+i" : "-i") + "," +
                            (gsign > 0 ? "+" : "-") + ") ";
                GroupRingElement el = [&]() -> GroupRingElement {
                    try {
                        return stickelberger_element(ctx, n_cal, c);
                    } catch (const calibration_failure&) {
                        return GroupRingElement(ctx, 0, {PadicScalar(ctx, 0L)});  // marker: rejected
                    }
                }();
                if (el.level() != n_cal) continue;  // integrality rejected this twist
                bool ok = true;
                for (long l : ls) {
                    long v = 0;
                    for (long t = -l; t % static_cast<long>(p) == 0; t /= static_cast<long>(p)) ++v;
                    unsigned digits = n_cal + 1 + static_cast<unsigned>(v);
                    PadicScalar got = el.eval_node(l);
                    PadicScalar want = interp_value(ctx, kn, l);
                    if (!got.congruent(want, std::min(digits, std::min(got.prec(), want.prec())))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) winners.push_back(c);
            }
    if (winners.empty())
        throw calibration_failure("no Stickelberger convention matched 3 nodes; tried: " + attempts);
    // conventions coinciding as functions (same twist class) are not distinct
    for (size_t i = 1; i < winners.size(); ++i)
        if (winners[i].twist != winners[0].twist || winners[i].iota_sign != winners[0].iota_sign ||
            winners[i].global_sign != winners[0].global_sign)
            throw calibration_failure("ambiguous calibration: multiple conventions matched");

    std::lock_guard<std::mutex> lock(g_cal_mutex);
    g_cal_cache.insert({{p, kn}, winners[0]});
    return winners[0];
}

GroupRingElement branch_by_stickelberger(const BranchSpec& spec, unsigned n) {
    Calibration conv = calibrate_stickelberger(spec.ctx->p(), spec.k);
    return stickelberger_element(spec.ctx, n, conv);
}

// -------------------------------------------------------------- B_{1,w^r}

PadicScalar gen_bernoulli_b1(long r, const CtxPtr& ctx) {
    unsigned long p = ctx->p();
    long pm1 = static_cast<long>(p - 1);
    long rn = ((r % pm1) + pm1) % pm1;
    if (rn == 0) throw padl_error("gen_bernoulli_b1: trivial character rejected");
    if (rn == pm1 - 1)
        throw padl_error("gen_bernoulli_b1: r = -1 mod (p-1) has a pole (excluded class)");
    mpz_class sum = 0;
    for (unsigned long a = 1; a < p; ++a) {
        PadicScalar w = teichmuller(static_cast<long>(a), ctx);
        sum += w.pow(static_cast<unsigned long>(rn)).value() * a;
    }
    sum %= ctx->modulus();
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), p))
        throw padl_error("gen_bernoulli_b1: sum not divisible by p");
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), sum.get_mpz_t(), p);
    return PadicScalar(ctx, std::move(q), ctx->M() - 1);
}

unsigned lambda_invariant(const CtxPtr& ctx, unsigned k, unsigned bernoulli_bound) {
    for (unsigned N = 8;; N *= 2) {
        // node indices reach 1 - l_{N-1} ~ (p-1)N; stop when Bernoulli bound is hit
        if ((ctx->p() - 1) * (N + 1) > bernoulli_bound)
            throw padl_error("lambda escalation exceeded the Bernoulli bound; raise it");
        BranchSpec spec(ctx, k, N);
        TruncatedSeries f = branch_by_interpolation(spec, bernoulli_bound);
        WeierstrassData wd = weierstrass_prepare(f);
        if (wd.lambda < N / 2) return wd.lambda;
    }
}

}  // namespace padl
