#pragma once

#include <cstdint>
#include <vector>

#include "padl/series.hpp"

namespace padl {

// Exact Bernoulli number B_m, convention B_1 = -1/2, by the defining
// recurrence.  Values are cached; the cache may be persisted under
// $PADL_CACHE_DIR.  Throws padl_error past the bound.
const mpq_class& bernoulli(unsigned m, unsigned bound = 500);

// zeta(l) = -B_{1-l}/(1-l) for l < 0 (0 at negative even integers).
mpq_class zeta_neg(long l, unsigned bound = 500);

// Selects the branch attached to component k: the series interpolating
// (1 - p^{-l}) zeta(l) at negative l = k mod (p-1).
struct BranchSpec {
    CtxPtr ctx;
    unsigned k;  // odd, k != 1 mod (p-1)
    unsigned N;  // truncation order

    BranchSpec(CtxPtr c, unsigned k_, unsigned N_);
    unsigned k_norm() const;  // representative in (1, p-1)
};

// Interpolation nodes l_i = l_0 - (p-1) i with l_0 the largest negative
// integer = k mod (p-1); all nodes are odd since k is.
std::vector<long> branch_nodes(unsigned long p, unsigned k, unsigned count);

// (1 - p^{-l}) zeta(l) as an element of Z/p^M.  l must be negative, odd and
// = k mod (p-1).
PadicScalar interp_value(const CtxPtr& ctx, unsigned k, long l, unsigned bernoulli_bound = 500);

// Branch series mod (p^M, T^N) by p-adic Newton divided differences over the
// node schedule.  Each coefficient carries its certified precision.
TruncatedSeries branch_by_interpolation(const BranchSpec& spec, unsigned bernoulli_bound = 500);

// Stickelberger normalization found by calibration: the branch element is
//   gsign * (1/p^{n+1}) sum_{a<p^{n+1}, p∤a} a * omega(a)^{twist} * gamma^{isign*iota(a)}
// where a = omega(a) (1+p)^{iota(a)} mod p^{n+1}.
struct Calibration {
    long twist;      // exponent of omega, normalized mod p-1
    int iota_sign;   // +1 or -1
    int global_sign; // +1 or -1
};

// Resolve the convention against 3 interpolation nodes at level 1.
// Cached per (p, k).  Throws calibration_failure if no (or no unique)
// convention matches.
Calibration calibrate_stickelberger(unsigned long p, unsigned k);

// Exact image of the branch series in (Z/p^M)[T]/(omega_n), built from the
// calibrated character-twisted Stickelberger sum at level p^{n+1}.
GroupRingElement branch_by_stickelberger(const BranchSpec& spec, unsigned n);

// Same, with an explicit convention (used by calibration and for the
// deliberately mis-twisted negative control).  The component is encoded in
// the convention's twist.
GroupRingElement stickelberger_element(const CtxPtr& ctx, unsigned n, const Calibration& conv);

// B_{1,omega^r} = (1/p) sum_{a=1}^{p-1} a omega^r(a), exact mod p^{M-1}.
// r = 0 mod (p-1) is rejected; r = -1 mod (p-1) has a pole and is rejected.
// For even r the value is 0 (trivial zero of L(0, omega^r)).
PadicScalar gen_bernoulli_b1(long r, const CtxPtr& ctx);

// lambda = deg of the distinguished part of the branch series, with the
// N-escalation schedule (start 8, double until lambda < N/2).
unsigned lambda_invariant(const CtxPtr& ctx, unsigned k, unsigned bernoulli_bound = 500);

namespace kernels {

// Raw Stickelberger accumulation: slot j of the result is
//   sum of a * wk[a mod p] over units a < F with (isign * iota(a)) = j mod pn,
// reduced mod `mod`.  winv_modF[r] = omega(r)^{-1} mod F finds iota(a) via
// iota_table (indexed by the unit a * omega(a)^{-1} mod F).
std::vector<mpz_class> stickelberger_tally_serial(unsigned long p, unsigned long F, unsigned long pn,
                                                  int iota_sign, const std::vector<mpz_class>& wk,
                                                  const std::vector<unsigned long>& winv_modF,
                                                  const std::vector<uint32_t>& iota_table,
                                                  const mpz_class& mod);

std::vector<mpz_class> stickelberger_tally_omp(unsigned long p, unsigned long F, unsigned long pn,
                                               int iota_sign, const std::vector<mpz_class>& wk,
                                               const std::vector<unsigned long>& winv_modF,
                                               const std::vector<uint32_t>& iota_table,
                                               const mpz_class& mod);

}  // namespace kernels

}  // namespace padl
