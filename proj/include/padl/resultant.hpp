#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padl/series.hpp"

namespace padl {
namespace kernels {

// Valuation of the determinant of a square matrix over Z/p^M by elimination
// with minimal-valuation pivoting (only unit divisions occur).  Returns
// nullopt when a pivot column vanishes within the remaining precision.
// Deterministic pivot tie-break: lowest row index.  mat is row-major
// and is consumed.

// Reference implementation: arbitrary modulus, serial.
std::optional<unsigned> det_valuation_mpz_serial(std::vector<mpz_class> mat, unsigned long dim,
                                                 unsigned long p, unsigned M);

// Fast path: requires p^M < 2^63 (Montgomery arithmetic), row updates run
// under OpenMP.  Bit-identical to the reference for any thread count.
std::optional<unsigned> det_valuation_u64_omp(std::vector<uint64_t> mat, unsigned long dim,
                                              unsigned long p, unsigned M);

bool fits_u64(unsigned long p, unsigned M);

}  // namespace kernels

// v_p(Res(omega_n, Z)) for Z a polynomial of degree < p^n over Z/p^M.
// Computed by two independent routes that must agree:
//   (i)  valuation of det of the multiplication-by-Z map on (Z/p^M)[T]/(omega_n)
//   (ii) valuation of the Sylvester determinant of (omega_n, Z)
// Throws precision_exhausted when the determinant vanishes mod p^M.
unsigned resultant_valuation(const GroupRingElement& Z);
unsigned resultant_valuation(const DistinguishedPoly& P, unsigned n);

// The individual routes, exposed for testing and benchmarking.
std::optional<unsigned> resultant_valuation_multmatrix(const CtxPtr& ctx, unsigned n,
                                                       const std::vector<PadicScalar>& poly);
std::optional<unsigned> resultant_valuation_sylvester(const CtxPtr& ctx, unsigned n,
                                                      const std::vector<PadicScalar>& poly);

}  // namespace padl
