#pragma once

#include <vector>

#include "padl/padic.hpp"

namespace padl {

// Element of Z_p[[T]] known mod (p^M, T^N).  Coefficients carry their own
// certified precision.
class TruncatedSeries {
  public:
    TruncatedSeries(CtxPtr ctx, std::vector<PadicScalar> coeffs);
    // zero series of length N at full precision
    TruncatedSeries(CtxPtr ctx, unsigned N);

    const CtxPtr& ctx() const { return ctx_; }
    unsigned N() const { return static_cast<unsigned>(coeffs_.size()); }
    const PadicScalar& coeff(unsigned t) const { return coeffs_.at(t); }
    const std::vector<PadicScalar>& coeffs() const { return coeffs_; }
    void set_coeff(unsigned t, PadicScalar c);

    unsigned min_prec() const;
    TruncatedSeries truncate(unsigned N) const;
    TruncatedSeries to_ctx(const CtxPtr& c) const;

  private:
    CtxPtr ctx_;
    std::vector<PadicScalar> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
// Truncated product; result length min(N_f, N_g).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
// Inverse of a unit series, same length.
TruncatedSeries invert_unit(const TruncatedSeries& f);

// f(x) for v(x) >= 1.  The reported precision accounts for the discarded
// tail: min(coefficient precisions, N * v(x)).
PadicScalar eval_at(const TruncatedSeries& f, const PadicScalar& x);

// Monic polynomial of degree lambda whose lower coefficients are divisible
// by p.
class DistinguishedPoly {
  public:
    DistinguishedPoly(CtxPtr ctx, std::vector<PadicScalar> coeffs);

    const CtxPtr& ctx() const { return ctx_; }
    unsigned lambda() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const PadicScalar& coeff(unsigned t) const { return coeffs_.at(t); }
    const std::vector<PadicScalar>& coeffs() const { return coeffs_; }

  private:
    CtxPtr ctx_;
    std::vector<PadicScalar> coeffs_;
};

// Same polynomial re-expanded in t = T + 1.
struct ShiftedPoly {
    CtxPtr ctx;
    std::vector<PadicScalar> coeffs;  // coefficient of t^i at index i
};

// Residue mod omega_n(T) = (1+T)^{p^n} - 1, stored as a polynomial in T of
// degree < p^n.
class GroupRingElement {
  public:
    GroupRingElement(CtxPtr ctx, unsigned n, std::vector<PadicScalar> coeffs);

    const CtxPtr& ctx() const { return ctx_; }
    unsigned level() const { return n_; }
    unsigned long dim() const { return static_cast<unsigned long>(coeffs_.size()); }
    const PadicScalar& coeff(unsigned long t) const { return coeffs_.at(t); }
    const std::vector<PadicScalar>& coeffs() const { return coeffs_; }

    PadicScalar eval_node(long s) const;  // substitute T = (1+p)^s - 1

  private:
    CtxPtr ctx_;
    unsigned n_;
    std::vector<PadicScalar> coeffs_;
};

struct WeierstrassData {
    unsigned lambda;
    DistinguishedPoly P;
    TruncatedSeries u;  // unit series, length N - lambda
};

// f = P * u with P distinguished of degree lambda and u a unit series.
// Throws mu_positive if every coefficient is divisible by p within precision.
WeierstrassData weierstrass_prepare(const TruncatedSeries& f);

// p^n, guarded against overflow of unsigned long.
unsigned long pow_pn(unsigned long p, unsigned n);

// Coefficients of omega_n(T) = sum_{i>=1} C(p^n, i) T^i mod p^M.
std::vector<mpz_class> omega_coeffs(const CtxPtr& ctx, unsigned n);

// Image of f mod omega_n.  Requires N >= p^n.
GroupRingElement reduce_mod_omega(const TruncatedSeries& f, unsigned n);

// Digits of the image certified against the unknown tail T^N * Z_p[[T]]:
// every monomial of degree >= N reduces to something divisible by
// p^{floor(N / p^n)}.
unsigned tail_certified_digits(unsigned N, unsigned long p, unsigned n);

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

// Convert gamma-basis coefficients (coefficient of (1+T)^i at index i) to the
// T-basis representation mod omega_n.
GroupRingElement gamma_to_T(const CtxPtr& ctx, unsigned n, const std::vector<PadicScalar>& gamma_coeffs);

ShiftedPoly shift_variable(const DistinguishedPoly& P);

}  // namespace padl
