#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "padl/errors.hpp"

namespace padl {

// Ambient ring Z/p^M for an odd prime p and working absolute precision M.
// Immutable after construction; shared by every scalar derived from it.
class PrimeContext {
  public:
    PrimeContext(unsigned long p, unsigned M);

    unsigned long p() const { return p_; }
    unsigned M() const { return M_; }
    // p^i for 0 <= i <= M
    const mpz_class& pow_p(unsigned i) const { return pows_.at(i); }
    const mpz_class& modulus() const { return pows_.back(); }

    bool same(const PrimeContext& o) const { return p_ == o.p_ && M_ == o.M_; }

  private:
    unsigned long p_;
    unsigned M_;
    std::vector<mpz_class> pows_;
};

using CtxPtr = std::shared_ptr<const PrimeContext>;

CtxPtr make_context(unsigned long p, unsigned M);

// Element of Z/p^M with tracked absolute precision prec <= M.
// Canonical form: value in [0, p^prec).  Arithmetic never reports more
// precision than its inputs justify.
class PadicScalar {
  public:
    PadicScalar() = default;
    PadicScalar(CtxPtr ctx, mpz_class value);                 // full precision M
    PadicScalar(CtxPtr ctx, mpz_class value, unsigned prec);  // given precision
    PadicScalar(CtxPtr ctx, long value);

    const CtxPtr& ctx() const { return ctx_; }
    const mpz_class& value() const { return value_; }
    unsigned prec() const { return prec_; }

    bool is_zero() const { return value_ == 0; }  // zero within precision
    bool is_unit() const;

    // v with p^v || value; throws precision_exhausted if value == 0 mod p^prec.
    unsigned valuation() const;

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;
    bool operator==(const PadicScalar& o) const;

    PadicScalar mul_small(long c) const;
    PadicScalar inverse() const;  // requires a unit
    // General division: divides out the common p-power of the divisor,
    // reducing precision by its valuation.  Requires v(num) >= v(den).
    PadicScalar div(const PadicScalar& den) const;
    // Exact division by p^v; reduces precision by v.
    PadicScalar div_pow_p(unsigned v) const;
    PadicScalar pow(unsigned long e) const;

    // Reinterpret in another context with the same p (possibly smaller M).
    PadicScalar to_ctx(const CtxPtr& c) const;
    PadicScalar with_prec(unsigned prec) const;

    // Congruent mod p^digits (within both precisions)?
    bool congruent(const PadicScalar& o, unsigned digits) const;

  private:
    void canonicalize();

    CtxPtr ctx_;
    mpz_class value_{0};
    unsigned prec_{0};
};

// Teichmuller lift: the unique (p-1)-th root of unity congruent to a mod p.
PadicScalar teichmuller(long a, const CtxPtr& ctx);
PadicScalar teichmuller(const mpz_class& a, const CtxPtr& ctx);

// Image of num/den in Z/p^M; den must be coprime to p.
PadicScalar embed_rational(const mpz_class& num, const mpz_class& den, const CtxPtr& ctx);
PadicScalar embed_rational(const mpq_class& q, const CtxPtr& ctx);

// (1+p)^s mod p^M, s of either sign.
PadicScalar pow_onep(long s, const CtxPtr& ctx);

}  // namespace padl
