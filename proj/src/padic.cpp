#include "padl/padic.hpp"

#include <cassert>

namespace padl {

namespace {

bool is_prime_ul(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeContext::PrimeContext(unsigned long p, unsigned M) : p_(p), M_(M) {
    if (p < 3 || !is_prime_ul(p)) throw schema_error("p must be an odd prime, got " + std::to_string(p));
    if (M < 1) throw schema_error("precision M must be >= 1");
    pows_.reserve(M + 1);
    mpz_class cur = 1;
    for (unsigned i = 0; i <= M; ++i) {
        pows_.push_back(cur);
        cur *= p;
    }
}

CtxPtr make_context(unsigned long p, unsigned M) {
    return std::make_shared<const PrimeContext>(p, M);
}

PadicScalar::PadicScalar(CtxPtr ctx, mpz_class value)
    : ctx_(std::move(ctx)), value_(std::move(value)), prec_(ctx_->M()) {
    canonicalize();
}

PadicScalar::PadicScalar(CtxPtr ctx, mpz_class value, unsigned prec)
    : ctx_(std::move(ctx)), value_(std::move(value)), prec_(prec) {
    assert(prec_ <= ctx_->M());
    canonicalize();
}

PadicScalar::PadicScalar(CtxPtr ctx, long value) : PadicScalar(std::move(ctx), mpz_class(value)) {}

void PadicScalar::canonicalize() {
    const mpz_class& m = ctx_->pow_p(prec_);
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
}

bool PadicScalar::is_unit() const {
    if (prec_ == 0) throw precision_exhausted("no digits left");
    return mpz_divisible_ui_p(value_.get_mpz_t(), ctx_->p()) == 0 && value_ != 0;
}

unsigned PadicScalar::valuation() const {
    if (value_ == 0) throw precision_exhausted();
    unsigned v = 0;
    mpz_class t = value_;
    while (mpz_divisible_ui_p(t.get_mpz_t(), ctx_->p())) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), ctx_->p());
        ++v;
    }
    assert(v < prec_);
    return v;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    assert(ctx_->same(*o.ctx_));
    return PadicScalar(ctx_, value_ + o.value_, std::min(prec_, o.prec_));
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    assert(ctx_->same(*o.ctx_));
    return PadicScalar(ctx_, value_ - o.value_, std::min(prec_, o.prec_));
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    assert(ctx_->same(*o.ctx_));
    return PadicScalar(ctx_, value_ * o.value_, std::min(prec_, o.prec_));
}

PadicScalar PadicScalar::operator-() const { return PadicScalar(ctx_, -value_, prec_); }

bool PadicScalar::operator==(const PadicScalar& o) const {
    return ctx_->same(*o.ctx_) && prec_ == o.prec_ && value_ == o.value_;
}

PadicScalar PadicScalar::mul_small(long c) const {
    return PadicScalar(ctx_, value_ * c, prec_);
}

PadicScalar PadicScalar::inverse() const {
    if (!is_unit()) throw padl_error("inverse of a non-unit");
    mpz_class r;
    int ok = mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), ctx_->pow_p(prec_).get_mpz_t());
    assert(ok);
    (void)ok;
    return PadicScalar(ctx_, std::move(r), prec_);
}

PadicScalar PadicScalar::div(const PadicScalar& den) const {
    unsigned v = den.valuation();
    if (v == 0) return *this * den.inverse();
    if (value_ == 0) return PadicScalar(ctx_, 0, std::min(prec_, den.prec_) - v);
    if (valuation() < v) throw padl_error("division would leave the ring: v(num) < v(den)");
    return div_pow_p(v) * den.div_pow_p(v).inverse();
}

PadicScalar PadicScalar::div_pow_p(unsigned v) const {
    if (v == 0) return *this;
    if (prec_ < v + 1) throw precision_exhausted("division by p^" + std::to_string(v) + " exhausts precision");
    if (!mpz_divisible_p(value_.get_mpz_t(), ctx_->pow_p(v).get_mpz_t()))
        throw padl_error("value not divisible by p^" + std::to_string(v));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), ctx_->pow_p(v).get_mpz_t());
    return PadicScalar(ctx_, std::move(q), prec_ - v);
}

PadicScalar PadicScalar::pow(unsigned long e) const {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), value_.get_mpz_t(), e, ctx_->pow_p(prec_).get_mpz_t());
    return PadicScalar(ctx_, std::move(r), prec_);
}

PadicScalar PadicScalar::to_ctx(const CtxPtr& c) const {
    assert(c->p() == ctx_->p());
    return PadicScalar(c, value_, std::min(prec_, c->M()));
}

PadicScalar PadicScalar::with_prec(unsigned prec) const {
    assert(prec <= ctx_->M());
    return PadicScalar(ctx_, value_, std::min(prec, prec_));
}

bool PadicScalar::congruent(const PadicScalar& o, unsigned digits) const {
    assert(ctx_->p() == o.ctx_->p());
    assert(digits <= prec_ && digits <= o.prec_);
    mpz_class d = value_ - o.value_;
    return mpz_divisible_p(d.get_mpz_t(), ctx_->pow_p(digits).get_mpz_t()) != 0;
}

PadicScalar teichmuller(const mpz_class& a, const CtxPtr& ctx) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), ctx->p()))
        throw padl_error("teichmuller requires gcd(a, p) = 1");
    // x <- x^p converges to the (p-1)-th root of unity lifting a mod p.
    mpz_class x = a % ctx->modulus();
    if (x < 0) x += ctx->modulus();
    for (unsigned i = 0; i <= ctx->M(); ++i)
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), ctx->p(), ctx->modulus().get_mpz_t());
    return PadicScalar(ctx, std::move(x));
}

PadicScalar teichmuller(long a, const CtxPtr& ctx) { return teichmuller(mpz_class(a), ctx); }

PadicScalar embed_rational(const mpz_class& num, const mpz_class& den, const CtxPtr& ctx) {
    if (mpz_divisible_ui_p(den.get_mpz_t(), ctx->p()))
        throw padl_error("denominator divisible by p");
    mpz_class dinv;
    int ok = mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), ctx->modulus().get_mpz_t());
    assert(ok);
    (void)ok;
    return PadicScalar(ctx, num * dinv);
}

PadicScalar embed_rational(const mpq_class& q, const CtxPtr& ctx) {
    return embed_rational(q.get_num(), q.get_den(), ctx);
}

PadicScalar pow_onep(long s, const CtxPtr& ctx) {
    mpz_class base = ctx->p() + 1;
    if (s < 0) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), ctx->modulus().get_mpz_t());
        base = inv;
        s = -s;
    }
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(s), ctx->modulus().get_mpz_t());
    return PadicScalar(ctx, std::move(r));
}

}  // namespace padl
