#include "ellgauss/hp.hpp"

#include <cstdlib>
#include <memory>
#include <stdexcept>

#include "ellgauss/error.hpp"

namespace ellgauss {

namespace {

mpfr_prec_t wider(const Real& x, const Real& y) { return x.prec() > y.prec() ? x.prec() : y.prec(); }

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::round_to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

mpz_class Real::round_to_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string out = std::to_string(prec()) + ":" + buf;
  mpfr_free_str(buf);
  return out;
}

Real Real::from_hex(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "hex float lacks precision prefix");
  long prec = std::stol(s.substr(0, colon));
  if (prec < MPFR_PREC_MIN || prec > 1 << 20) throw Error(ErrorKind::InvalidArgument, "bad precision in hex float");
  Real r(static_cast<mpfr_prec_t>(prec));
  std::string body = s.substr(colon + 1);
  if (mpfr_set_str(r.v_, body.c_str(), 0, MPFR_RNDN) != 0)
    throw Error(ErrorKind::InvalidArgument, "malformed hex float '" + body + "'");
  return r;
}

std::string Real::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out = buf;
  mpfr_free_str(buf);
  return out;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& x, long y) {
  Real r(x.prec());
  mpfr_mul_si(r.v_, x.v_, y, MPFR_RNDN);
  return r;
}

Real operator/(const Real& x, long y) {
  Real r(x.prec());
  mpfr_div_si(r.v_, x.v_, y, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::two_pow(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

#define ELLGAUSS_UNARY(name, fn)             \
  Real name(const Real& x) {                 \
    Real r(x.prec());                        \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

ELLGAUSS_UNARY(sqrt, mpfr_sqrt)
ELLGAUSS_UNARY(abs, mpfr_abs)
ELLGAUSS_UNARY(exp, mpfr_exp)
ELLGAUSS_UNARY(log, mpfr_log)
ELLGAUSS_UNARY(gamma, mpfr_gamma)
ELLGAUSS_UNARY(cbrt, mpfr_cbrt)

#undef ELLGAUSS_UNARY

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& x, const Real& y) { return x < y ? y : x; }

HPComplex::HPComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  mpfr_prec_t p = prec();
  if (re_.prec() < p) {
    Real t(p);
    mpfr_set(t.get(), re_.get(), MPFR_RNDN);
    re_ = std::move(t);
  }
  if (im_.prec() < p) {
    Real t(p);
    mpfr_set(t.get(), im_.get(), MPFR_RNDN);
    im_ = std::move(t);
  }
}

Real HPComplex::abs() const {
  Real r(prec());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

HPComplex operator*(const HPComplex& x, const HPComplex& y) {
  return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
}

HPComplex operator/(const HPComplex& x, const HPComplex& y) {
  Real n = y.norm();
  return {(x.re_ * y.re_ + x.im_ * y.im_) / n, (x.im_ * y.re_ - x.re_ * y.im_) / n};
}

HPComplex HPComplex::pow(unsigned e) const {
  HPComplex r(Real(1L, prec()), Real(0L, prec()));
  HPComplex x = *this;
  while (e) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

std::string HPComplex::to_string(int digits) const {
  std::string im = im_.to_decimal(digits);
  if (im[0] != '-') im = "+" + im;
  return re_.to_decimal(digits) + im + "i";
}

}  // namespace ellgauss
