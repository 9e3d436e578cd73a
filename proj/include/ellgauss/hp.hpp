#pragma once

// RAII wrappers over MPFR. Binary results take the larger operand precision.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace ellgauss {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128);
  Real(long v, mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const mpz_class& v, mpfr_prec_t prec);
  Real(const mpq_class& v, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long round_to_long() const;
  mpz_class round_to_mpz() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^{e-1} <= |x| < 2^e.
  long exponent() const { return mpfr_get_exp(v_); }

  /// Exact hexadecimal form such as "0x1.8p+1"; prefixed with the precision as "<prec>:".
  std::string to_hex() const;
  static Real from_hex(const std::string& s);
  std::string to_decimal(int digits) const;

  Real operator-() const;
  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  friend Real operator/(const Real& x, const Real& y);
  friend Real operator*(const Real& x, long y);
  friend Real operator/(const Real& x, long y);
  friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
  friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
  friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }

  static Real pi(mpfr_prec_t prec);
  /// 2^e at the given precision.
  static Real two_pow(long e, mpfr_prec_t prec);

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real gamma(const Real& x);
Real pow(const Real& x, const Real& y);
Real cbrt(const Real& x);
Real max(const Real& x, const Real& y);

class HPComplex {
 public:
  explicit HPComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  HPComplex(Real re, Real im);
  HPComplex(const Real& re) : HPComplex(re, Real(0L, re.prec())) {}

  mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  HPComplex conj() const { return {re_, -im_}; }
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real abs() const;

  HPComplex operator-() const { return {-re_, -im_}; }
  friend HPComplex operator+(const HPComplex& x, const HPComplex& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend HPComplex operator-(const HPComplex& x, const HPComplex& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend HPComplex operator*(const HPComplex& x, const HPComplex& y);
  friend HPComplex operator/(const HPComplex& x, const HPComplex& y);
  friend HPComplex operator*(const HPComplex& x, const Real& y) { return {x.re_ * y, x.im_ * y}; }
  friend HPComplex operator/(const HPComplex& x, const Real& y) { return {x.re_ / y, x.im_ / y}; }
  friend HPComplex operator*(const HPComplex& x, long y) { return {x.re_ * y, x.im_ * y}; }
  friend HPComplex operator/(const HPComplex& x, long y) { return {x.re_ / y, x.im_ / y}; }

  HPComplex pow(unsigned e) const;
  std::string to_string(int digits = 20) const;

 private:
  Real re_, im_;
};

}  // namespace ellgauss
