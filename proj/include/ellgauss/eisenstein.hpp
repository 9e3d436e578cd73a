#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "ellgauss/error.hpp"

namespace ellgauss {

/// Element a + b*rho of Z[rho], rho = exp(2 pi i / 3).
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(mpz_class a, mpz_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(long a, long b = 0) : a_(a), b_(b) {}
  EisensteinInt(int a, int b = 0) : a_(a), b_(b) {}

  static EisensteinInt rho() { return {0, 1}; }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  EisensteinInt conj() const { return {a_ - b_, -b_}; }
  mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  // x + conj(x), a rational integer.
  mpz_class trace() const { return 2 * a_ - b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const { return norm() == 1; }
  bool is_rational() const { return b_ == 0; }
  /// a == 1 and b == 0 mod 3.
  bool is_primary() const;

  EisensteinInt operator-() const { return {-a_, -b_}; }
  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }

  /// Quotient x / d when it lies in Z[rho].
  std::optional<EisensteinInt> divide_exact(const EisensteinInt& d) const;
  bool divisible_by(const EisensteinInt& d) const { return divide_exact(d).has_value(); }

  EisensteinInt pow(unsigned e) const;

  /// Human form such as "4+3ρ", "-ρ", "1".
  std::string to_string() const;

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

/// rho^k for any integer k.
EisensteinInt rho_power(long k);

/// Element of Q(rho), used for exact group-law checks.
class EisensteinRational {
 public:
  EisensteinRational() = default;
  EisensteinRational(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinRational(const EisensteinInt& z) : a_(z.a()), b_(z.b()) {}

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  EisensteinRational conj() const { return {a_ - b_, -b_}; }
  mpq_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  EisensteinRational inverse() const;

  EisensteinRational operator-() const { return {-a_, -b_}; }
  friend EisensteinRational operator+(const EisensteinRational& x, const EisensteinRational& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend EisensteinRational operator-(const EisensteinRational& x, const EisensteinRational& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y) {
    mpq_class bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }
  friend EisensteinRational operator/(const EisensteinRational& x, const EisensteinRational& y) {
    return x * y.inverse();
  }
  friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

/// A split rational prime ell with its primary factor lambda = (3m+1) + 3n*rho.
struct PrimaryPrime {
  mpz_class ell;
  EisensteinInt lambda;
  mpz_class m;
  mpz_class n;

  /// Validates that lambda is primary with prime norm.
  static PrimaryPrime from_element(const EisensteinInt& lambda);

  unsigned long ell_ui() const;
  /// ell mod 9, one of 1, 4, 7.
  unsigned ell_mod9() const;
  /// n mod 3 in {0, 1, 2}.
  unsigned n_mod3() const;
};

/// The primary lambda over ell with b > 0.
PrimaryPrime split_prime(const mpz_class& ell);

/// Image of rho in Z/ell under Z[rho]/(lambda).
mpz_class rho_image(const PrimaryPrime& P);
mpz_class residue_iso(const EisensteinInt& nu, const PrimaryPrime& P);

/// rho^k or zero.
class CubicValue {
 public:
  static CubicValue zero() { return CubicValue(-1); }
  static CubicValue rho_pow(long k) { return CubicValue(static_cast<int>(((k % 3) + 3) % 3)); }

  bool is_zero() const { return k_ < 0; }
  /// Exponent in {0,1,2}; undefined for zero.
  int exponent() const { return k_; }

  CubicValue conj() const { return is_zero() ? *this : rho_pow(-k_); }
  friend CubicValue operator*(CubicValue x, CubicValue y) {
    if (x.is_zero() || y.is_zero()) return zero();
    return rho_pow(x.k_ + y.k_);
  }
  friend bool operator==(CubicValue x, CubicValue y) { return x.k_ == y.k_; }

  EisensteinInt to_eisenstein() const { return is_zero() ? EisensteinInt(0) : rho_power(k_); }
  std::string to_string() const;

 private:
  explicit CubicValue(int k) : k_(k) {}
  int k_;
};

CubicValue cubic_character(const EisensteinInt& nu, const PrimaryPrime& P);

/// Cubic residue symbol (nu / -q)_3 for an inert rational prime q = 2 mod 3.
CubicValue cubic_character_inert(const EisensteinInt& nu, const mpz_class& q);

/// (l1/l2)_3 == (l2/l1)_3 for coprime primary primes, split or of the form -q.
bool cubic_reciprocity_check(const EisensteinInt& l1, const EisensteinInt& l2);

/// The character (Z[rho]/3)^x -> W; zero when (1 - rho) divides nu.
EisensteinInt chi0(const EisensteinInt& nu);
/// The character (Z[rho]/(1 - rho))^x -> {+1, -1}; zero when (1 - rho) divides nu.
int chi0_prime(const EisensteinInt& nu);

/// chi_1(nu) * conj(nu); zero when (nu) meets the conductor.
EisensteinInt hecke_character(const EisensteinInt& nu, const PrimaryPrime& P);

}  // namespace ellgauss
