#pragma once

// The curves E_lambda : y^2 = x^3 + lambda^2/4 over Q(rho), with global minimal
// model y^2 + lambda y = x^3.

#include <optional>
#include <string>
#include <vector>

#include "ellgauss/eisenstein.hpp"

namespace ellgauss {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z[rho].
struct Weierstrass {
  EisensteinInt a1, a2, a3, a4, a6;

  EisensteinInt b2() const;
  EisensteinInt b4() const;
  EisensteinInt b6() const;
  EisensteinInt b8() const;
  EisensteinInt c4() const;
  EisensteinInt discriminant() const;

  /// Substitution x = x' + r, y = y' + s x' + t.
  Weierstrass transformed(const EisensteinInt& r, const EisensteinInt& s, const EisensteinInt& t) const;
  friend bool operator==(const Weierstrass&, const Weierstrass&) = default;
  std::string to_string() const;
};

struct CurveModel {
  PrimaryPrime P;
  Weierstrass w;  // y^2 + lambda y = x^3

  static CurveModel of(const PrimaryPrime& P);
  /// Delta = -27 lambda^4.
  EisensteinInt discriminant() const { return w.discriminant(); }
};

enum class PrimeKind { Lambda, OneMinusRho, Split, Inert };

struct PrimeTag {
  PrimeKind kind = PrimeKind::Split;
  EisensteinInt generator;  // lambda, 1 - rho, a primary mu, or -q
  mpz_class norm;           // size of the residue field

  static PrimeTag lambda(const PrimaryPrime& P);
  static PrimeTag one_minus_rho();
  static PrimeTag split(const EisensteinInt& mu);
  static PrimeTag inert(unsigned long q);
  std::string to_string() const;
};

struct LocalData {
  PrimeTag prime;
  std::string kodaira;  // "I0", "In", "II", "III", "IV", "I0*", "In*"
  int n = 0;            // subscript for In and In*
  int tamagawa = 1;
  int disc_valuation = 0;
  std::optional<mpz_class> point_count;  // good primes only
  std::vector<std::string> steps;        // Tate's algorithm trace
  std::optional<Weierstrass> step2_model;

  /// Kodaira symbol with the subscript filled in, e.g. "I4*".
  std::string symbol() const;
};

enum class CountMethod { Brute, Jacobi };

/// #E(F_p) at a primary prime mu of prime norm p, mu != lambda.
mpz_class count_points_split(const PrimaryPrime& P, const EisensteinInt& mu, CountMethod method);
/// #E(F_{q^2}) at the inert prime (-q), q = 2 mod 3.
mpz_class count_points_inert(const PrimaryPrime& P, unsigned long q, CountMethod method);

/// sum over F_p of phi(t) chi(1 - t), quadratic phi and cubic chi = (./mu)_3.
EisensteinInt jacobi_sum_split(const EisensteinInt& mu);
/// The closed form -chi(4) mu.
EisensteinInt jacobi_sum_split_formula(const EisensteinInt& mu);
/// sum over F_{q^2} of phi(t) chi(1 - t) for odd q = 2 mod 3; equals q.
EisensteinInt jacobi_sum_inert(unsigned long q);

/// Closed-form local data at (lambda) and (1 - rho).
std::pair<LocalData, LocalData> local_data_closed_form(const PrimaryPrime& P);

/// Tate's algorithm through step 7 at a prime pi of prime norm.
LocalData tate_algorithm(const Weierstrass& w, const EisensteinInt& pi);
LocalData tate_algorithm(const CurveModel& model, PrimeKind prime);

/// Exact v_pi(x) for x != 0 and pi of prime norm.
int valuation(const EisensteinInt& x, const EisensteinInt& pi);

struct AffinePoint {
  EisensteinRational x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Group law on y^2 = x^3 + B; nullopt is the point at infinity.
std::optional<AffinePoint> ec_add(const std::optional<AffinePoint>& P, const std::optional<AffinePoint>& Q,
                                  const EisensteinRational& B);

struct TorsionReport {
  std::vector<std::optional<AffinePoint>> points;  // infinity, (0, lambda/2), (0, -lambda/2)
  bool three_torsion_verified = false;
  bool two_torsion_trivial = false;
  mpz_class reduction_bound;  // odd part of gcd of #E(k_p) over the primes used
  std::vector<std::pair<std::string, mpz_class>> reduction_counts;
  int order = 0;
};

TorsionReport torsion(const PrimaryPrime& P);

}  // namespace ellgauss
