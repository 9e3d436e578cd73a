#pragma once

#include <string>
#include <vector>

#include "ellgauss/analytic.hpp"
#include "ellgauss/curves.hpp"

namespace ellgauss {

/// Polynomial in T = N(p)^{-s}, constant term first.
struct LocalFactor {
  std::vector<EisensteinInt> coeffs;

  static LocalFactor one() { return {{EisensteinInt(1)}}; }
  LocalFactor normalized() const;  // trailing zeros dropped
  friend LocalFactor operator*(const LocalFactor& x, const LocalFactor& y);
  friend bool operator==(const LocalFactor& x, const LocalFactor& y);
  std::string to_string() const;
};

struct LocalFactorPair {
  PrimeTag prime;
  LocalFactor hecke;       // 1 - chi~(p) T
  LocalFactor hecke_conj;  // 1 - conj(chi~(p)) T
  LocalFactor elliptic;    // from point counts or the reduction type
  std::optional<mpz_class> point_count;

  bool match() const { return hecke * hecke_conj == elliptic; }
};

LocalFactorPair local_factor_pair(const PrimaryPrime& P, const PrimeTag& prime);

/// Prime ideals of Z[rho] of norm <= bound, one generator each.
std::vector<PrimeTag> prime_ideals_up_to(const PrimaryPrime& P, unsigned long bound);

struct DeuReport {
  mpz_class ell;
  unsigned long norm_bound = 0;
  std::vector<LocalFactorPair> factors;
  size_t failures() const;
  bool pass() const { return !factors.empty() && failures() == 0; }
};

DeuReport verify_deu(const PrimaryPrime& P, unsigned long norm_bound);

struct LValue {
  HPComplex hecke;      // L(1, chi~)
  Real elliptic;        // L(E/Q(rho), 1) = |alpha|^2 varpi^2 / ell^{1/3}
  Real relative_error;  // | |L(1, chi~)|^2 - L(E, 1) | / L(E, 1)
};

LValue l_value(const PrimaryPrime& P, const AlphaResult& a);

/// c * varpi^p * ell^e with rational c and e.
struct Monomial {
  mpq_class coeff;
  int varpi_exp = 0;
  mpq_class ell_exp = 0;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend Monomial operator/(const Monomial& x, const Monomial& y);
  bool is_rational() const { return varpi_exp == 0 && ell_exp == 0; }
};

inline constexpr const char* kShaLabel = "BSD-conditional exact value";

struct ShaPrediction {
  mpz_class ell;
  Real tau_infinity;  // 3 varpi^2 / ell^{1/3}
  int tau_lambda = 3;
  int tau_one_minus_rho = 1;
  int torsion_order = 3;
  mpz_class alpha_abs_square;
  mpq_class predicted_sha;
  LValue l_value;
  bool square_up_to_2_3 = false;
  int rank_assumed = 0;  // assumption of record, not computed
};

ShaPrediction sha_prediction(const PrimaryPrime& P, const AlphaResult& a);

struct MaincoReport {
  mpz_class ell;
  std::string row;  // which case of the congruence applies
  mpz_class sha_residue;
  mpz_class rhs_residue;
  bool both_zero = false;
  bool in_subgroup = false;
  unsigned long subgroup_order = 0;  // |<2, 3>| in F_ell^x
  unsigned long index = 0;           // [F_ell^x : <2, 3>]
  bool pass() const { return both_zero || in_subgroup; }
};

MaincoReport verify_mainco(const PrimaryPrime& P, const ShaPrediction& sha);

/// Subgroup of F_p^x generated by the given residues, as a membership table.
std::vector<bool> generated_subgroup(unsigned long p, const std::vector<unsigned long>& gens);

}  // namespace ellgauss
