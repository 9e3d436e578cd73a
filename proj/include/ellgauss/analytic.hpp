#pragma once

#include <vector>

#include "ellgauss/eisenstein.hpp"
#include "ellgauss/hp.hpp"

namespace ellgauss {

/// Escalation ladder for alpha(): start, doubling up to max.
struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t max = 4096;
};

/// Extra bits carried internally by Gauss sum and product evaluation.
inline constexpr mpfr_prec_t kGuardBits = 32;

/// The real period Gamma(1/3)^3 / (2 pi sqrt 3), cached per precision.
Real real_period(mpfr_prec_t prec);
/// B(1/3, 1/3) / 3 through Gamma values.
Real real_period_beta(mpfr_prec_t prec);
/// Tanh-sinh quadrature of the integral of (1 - t^3)^{-2/3} over [0, 1].
Real real_period_quadrature(mpfr_prec_t prec);

HPComplex embed(const EisensteinInt& z, mpfr_prec_t prec);
/// Nearest element of Z[rho] and the distance to it.
EisensteinInt round_to_eisenstein(const HPComplex& z, Real* residual = nullptr);

struct WpPair {
  HPComplex wp;   // wp(varpi u)
  HPComplex dwp;  // wp'(varpi u)
};

/// Weierstrass wp for the lattice varpi Z[rho] at varpi u; precision is u.prec().
WpPair wp_pair(const HPComplex& u);

struct PhiPsi {
  HPComplex phi;
  HPComplex psi;
};

PhiPsi phi_psi(const HPComplex& u);
/// Sl(u) = phi(u / (-3 varpi)).
HPComplex sl_value(const HPComplex& u);

struct GaussData {
  HPComplex kernel_sum;     // sum over ker chi of f(r / lambda)
  HPComplex full_average;   // (1/3) sum over all r of chi(r) f(r / lambda)
  HPComplex lambda_tilde;   // product over ker chi of phi(r / lambda)
  std::vector<unsigned long> kernel;
};

/// Shared evaluation behind gauss_sum and lambda_tilde at prec + kGuardBits.
GaussData gauss_data(const PrimaryPrime& P, mpfr_prec_t prec);
HPComplex gauss_sum(const PrimaryPrime& P, mpfr_prec_t prec);
HPComplex lambda_tilde(const PrimaryPrime& P, mpfr_prec_t prec);

struct AlphaResult {
  mpz_class ell;
  EisensteinInt lambda;
  HPComplex gauss_sum;
  HPComplex lambda_tilde;
  EisensteinInt alpha;
  Real residual;
  Real lambda_cube_rel_error;
  mpfr_prec_t precision_used = 0;
  mpfr_prec_t working_precision = 0;
  /// alpha = unit * integer_part with unit = chi(3) or its conjugate per the residue class.
  EisensteinInt unit;
  mpz_class integer_part;
};

/// alpha in chi(3)(1 + 3Z) for ell = 7 mod 9, conj chi(3)(-1 + 3Z) for ell = 4 mod 9.
bool alpha_membership(const PrimaryPrime& P, const EisensteinInt& alpha,
                      EisensteinInt* unit = nullptr, mpz_class* integer_part = nullptr);

AlphaResult alpha(const PrimaryPrime& P, const PrecisionPolicy& policy = {});

}  // namespace ellgauss
