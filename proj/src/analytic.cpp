#include "ellgauss/analytic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ellgauss/series.hpp"

namespace ellgauss {

namespace {

std::mutex g_cache_mu;

Real sqrt3(mpfr_prec_t prec) { return sqrt(Real(3L, prec)); }

Real with_prec(const Real& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// G_{6n}, n = 0..N, exact; grown on demand.
std::vector<mpq_class> exact_G(int N) {
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(g_cache_mu);
  if (static_cast<int>(cache.size()) <= N) cache = eisenstein_G(std::max(N, 2 * static_cast<int>(cache.size())));
  return std::vector<mpq_class>(cache.begin(), cache.begin() + N + 1);
}

struct WpCoefficients {
  Real varpi;
  Real inv_varpi2;
  Real inv_varpi3;
  std::vector<Real> a;   // (6n-1) G_{6n} varpi^{6n}
  std::vector<Real> ad;  // (6n-2) a_n
};

int series_terms(mpfr_prec_t prec) {
  const double bits_per_term = -6.0 * std::log2(0.3);
  int n = 1;
  while (static_cast<double>(n) * bits_per_term - std::log2(36.0 * n) < static_cast<double>(prec) + 8) ++n;
  return n;
}

std::shared_ptr<const WpCoefficients> wp_coefficients(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::shared_ptr<const WpCoefficients>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
  }
  int terms = series_terms(prec);
  std::vector<mpq_class> G = exact_G(terms);
  auto c = std::make_shared<WpCoefficients>();
  c->varpi = real_period(prec);
  Real v2 = c->varpi * c->varpi;
  c->inv_varpi2 = Real(1L, prec) / v2;
  c->inv_varpi3 = c->inv_varpi2 / c->varpi;
  Real v6 = v2 * v2 * v2;
  Real vp(1L, prec);
  for (int n = 1; n <= terms; ++n) {
    vp = vp * v6;
    Real an = Real(mpq_class(G[static_cast<size_t>(n)] * (6 * n - 1)), prec) * vp;
    c->ad.push_back(an * static_cast<long>(6 * n - 2));
    c->a.push_back(std::move(an));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(prec, c);
  return it->second;
}

Real period_from_gamma(mpfr_prec_t prec) {
  mpfr_prec_t w = prec + 16;
  Real g = gamma(Real(mpq_class(1, 3), w));
  Real r = g * g * g / (Real::pi(w) * 2L * sqrt3(w));
  return with_prec(r, prec);
}

}  // namespace

Real real_period(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, Real> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  Real v = period_from_gamma(prec);
  cache.emplace(prec, v);
  return v;
}

Real real_period_beta(mpfr_prec_t prec) {
  mpfr_prec_t w = prec + 16;
  Real g1 = gamma(Real(mpq_class(1, 3), w));
  Real g2 = gamma(Real(mpq_class(2, 3), w));
  return with_prec(g1 * g1 / (g2 * 3L), prec);
}

Real real_period_quadrature(mpfr_prec_t prec) {
  // t = 1/(1 + e^{-a}), a = pi sinh x, dt = pi cosh x t (1 - t) dx, so the
  // integrand becomes pi cosh x * t * (1 - t)^{1/3} * (1 + t + t^2)^{-2/3}.
  mpfr_prec_t w = prec + 32;
  Real pi = Real::pi(w);
  Real one(1L, w);
  Real third = Real(mpq_class(1, 3), w), m2third = Real(mpq_class(-2, 3), w);
  auto g = [&](const Real& x) {
    Real s(w), c(w);
    mpfr_sinh_cosh(s.get(), c.get(), x.get(), MPFR_RNDN);
    Real a = pi * s;
    Real ea = exp(a);
    Real t = ea / (one + ea);     // 1/(1 + e^{-a})
    Real omt = one / (one + ea);  // 1 - t
    return pi * c * t * pow(omt, third) * pow(one + t + t * t, m2third);
  };
  double bits = static_cast<double>(w);
  double xmax = std::asinh(3.0 * (bits * std::log(2.0) + 10.0) / M_PI) + 0.5;

  Real h(1L, w);
  Real sum = g(Real(0L, w));
  for (long k = 1; k <= static_cast<long>(std::ceil(xmax)); ++k) {
    Real x(k, w);
    sum = sum + g(x) + g(-x);
  }
  Real prev = sum * h;
  Real tol = Real::two_pow(-static_cast<long>(prec) - 4, w);
  for (int level = 1; level <= 20; ++level) {
    h = h / 2L;
    long kmax = static_cast<long>(std::ceil(xmax / h.to_double()));
    for (long k = 1; k <= kmax; k += 2) {
      Real x = h * k;
      sum = sum + g(x) + g(-x);
    }
    Real est = sum * h;
    Real diff = abs(est - prev);
    prev = est;
    if (diff < tol && level >= 3) return with_prec(est, prec);
  }
  throw Error(ErrorKind::PrecisionExhausted, "tanh-sinh quadrature did not converge");
}

HPComplex embed(const EisensteinInt& z, mpfr_prec_t prec) {
  Real a(z.a(), prec), b(z.b(), prec);
  return {a - b / 2L, b * sqrt3(prec) / 2L};
}

EisensteinInt round_to_eisenstein(const HPComplex& z, Real* residual) {
  mpfr_prec_t p = z.prec();
  Real s3 = sqrt3(p);
  Real y = z.im() * 2L / s3;
  Real x = z.re() + z.im() / s3;
  EisensteinInt best(x.round_to_mpz(), y.round_to_mpz());
  Real best_d = (z - embed(best, p)).abs();
  // Coordinate rounding is not always nearest in the hexagonal metric.
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      EisensteinInt c = best + EisensteinInt(da, db);
      Real d = (z - embed(c, p)).abs();
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
  }
  if (residual) *residual = best_d;
  return best;
}

WpPair wp_pair(const HPComplex& u) {
  mpfr_prec_t p = u.prec();
  Real resid(p);
  EisensteinInt w = round_to_eisenstein(u, &resid);
  if (resid < Real::two_pow(-static_cast<long>(p) + 16, p))
    throw Error(ErrorKind::LatticePoint, "argument reduces to a lattice point");
  HPComplex v = u - embed(w, p);
  int k = 0;
  Real threshold(0.3, p);
  while (threshold < v.abs()) {
    v = v / 2L;
    ++k;
  }
  auto coef = wp_coefficients(p);
  HPComplex v2 = v * v, v3 = v2 * v;
  HPComplex w6 = v3 * v3;
  size_t N = coef->a.size();
  HPComplex S(Real(coef->a[N - 1]), Real(0L, p));
  HPComplex T(Real(coef->ad[N - 1]), Real(0L, p));
  for (size_t i = N - 1; i-- > 0;) {
    S = S * w6 + HPComplex(coef->a[i]);
    T = T * w6 + HPComplex(coef->ad[i]);
  }
  HPComplex one(Real(1L, p), Real(0L, p));
  HPComplex x = (one / v2 + v2 * v2 * S) * coef->inv_varpi2;
  HPComplex y = (HPComplex(Real(-2L, p)) / v3 + v3 * T) * coef->inv_varpi3;
  for (int j = 0; j < k; ++j) {
    // tangent slope on y^2 = 4x^3 - 27 is 6x^2 / y
    HPComplex m = x * x * 6L / y;
    HPComplex x2 = m * m / 4L - x * 2L;
    HPComplex y2 = m * (x - x2) - y;
    x = std::move(x2);
    y = std::move(y2);
  }
  Real scale = max(Real(1L, p), x.norm() * x.abs());
  Real rel = (y * y - (x * x * x * 4L - HPComplex(Real(27L, p)))).abs();
  if (rel > scale * Real::two_pow(-static_cast<long>(p) + 24, p))
    throw Error(ErrorKind::PrecisionExhausted, "wp residual check failed at " + std::to_string(p) + " bits");
  return {x, y};
}

PhiPsi phi_psi(const HPComplex& u) {
  mpfr_prec_t p = u.prec();
  WpPair w = wp_pair(u);
  HPComplex den = w.dwp + HPComplex(Real(9L, p));
  Real bound = max(Real(1L, p), w.dwp.abs()) * Real::two_pow(-static_cast<long>(p) / 2, p);
  if (den.abs() < bound) throw Error(ErrorKind::PoleHit, "9 + wp' vanishes at the argument");
  PhiPsi r{w.wp * 6L / den, (w.dwp - HPComplex(Real(9L, p))) / den};
  HPComplex one(Real(1L, p));
  Real err = (r.phi.pow(3) + r.psi.pow(3) - one).abs();
  Real scale = max(Real(1L, p), max(r.phi.abs(), r.psi.abs()));
  if (err > scale * scale * scale * Real::two_pow(-static_cast<long>(p) + 24, p))
    throw Error(ErrorKind::PrecisionExhausted, "phi^3 + psi^3 = 1 fails at " + std::to_string(p) + " bits");
  return r;
}

HPComplex sl_value(const HPComplex& u) {
  mpfr_prec_t p = u.prec();
  return phi_psi(u / (real_period(p) * -3L)).phi;
}

GaussData gauss_data(const PrimaryPrime& P, mpfr_prec_t prec) {
  unsigned m9 = P.ell_mod9();
  if (m9 != 4 && m9 != 7)
    throw Error(ErrorKind::UnsupportedResidueClass, "ell = " + P.ell.get_str() + " is 1 mod 9");
  mpfr_prec_t w = prec + kGuardBits;
  unsigned long ell = P.ell_ui();
  HPComplex step = embed(P.lambda.conj(), w) / Real(P.ell, w);
  HPComplex zero(w);
  GaussData g{zero, zero, HPComplex(Real(1L, w)), {}};
  HPComplex chi_rho = embed(EisensteinInt::rho(), w);
  HPComplex chi_rho2 = chi_rho * chi_rho;
  for (unsigned long r = 1; r < ell; ++r) {
    HPComplex phi = phi_psi(step * static_cast<long>(r)).phi;
    HPComplex f = m9 == 7 ? phi : HPComplex(Real(1L, w)) / phi;
    CubicValue c = cubic_character(EisensteinInt(static_cast<long>(r)), P);
    int e = c.exponent();
    if (e == 0) {
      g.kernel.push_back(r);
      g.kernel_sum = g.kernel_sum + f;
      g.lambda_tilde = g.lambda_tilde * phi;
      g.full_average = g.full_average + f;
    } else {
      g.full_average = g.full_average + f * (e == 1 ? chi_rho : chi_rho2);
    }
  }
  g.full_average = g.full_average / 3L;
  Real tol = max(Real(1L, w), g.kernel_sum.abs()) * Real::two_pow(-static_cast<long>(prec) + 24, w);
  if ((g.kernel_sum - g.full_average).abs() > tol)
    throw Error(ErrorKind::PrecisionExhausted, "kernel sum and full average disagree");
  return g;
}

HPComplex gauss_sum(const PrimaryPrime& P, mpfr_prec_t prec) { return gauss_data(P, prec).kernel_sum; }

HPComplex lambda_tilde(const PrimaryPrime& P, mpfr_prec_t prec) { return gauss_data(P, prec).lambda_tilde; }

bool alpha_membership(const PrimaryPrime& P, const EisensteinInt& alpha, EisensteinInt* unit,
                      mpz_class* integer_part) {
  unsigned m9 = P.ell_mod9();
  if (m9 != 4 && m9 != 7) return false;
  EisensteinInt chi3 = cubic_character(EisensteinInt(3), P).to_eisenstein();
  // alpha / u for a unit u is alpha * conj(u)
  EisensteinInt u = m9 == 7 ? chi3 : chi3.conj();
  EisensteinInt q = alpha * u.conj();
  if (!q.is_rational()) return false;
  mpz_class r = q.a() % 3;
  if (r < 0) r += 3;
  bool ok = m9 == 7 ? r == 1 : r == 2;
  if (ok) {
    if (unit) *unit = u;
    if (integer_part) *integer_part = q.a();
  }
  return ok;
}

AlphaResult alpha(const PrimaryPrime& P, const PrecisionPolicy& policy) {
  unsigned m9 = P.ell_mod9();
  if (m9 != 4 && m9 != 7)
    throw Error(ErrorKind::UnsupportedResidueClass, "ell = " + P.ell.get_str() + " is 1 mod 9");
  std::optional<EisensteinInt> previous;
  std::string last_failure = "no precision attempted";
  for (mpfr_prec_t prec = policy.start; prec <= policy.max; prec *= 2) {
    GaussData g;
    try {
      g = gauss_data(P, prec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleHit && e.kind() != ErrorKind::PrecisionExhausted) throw;
      last_failure = e.what();
      previous.reset();
      continue;
    }
    mpfr_prec_t w = prec + kGuardBits;
    HPComplex lt2 = g.lambda_tilde * g.lambda_tilde;
    HPComplex q = g.kernel_sum / lt2;
    Real resid(w);
    EisensteinInt a = round_to_eisenstein(q, &resid);
    HPComplex lam = embed(P.lambda, w);
    Real cube_err = (g.lambda_tilde.pow(3) - lam).abs() / lam.abs();
    bool cube_ok = cube_err < Real::two_pow(-static_cast<long>(prec) + 16, w);
    bool resid_ok = resid < Real::two_pow(-32, w);
    if (!cube_ok || !resid_ok) {
      last_failure = "residual or cube check failed at " + std::to_string(prec) + " bits";
      previous.reset();
      continue;
    }
    if (previous && *previous == a) {
      AlphaResult r;
      r.ell = P.ell;
      r.lambda = P.lambda;
      r.gauss_sum = g.kernel_sum;
      r.lambda_tilde = g.lambda_tilde;
      r.alpha = a;
      r.residual = resid;
      r.lambda_cube_rel_error = cube_err;
      r.precision_used = prec;
      r.working_precision = w;
      if (a.is_zero() || !alpha_membership(P, a, &r.unit, &r.integer_part))
        throw Error(ErrorKind::MembershipViolation,
                    "alpha = " + a.to_string() + " for ell = " + P.ell.get_str());
      return r;
    }
    previous = a;
  }
  throw Error(ErrorKind::PrecisionExhausted, "alpha for ell = " + P.ell.get_str() + ": " + last_failure);
}

}  // namespace ellgauss
