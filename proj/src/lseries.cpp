#include "ellgauss/lseries.hpp"

#include <deque>

#include "ellgauss/error.hpp"
#include "ellgauss/modarith.hpp"
#include "ellgauss/series.hpp"

namespace ellgauss {

LocalFactor LocalFactor::normalized() const {
  LocalFactor r = *this;
  while (r.coeffs.size() > 1 && r.coeffs.back().is_zero()) r.coeffs.pop_back();
  return r;
}

LocalFactor operator*(const LocalFactor& x, const LocalFactor& y) {
  LocalFactor r;
  r.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, EisensteinInt(0));
  for (size_t i = 0; i < x.coeffs.size(); ++i)
    for (size_t j = 0; j < y.coeffs.size(); ++j) r.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
  return r.normalized();
}

bool operator==(const LocalFactor& x, const LocalFactor& y) { return x.normalized().coeffs == y.normalized().coeffs; }

std::string LocalFactor::to_string() const {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs[i].to_string() + ")";
    if (i > 0) s += i == 1 ? "T" : "T^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

LocalFactorPair local_factor_pair(const PrimaryPrime& P, const PrimeTag& prime) {
  LocalFactorPair r;
  r.prime = prime;
  EisensteinInt chi = hecke_character(prime.generator, P);
  r.hecke = LocalFactor{{EisensteinInt(1), EisensteinInt(0) - chi}}.normalized();
  r.hecke_conj = LocalFactor{{EisensteinInt(1), EisensteinInt(0) - chi.conj()}}.normalized();

  switch (prime.kind) {
    case PrimeKind::Lambda:
    case PrimeKind::OneMinusRho: {
      LocalData d = tate_algorithm(CurveModel::of(P), prime.kind);
      if (d.kodaira == "In") {
        bool split = d.tamagawa == d.n;
        r.elliptic = LocalFactor{{EisensteinInt(1), EisensteinInt(split ? -1 : 1)}};
      } else if (d.kodaira == "I0") {
        throw Error(ErrorKind::InternalInconsistency, "expected bad reduction at " + prime.to_string());
      } else {
        r.elliptic = LocalFactor::one();
      }
      break;
    }
    case PrimeKind::Split:
    case PrimeKind::Inert: {
      mpz_class count = prime.kind == PrimeKind::Split
                            ? count_points_split(P, prime.generator, CountMethod::Brute)
                            : count_points_inert(P, mpz_class(-prime.generator.a()).get_ui(), CountMethod::Brute);
      mpz_class a = prime.norm + 1 - count;
      r.point_count = count;
      r.elliptic = LocalFactor{{EisensteinInt(1), EisensteinInt(mpz_class(-a), mpz_class(0)),
                                EisensteinInt(prime.norm, mpz_class(0))}};
      break;
    }
  }
  return r;
}

std::vector<PrimeTag> prime_ideals_up_to(const PrimaryPrime& P, unsigned long bound) {
  std::vector<PrimeTag> out;
  for (unsigned long p : modp::primes_up_to(bound)) {
    if (p == 3) {
      out.push_back(PrimeTag::one_minus_rho());
    } else if (p % 3 == 1) {
      PrimaryPrime M = split_prime(mpz_class(p));
      for (const EisensteinInt& mu : {M.lambda, M.lambda.conj()})
        out.push_back(mu == P.lambda ? PrimeTag::lambda(P) : PrimeTag::split(mu));
    } else if (p * p <= bound) {
      out.push_back(PrimeTag::inert(p));
    }
  }
  return out;
}

size_t DeuReport::failures() const {
  size_t n = 0;
  for (const auto& f : factors) n += !f.match();
  return n;
}

DeuReport verify_deu(const PrimaryPrime& P, unsigned long norm_bound) {
  if (norm_bound < 4) throw Error(ErrorKind::InvalidArgument, "norm bound must be at least 4");
  DeuReport r;
  r.ell = P.ell;
  r.norm_bound = norm_bound;
  for (const PrimeTag& t : prime_ideals_up_to(P, norm_bound)) r.factors.push_back(local_factor_pair(P, t));
  return r;
}

LValue l_value(const PrimaryPrime& P, const AlphaResult& a) {
  mpfr_prec_t prec = a.working_precision;
  Real varpi = real_period(prec);
  EisensteinInt chi3 = cubic_character(EisensteinInt(3), P).to_eisenstein();
  EisensteinInt u = P.ell_mod9() == 7 ? chi3 : chi3.conj();
  HPComplex num = embed(u * a.alpha, prec) * varpi;
  LValue r{HPComplex(prec) - num / a.lambda_tilde, Real(prec), Real(prec)};
  Real ell_third = cbrt(Real(P.ell, prec));
  r.elliptic = Real(a.alpha.norm(), prec) * varpi * varpi / ell_third;
  r.relative_error = abs(r.hecke.norm() - r.elliptic) / r.elliptic;
  if (r.hecke.abs() < Real::two_pow(-static_cast<long>(prec) / 2, prec))
    throw Error(ErrorKind::InternalInconsistency, "L(1) vanishes for ell = " + P.ell.get_str());
  return r;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  return {x.coeff * y.coeff, x.varpi_exp + y.varpi_exp, x.ell_exp + y.ell_exp};
}

Monomial operator/(const Monomial& x, const Monomial& y) {
  return {x.coeff / y.coeff, x.varpi_exp - y.varpi_exp, x.ell_exp - y.ell_exp};
}

namespace {

bool is_square_after_stripping_2_3(const mpq_class& q) {
  if (q <= 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  for (unsigned long p : {2ul, 3ul}) {
    while (num % p == 0) num /= p;
    while (den % p == 0) den /= p;
  }
  return den == 1 && mpz_perfect_square_p(num.get_mpz_t()) != 0;
}

}  // namespace

ShaPrediction sha_prediction(const PrimaryPrime& P, const AlphaResult& a) {
  ShaPrediction s;
  s.ell = P.ell;
  auto [at_lambda, at_3] = local_data_closed_form(P);
  s.tau_lambda = at_lambda.tamagawa;
  s.tau_one_minus_rho = at_3.tamagawa;
  TorsionReport tors = torsion(P);
  if (tors.order == 0) throw Error(ErrorKind::InternalInconsistency, "torsion order not established");
  s.torsion_order = tors.order;
  s.alpha_abs_square = a.alpha.norm();

  const mpq_class third(1, 3);
  Monomial L{mpq_class(s.alpha_abs_square), 2, -third};
  Monomial tau_inf{mpq_class(3), 2, -third};
  Monomial tors2{mpq_class(s.torsion_order * s.torsion_order), 0, 0};
  Monomial tam{mpq_class(s.tau_lambda * s.tau_one_minus_rho), 0, 0};
  Monomial sha = L * tors2 / (tau_inf * tam);
  if (!sha.is_rational()) throw Error(ErrorKind::InternalInconsistency, "transcendental factors did not cancel");
  s.predicted_sha = sha.coeff;
  s.predicted_sha.canonicalize();
  s.square_up_to_2_3 = is_square_after_stripping_2_3(s.predicted_sha);

  mpfr_prec_t prec = a.working_precision;
  Real varpi = real_period(prec);
  s.tau_infinity = varpi * varpi * 3L / cbrt(Real(P.ell, prec));
  s.l_value = l_value(P, a);
  return s;
}

std::vector<bool> generated_subgroup(unsigned long p, const std::vector<unsigned long>& gens) {
  std::vector<bool> in(p, false);
  std::deque<unsigned long> todo{1};
  in[1] = true;
  while (!todo.empty()) {
    unsigned long x = todo.front();
    todo.pop_front();
    for (unsigned long g : gens) {
      unsigned long y = modp::mul(x, g % p, p);
      if (y != 0 && !in[y]) {
        in[y] = true;
        todo.push_back(y);
      }
    }
  }
  return in;
}

MaincoReport verify_mainco(const PrimaryPrime& P, const ShaPrediction& sha) {
  unsigned m9 = P.ell_mod9();
  if (m9 != 4 && m9 != 7)
    throw Error(ErrorKind::UnsupportedResidueClass, "ell = " + P.ell.get_str() + " is 1 mod 9");
  MaincoReport r;
  r.ell = P.ell;
  unsigned long ell = P.ell_ui();
  int k = static_cast<int>(2 * (ell - 1) / 3);
  auto table = shared_table(k);
  unsigned long base;
  mpq_class divisor(1);
  if (m9 == 7) {
    r.row = "7 mod 9";
    base = modp::mul(modp::pow(3, (ell - 7) / 6, ell), modp::reduce(table->C.at(static_cast<size_t>(k)), ell), ell);
  } else {
    base = modp::mul(modp::pow(3, (ell - 4) / 3, ell), modp::reduce(table->D(k), ell), ell);
    if (P.n_mod3() == 0) {
      r.row = "4 mod 9, n = 0 mod 3";
      divisor = 4;
    } else {
      r.row = "4 mod 9, n = +-1 mod 3";
    }
  }
  mpq_class rhs_q = mpq_class(mpz_class(modp::mul(base, base, ell))) / divisor;
  r.rhs_residue = mpz_class(modp::reduce(rhs_q, ell));
  r.sha_residue = mpz_class(modp::reduce(sha.predicted_sha, ell));

  std::vector<bool> H = generated_subgroup(ell, {2, 3});
  for (bool b : H) r.subgroup_order += b;
  r.index = (ell - 1) / r.subgroup_order;

  if (r.rhs_residue == 0 || r.sha_residue == 0) {
    r.both_zero = r.rhs_residue == 0 && r.sha_residue == 0;
    return r;
  }
  unsigned long ratio = modp::mul(r.sha_residue.get_ui(), modp::inv(r.rhs_residue.get_ui(), ell), ell);
  r.in_subgroup = H[ratio];
  return r;
}

}  // namespace ellgauss
