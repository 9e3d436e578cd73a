#include "ellgauss/eisenstein.hpp"

#include <sstream>

#include "ellgauss/fq2.hpp"
#include "ellgauss/modarith.hpp"

namespace ellgauss {

namespace {

mpz_class fmod(const mpz_class& x, unsigned long m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
  return r;
}

mpz_class fmod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string coeff_str(const std::string& c, const char* unit) {
  if (c == "1") return unit;
  if (c == "-1") return std::string("-") + unit;
  return c + unit;
}

}  // namespace

bool EisensteinInt::is_primary() const { return fmod(a_, 3) == 1 && fmod(b_, 3) == 0; }

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  mpz_class bd = b_ * o.b_;
  mpz_class na = a_ * o.a_ - bd;
  mpz_class nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::optional<EisensteinInt> EisensteinInt::divide_exact(const EisensteinInt& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  EisensteinInt num = *this * d.conj();
  mpz_class n = d.norm();
  if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  mpz_class qa, qb;
  mpz_divexact(qa.get_mpz_t(), num.a_.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b_.get_mpz_t(), n.get_mpz_t());
  return EisensteinInt(qa, qb);
}

EisensteinInt EisensteinInt::pow(unsigned e) const {
  EisensteinInt r(1), x = *this;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

std::string EisensteinInt::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string bs = coeff_str(b_.get_str(), "ρ");
  if (a_ == 0) return bs;
  return a_.get_str() + (b_ > 0 ? "+" : "") + bs;
}

EisensteinInt rho_power(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

EisensteinRational EisensteinRational::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  EisensteinRational c = conj();
  return {c.a_ / n, c.b_ / n};
}

std::string EisensteinRational::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string bs = coeff_str(b_.get_str(), "ρ");
  if (b_.get_den() != 1) bs = "(" + b_.get_str() + ")ρ";
  if (a_ == 0) return bs;
  return a_.get_str() + (b_ > 0 ? "+" : "") + bs;
}

PrimaryPrime PrimaryPrime::from_element(const EisensteinInt& lambda) {
  if (!lambda.is_primary())
    throw Error(ErrorKind::NotPrimary, lambda.to_string() + " is not primary");
  mpz_class ell = lambda.norm();
  if (mpz_probab_prime_p(ell.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::NotPrimary, lambda.to_string() + " has composite norm");
  PrimaryPrime P;
  P.ell = ell;
  P.lambda = lambda;
  P.m = (lambda.a() - 1) / 3;
  P.n = lambda.b() / 3;
  return P;
}

unsigned long PrimaryPrime::ell_ui() const { return modp::to_u64(ell); }
unsigned PrimaryPrime::ell_mod9() const { return fmod(ell, 9).get_ui(); }
unsigned PrimaryPrime::n_mod3() const { return fmod(n, 3).get_ui(); }

PrimaryPrime split_prime(const mpz_class& ell) {
  if (ell < 2 || mpz_probab_prime_p(ell.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::NotSplit, ell.get_str() + " is not prime");
  if (fmod(ell, 3) != 1)
    throw Error(ErrorKind::NotSplit, ell.get_str() + " is not 1 mod 3");
  // a^2 - ab + (b^2 - ell) = 0 has discriminant 4 ell - 3 b^2.
  for (mpz_class b = 3; 3 * b * b <= 4 * ell; b += 3) {
    mpz_class disc = 4 * ell - 3 * b * b;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
    mpz_class s = sqrt(disc);
    for (const mpz_class& twice_a : {mpz_class(b + s), mpz_class(b - s)}) {
      if (fmod(twice_a, 2) != 0) continue;
      mpz_class a = twice_a / 2;
      if (fmod(a, 3) == 1) return PrimaryPrime::from_element(EisensteinInt(a, b));
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "no primary factor of " + ell.get_str());
}

mpz_class rho_image(const PrimaryPrime& P) {
  mpz_class binv;
  mpz_class b = fmod(P.lambda.b(), P.ell);
  if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), P.ell.get_mpz_t()) == 0)
    throw Error(ErrorKind::InternalInconsistency, "b not invertible mod ell");
  return fmod(-P.lambda.a() * binv, P.ell);
}

mpz_class residue_iso(const EisensteinInt& nu, const PrimaryPrime& P) {
  return fmod(nu.a() + nu.b() * rho_image(P), P.ell);
}

std::string CubicValue::to_string() const {
  if (is_zero()) return "0";
  return rho_power(k_).to_string();
}

CubicValue cubic_character(const EisensteinInt& nu, const PrimaryPrime& P) {
  mpz_class r = rho_image(P);
  mpz_class x = fmod(nu.a() + nu.b() * r, P.ell);
  if (x == 0) return CubicValue::zero();
  mpz_class e = (P.ell - 1) / 3;
  mpz_class y;
  mpz_powm(y.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), P.ell.get_mpz_t());
  if (y == 1) return CubicValue::rho_pow(0);
  if (y == r) return CubicValue::rho_pow(1);
  if (y == fmod(r * r, P.ell)) return CubicValue::rho_pow(2);
  throw Error(ErrorKind::InternalInconsistency,
              "power residue matches no cube root of unity mod " + P.ell.get_str());
}

CubicValue cubic_character_inert(const EisensteinInt& nu, const mpz_class& q) {
  std::uint64_t qq = modp::to_u64(q);
  Fq2Field F(qq);
  Fq2 x{modp::reduce(nu.a(), qq), modp::reduce(nu.b(), qq)};
  if (F.is_zero(x)) return CubicValue::zero();
  Fq2 y = F.pow(x, (qq * qq - 1) / 3);
  Fq2 rho{0, 1 % qq};
  if (F.equal(y, Fq2{1 % qq, 0})) return CubicValue::rho_pow(0);
  if (F.equal(y, rho)) return CubicValue::rho_pow(1);
  if (F.equal(y, F.mul(rho, rho))) return CubicValue::rho_pow(2);
  throw Error(ErrorKind::InternalInconsistency, "inert power residue is not a cube root of unity");
}

namespace {

struct PrimaryPrimeElement {
  bool inert = false;
  mpz_class q;           // inert case
  PrimaryPrime split;    // split case
};

PrimaryPrimeElement classify(const EisensteinInt& x) {
  PrimaryPrimeElement out;
  if (x.b() == 0 && x.a() < 0) {
    mpz_class q = -x.a();
    if (mpz_probab_prime_p(q.get_mpz_t(), 30) != 0 && fmod(q, 3) == 2) {
      out.inert = true;
      out.q = q;
      return out;
    }
  }
  mpz_class n = x.norm();
  if (!x.is_primary() || fmod(n, 3) != 1 || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::NotPrimary, x.to_string() + " is not a primary prime");
  out.split = PrimaryPrime::from_element(x);
  return out;
}

CubicValue symbol(const EisensteinInt& top, const PrimaryPrimeElement& bottom) {
  return bottom.inert ? cubic_character_inert(top, bottom.q) : cubic_character(top, bottom.split);
}

}  // namespace

bool cubic_reciprocity_check(const EisensteinInt& l1, const EisensteinInt& l2) {
  PrimaryPrimeElement p1 = classify(l1), p2 = classify(l2);
  CubicValue s12 = symbol(l1, p2), s21 = symbol(l2, p1);
  if (s12.is_zero() || s21.is_zero())
    throw Error(ErrorKind::NotPrimary, "arguments are not coprime");
  return s12 == s21;
}

EisensteinInt chi0(const EisensteinInt& nu) {
  if (fmod(nu.a() + nu.b(), 3) == 0) return EisensteinInt(0);
  for (long k = 0; k < 3; ++k) {
    for (int sign : {1, -1}) {
      EisensteinInt w = rho_power(k) * EisensteinInt(sign);
      EisensteinInt d = nu - w;
      if (fmod(d.a(), 3) == 0 && fmod(d.b(), 3) == 0) return w;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "unit class mod 3 not found");
}

int chi0_prime(const EisensteinInt& nu) {
  mpz_class r = fmod(nu.a() + nu.b(), 3);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

EisensteinInt hecke_character(const EisensteinInt& nu, const PrimaryPrime& P) {
  CubicValue chi = cubic_character(nu, P);
  if (chi.is_zero()) return EisensteinInt(0);
  switch (P.ell_mod9()) {
    case 7: {
      EisensteinInt c0 = chi0(nu);
      if (c0.is_zero()) return EisensteinInt(0);
      return chi.to_eisenstein() * c0.conj() * nu.conj();
    }
    case 4: {
      int c0 = chi0_prime(nu);
      if (c0 == 0) return EisensteinInt(0);
      return chi.to_eisenstein() * EisensteinInt(c0) * nu.conj();
    }
    default:
      throw Error(ErrorKind::UnsupportedResidueClass,
                  "ell = " + P.ell.get_str() + " is 1 mod 9");
  }
}

}  // namespace ellgauss
