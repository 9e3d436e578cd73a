#include "ellgauss/congruence.hpp"

#include "ellgauss/error.hpp"
#include "ellgauss/modarith.hpp"
#include "ellgauss/series.hpp"

namespace ellgauss {

namespace {

mpq_class bh_value(const PrimaryPrime& P, int* index) {
  unsigned m9 = P.ell_mod9();
  if (m9 != 4 && m9 != 7)
    throw Error(ErrorKind::UnsupportedResidueClass, "ell = " + P.ell.get_str() + " is 1 mod 9");
  int k = static_cast<int>(2 * (P.ell_ui() - 1) / 3);
  if (index) *index = k;
  auto table = shared_table(k);
  return m9 == 7 ? table->C.at(static_cast<size_t>(k)) : table->D(k);
}

mpz_class canonical(const mpz_class& x, const mpz_class& ell) {
  mpz_class r = x % ell;
  if (r < 0) r += ell;
  return r;
}

}  // namespace

mpz_class bh_residue(const PrimaryPrime& P) {
  mpq_class v = bh_value(P, nullptr);
  unsigned long ell = P.ell_ui();
  mpq_class x = v / -3;
  return mpz_class(static_cast<unsigned long>(modp::reduce(x, ell)));
}

CongruenceReport verify_main(const PrimaryPrime& P, const AlphaResult& a) {
  CongruenceReport r;
  r.ell = P.ell;
  r.ell_mod9 = P.ell_mod9();
  r.alpha = a.alpha;
  r.bh_value = bh_value(P, &r.index);
  unsigned long ell = P.ell_ui();
  try {
    r.bh_residue = bh_residue(P);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DenominatorDivisible) throw;
    r.denominator_ok = false;
    r.note = e.what();
    return r;
  }
  r.alpha_residue = canonical(residue_iso(a.alpha, P), P.ell);
  r.alpha_pass = r.alpha_residue == r.bh_residue;

  r.abs_square_lhs = canonical(a.alpha.norm(), P.ell);
  unsigned long e = r.ell_mod9 == 7 ? (ell - 7) / 6 : (ell - 4) / 3;
  unsigned long base = modp::reduce(r.bh_value, ell);
  unsigned long t = modp::mul(modp::pow(3, e, ell), base, ell);
  r.abs_square_rhs = mpz_class(modp::mul(t, t, ell));
  r.abs_square_pass = r.abs_square_lhs == r.abs_square_rhs;
  return r;
}

CongruenceReport verify_main(const PrimaryPrime& P) { return verify_main(P, alpha(P)); }

}  // namespace ellgauss
