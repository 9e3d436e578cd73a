#pragma once

#include <string>

#include "ellgauss/analytic.hpp"
#include "ellgauss/eisenstein.hpp"

namespace ellgauss {

struct CongruenceReport {
  mpz_class ell;
  unsigned ell_mod9 = 0;
  int index = 0;             // 2(ell - 1) / 3
  mpq_class bh_value;        // C_index or D_index
  EisensteinInt alpha;
  mpz_class bh_residue;      // -(1/3) * bh_value mod ell
  mpz_class alpha_residue;   // image of alpha in Z[rho] / (lambda)
  mpz_class abs_square_lhs;  // |alpha|^2 mod ell
  mpz_class abs_square_rhs;
  bool denominator_ok = true;
  bool alpha_pass = false;
  bool abs_square_pass = false;
  std::string note;

  bool pass() const { return denominator_ok && alpha_pass && abs_square_pass; }
};

/// -(1/3) C_{2(ell-1)/3} mod ell for ell = 7 mod 9, -(1/3) D_{2(ell-1)/3} mod ell for ell = 4 mod 9.
mpz_class bh_residue(const PrimaryPrime& P);

CongruenceReport verify_main(const PrimaryPrime& P, const AlphaResult& a);
CongruenceReport verify_main(const PrimaryPrime& P);

}  // namespace ellgauss
