#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ellgauss {

/// Truncated Laurent series sum_{k >= offset} c_k t^k + O(t^order).
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(int offset, std::vector<mpq_class> coeffs, int order);

  static RationalSeries zero(int order) { return RationalSeries(0, {}, order); }
  static RationalSeries monomial(mpq_class c, int exponent, int order);

  int offset() const { return offset_; }
  int order() const { return order_; }
  /// Lowest exponent with a nonzero coefficient; order() if none.
  int valuation() const;
  mpq_class coeff(int exponent) const;
  void set_coeff(int exponent, const mpq_class& value);

  RationalSeries truncated(int order) const;
  RationalSeries operator-() const;
  friend RationalSeries operator+(const RationalSeries& x, const RationalSeries& y);
  friend RationalSeries operator-(const RationalSeries& x, const RationalSeries& y);
  friend RationalSeries operator*(const RationalSeries& x, const RationalSeries& y);
  friend RationalSeries operator*(const mpq_class& c, const RationalSeries& x);

  /// Requires a nonzero coefficient below the truncation order.
  RationalSeries reciprocal() const;
  /// this(inner(t)); this must be a power series and inner of positive valuation.
  RationalSeries compose(const RationalSeries& inner) const;
  /// Compositional inverse of a series t + O(t^2).
  RationalSeries reversion() const;
  RationalSeries derivative() const;
  RationalSeries pow(unsigned e) const;

  /// Coefficientwise equality below min of the two orders.
  bool agrees_with(const RationalSeries& other) const;

  std::string to_string(int max_terms = 8) const;

 private:
  void normalize();
  int offset_ = 0;
  std::vector<mpq_class> coeffs_;
  int order_ = 0;
};

/// binom(alpha, n) for rational alpha.
mpq_class rational_binomial(const mpq_class& alpha, unsigned n);
/// sum_n binom(alpha, n) (sign * t^3)^n to O(t^order).
RationalSeries binomial_series_t3(const mpq_class& alpha, int sign, int order);

/// Exact Bernoulli-Hurwitz-type data up to a truncation index.
struct BHTable {
  int order = 0;                   // largest exponent covered
  std::vector<mpz_class> c;        // c[k] = k! C_k
  std::vector<mpq_class> C;        // Taylor coefficients of Sl
  std::vector<mpz_class> e;        // e[k] = k! E_k
  std::vector<mpq_class> E;        // Taylor coefficients of Cl
  std::vector<mpq_class> D_;       // D_[k + 1] = D_k, k >= -1
  std::vector<mpq_class> G_;       // G_[n] = G_{6n}, G_0 = -1
  std::vector<mpq_class> BH_;      // BH_[n] = (6n)! G_{6n}

  const mpq_class& D(int k) const { return D_.at(static_cast<size_t>(k + 1)); }
  mpq_class d(int k) const;
  const mpq_class& G(int six_n) const { return G_.at(static_cast<size_t>(six_n / 6)); }
  const mpq_class& BH(int six_n) const { return BH_.at(static_cast<size_t>(six_n / 6)); }
};

mpz_class factorial(unsigned n);

/// Hurwitz integers c_k of Sl from Sl''' = 6 Sl^4 - 4 Sl, k <= N.
std::vector<mpz_class> sl_hurwitz(int N);
/// Hurwitz integers (c_k, e_k) from Sl' = Cl^2, Cl' = -Sl^2.
void sl_cl_hurwitz_coupled(int N, std::vector<mpz_class>& c, std::vector<mpz_class>& e);

/// Sl(u) to O(u^{N+1}) via the third-order recurrence.
RationalSeries sl_series(int N);
/// Cl(u) to O(u^{N+1}) via the coupled system; checks the coupled Sl and Sl^3 + Cl^3 = 1.
RationalSeries cl_series(int N);
/// 1/Sl(u) to O(u^{N+1}); reciprocal and differential routes must agree.
RationalSeries sl_inverse_series(int N);
/// Laurent coefficients D_k (k = -1..N) from f''' = 4f - 6f^4.
std::vector<mpq_class> sl_inverse_differential(int N);

/// G_{6n} for n = 0..N (G_0 = -1) by the quadratic convolution recurrence.
std::vector<mpq_class> eisenstein_G(int N);

struct DFromG {
  std::vector<mpq_class> D_6m_minus_1;  // index m = 0..N
  std::vector<mpq_class> D_6k_plus_2;   // index k = 0..N
  bool matches_differential = false;
  bool convolution_identity = false;
};
/// Throws InternalInconsistency on mismatch with the differential route.
DFromG d_from_G(int N);

/// ArcSl(t) to O(t^{N+1}).
RationalSeries arcsl_series(int N);

struct SlMultiple {
  RationalSeries sl;       // Sl(r u) in t = Sl(u)
  RationalSeries inverse;  // 1 / Sl(r u)
};
/// Addition formula Sl(u+v) for series x = Sl(u), y = Sl(v) in a common variable.
RationalSeries sl_add(const RationalSeries& x, const RationalSeries& y, int N);
SlMultiple sl_multiple_series(long r, int N);
/// Checks r t + t^4 Z[1/3][[t^3]] and 1/(rt) + t^2 Z[1/r,1/3][[t^3]].
bool sl_multiple_membership(long r, const SlMultiple& s);

/// Full table to index N (N >= 4), built once.
BHTable compute_table(int N);
/// Process-wide read-only table covering at least index N.
std::shared_ptr<const BHTable> shared_table(int N);

struct LemmaCheck {
  std::string lemma;
  int index = 0;
  bool pass = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  /// Sign of (-1)^n D_{6n+2}; reported, never asserted.
  std::vector<LemmaCheck> conjecture;
  bool all_pass() const;
  size_t failures() const;
};

/// Denominator and sign lemmas for loop indices 1..N.
LemmaReport lemma_checkers(int N, const BHTable& table);

/// Denominator of q contains only the given primes.
bool denominator_supported_on(const mpq_class& q, const std::vector<unsigned long>& primes);

}  // namespace ellgauss
