#include "ellgauss/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ellgauss/error.hpp"

namespace ellgauss {

RationalSeries::RationalSeries(int offset, std::vector<mpq_class> coeffs, int order)
    : offset_(offset), coeffs_(std::move(coeffs)), order_(order) {
  normalize();
}

RationalSeries RationalSeries::monomial(mpq_class c, int exponent, int order) {
  return RationalSeries(exponent, {std::move(c)}, order);
}

void RationalSeries::normalize() {
  if (offset_ >= order_) {
    coeffs_.clear();
    offset_ = std::min(offset_, order_);
    return;
  }
  size_t keep = static_cast<size_t>(order_ - offset_);
  if (coeffs_.size() > keep) coeffs_.resize(keep);
}

int RationalSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return offset_ + static_cast<int>(i);
  return order_;
}

mpq_class RationalSeries::coeff(int exponent) const {
  if (exponent < offset_) return 0;
  size_t i = static_cast<size_t>(exponent - offset_);
  return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

void RationalSeries::set_coeff(int exponent, const mpq_class& value) {
  if (exponent >= order_) return;
  if (coeffs_.empty()) offset_ = exponent;
  if (exponent < offset_) {
    coeffs_.insert(coeffs_.begin(), static_cast<size_t>(offset_ - exponent), mpq_class(0));
    offset_ = exponent;
  }
  size_t i = static_cast<size_t>(exponent - offset_);
  if (i >= coeffs_.size()) coeffs_.resize(i + 1);
  coeffs_[i] = value;
}

RationalSeries RationalSeries::truncated(int order) const {
  RationalSeries r = *this;
  r.order_ = std::min(order_, order);
  r.normalize();
  return r;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalSeries operator+(const RationalSeries& x, const RationalSeries& y) {
  int order = std::min(x.order_, y.order_);
  int lo = std::min(x.offset_, y.offset_);
  std::vector<mpq_class> out(static_cast<size_t>(std::max(0, order - lo)));
  for (int k = lo; k < order; ++k) out[static_cast<size_t>(k - lo)] = x.coeff(k) + y.coeff(k);
  return RationalSeries(lo, std::move(out), order);
}

RationalSeries operator-(const RationalSeries& x, const RationalSeries& y) { return x + (-y); }

RationalSeries operator*(const RationalSeries& x, const RationalSeries& y) {
  int vx = x.valuation(), vy = y.valuation();
  int order = std::min(x.order_ + vy, y.order_ + vx);
  int lo = vx + vy;
  if (lo >= order) return RationalSeries::zero(order);
  std::vector<mpq_class> out(static_cast<size_t>(order - lo));
  mpq_class t;
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    const mpq_class& a = x.coeffs_[i];
    if (a == 0) continue;
    int ei = x.offset_ + static_cast<int>(i);
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      int e = ei + y.offset_ + static_cast<int>(j);
      if (e >= order) break;
      const mpq_class& b = y.coeffs_[j];
      if (b == 0) continue;
      mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      out[static_cast<size_t>(e - lo)] += t;
    }
  }
  return RationalSeries(lo, std::move(out), order);
}

RationalSeries operator*(const mpq_class& c, const RationalSeries& x) {
  RationalSeries r = x;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

RationalSeries RationalSeries::reciprocal() const {
  int v = valuation();
  if (v >= order_) throw Error(ErrorKind::InvalidArgument, "reciprocal of a series with no known leading term");
  int rel = order_ - v;  // relative precision
  std::vector<mpq_class> a(static_cast<size_t>(rel));
  for (int k = 0; k < rel; ++k) a[static_cast<size_t>(k)] = coeff(v + k);
  std::vector<mpq_class> b(static_cast<size_t>(rel));
  mpq_class inv0 = 1 / a[0];
  b[0] = inv0;
  mpq_class acc, t;
  for (int k = 1; k < rel; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (a[static_cast<size_t>(j)] == 0 || b[static_cast<size_t>(k - j)] == 0) continue;
      mpq_mul(t.get_mpq_t(), a[static_cast<size_t>(j)].get_mpq_t(), b[static_cast<size_t>(k - j)].get_mpq_t());
      acc += t;
    }
    b[static_cast<size_t>(k)] = -acc * inv0;
  }
  return RationalSeries(-v, std::move(b), rel - v);
}

RationalSeries RationalSeries::compose(const RationalSeries& inner) const {
  if (valuation() < 0)
    throw Error(ErrorKind::InvalidArgument, "outer series of compose must be a power series");
  int vg = inner.valuation();
  if (vg < 1) throw Error(ErrorKind::InvalidArgument, "inner series must have positive valuation");
  int order = std::min(order_ * vg, inner.order_);
  int top = std::min(order_ - 1, order / vg);
  RationalSeries acc = RationalSeries::zero(order);
  for (int k = top; k >= 0; --k) {
    acc = (acc * inner).truncated(order);
    mpq_class c = coeff(k);
    if (c != 0) acc = acc + RationalSeries::monomial(c, 0, order);
  }
  return acc;
}

RationalSeries RationalSeries::reversion() const {
  if (valuation() != 1) throw Error(ErrorKind::InvalidArgument, "reversion needs valuation 1");
  mpq_class a1 = coeff(1);
  RationalSeries g = RationalSeries::monomial(1 / a1, 1, order_);
  for (int k = 2; k < order_; ++k) {
    RationalSeries h = truncated(k + 1).compose(g.truncated(k + 1));
    mpq_class r = h.coeff(k);
    if (r != 0) g.set_coeff(k, g.coeff(k) - r / a1);
  }
  return g;
}

RationalSeries RationalSeries::derivative() const {
  std::vector<mpq_class> out;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * (offset_ + static_cast<int>(i)));
  RationalSeries r(offset_ - 1, std::move(out), order_ - 1);
  return r;
}

RationalSeries RationalSeries::pow(unsigned e) const {
  if (e == 0) return RationalSeries::monomial(1, 0, order_ - valuation());
  RationalSeries r = *this;
  for (unsigned i = 1; i < e; ++i) r = r * *this;
  return r;
}

bool RationalSeries::agrees_with(const RationalSeries& other) const {
  int order = std::min(order_, other.order_);
  int lo = std::min(offset_, other.offset_);
  for (int k = lo; k < order; ++k)
    if (coeff(k) != other.coeff(k)) return false;
  return true;
}

std::string RationalSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    if (shown++) os << " + ";
    os << "(" << coeffs_[i].get_str() << ")t^" << offset_ + static_cast<int>(i);
  }
  if (!shown) os << "0";
  os << " + O(t^" << order_ << ")";
  return os.str();
}

mpq_class rational_binomial(const mpq_class& alpha, unsigned n) {
  mpq_class r = 1;
  for (unsigned k = 1; k <= n; ++k) r = r * (alpha - (k - 1)) / k;
  return r;
}

RationalSeries binomial_series_t3(const mpq_class& alpha, int sign, int order) {
  RationalSeries s = RationalSeries::zero(order);
  mpq_class b = 1;
  for (int n = 0; 3 * n < order; ++n) {
    if (n > 0) b = b * (alpha - (n - 1)) / n;
    s.set_coeff(3 * n, (sign < 0 && (n & 1)) ? mpq_class(-b) : b);
  }
  return s;
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

namespace {

class Pascal {
 public:
  explicit Pascal(int n) : rows_(static_cast<size_t>(n + 1)) {
    for (int i = 0; i <= n; ++i) {
      auto& row = rows_[static_cast<size_t>(i)];
      row.resize(static_cast<size_t>(i + 1));
      row[0] = row[static_cast<size_t>(i)] = 1;
      for (int j = 1; j < i; ++j)
        row[static_cast<size_t>(j)] = rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                                      rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
  }
  const mpz_class& operator()(int n, int k) const {
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

// Hurwitz coefficient n of f*g, using only the nonzero entries of f.
mpz_class hurwitz_product(const Pascal& B, const std::vector<mpz_class>& f,
                          const std::vector<mpz_class>& g, int n) {
  mpz_class acc = 0, t;
  for (int k = 0; k <= n; ++k) {
    const mpz_class& fk = f[static_cast<size_t>(k)];
    const mpz_class& gk = g[static_cast<size_t>(n - k)];
    if (fk == 0 || gk == 0) continue;
    t = fk * gk;
    acc += t * B(n, k);
  }
  return acc;
}

std::vector<mpq_class> hurwitz_to_taylor(const std::vector<mpz_class>& h) {
  std::vector<mpq_class> out(h.size());
  mpz_class f = 1;
  for (size_t k = 0; k < h.size(); ++k) {
    if (k > 0) f *= static_cast<unsigned long>(k);
    out[k] = mpq_class(h[k], f);
    out[k].canonicalize();
  }
  return out;
}

}  // namespace

std::vector<mpz_class> sl_hurwitz(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "sl order must be >= 1");
  Pascal B(N);
  std::vector<mpz_class> c(static_cast<size_t>(N + 1), 0), s2(c.size(), 0), s4(c.size(), 0);
  c[1] = 1;
  for (int n = 0; n + 3 <= N; ++n) {
    s2[static_cast<size_t>(n)] = hurwitz_product(B, c, c, n);
    s4[static_cast<size_t>(n)] = hurwitz_product(B, s2, s2, n);
    c[static_cast<size_t>(n + 3)] = 6 * s4[static_cast<size_t>(n)] - 4 * c[static_cast<size_t>(n)];
  }
  return c;
}

void sl_cl_hurwitz_coupled(int N, std::vector<mpz_class>& c, std::vector<mpz_class>& e) {
  Pascal B(N);
  c.assign(static_cast<size_t>(N + 1), 0);
  e.assign(static_cast<size_t>(N + 1), 0);
  e[0] = 1;
  for (int n = 0; n < N; ++n) {
    c[static_cast<size_t>(n + 1)] = hurwitz_product(B, e, e, n);
    e[static_cast<size_t>(n + 1)] = -hurwitz_product(B, c, c, n);
  }
}

RationalSeries sl_series(int N) {
  return RationalSeries(0, hurwitz_to_taylor(sl_hurwitz(N)), N + 1);
}

RationalSeries cl_series(int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "cl order must be >= 0");
  int M = std::max(N, 1);
  std::vector<mpz_class> c, e;
  sl_cl_hurwitz_coupled(M, c, e);
  if (c != sl_hurwitz(M))
    throw Error(ErrorKind::InternalInconsistency, "coupled system disagrees with Sl''' recurrence");
  RationalSeries sl(0, hurwitz_to_taylor(c), M + 1), cl(0, hurwitz_to_taylor(e), M + 1);
  RationalSeries one = RationalSeries::monomial(1, 0, M + 1);
  RationalSeries resid = sl * sl * sl + cl * cl * cl - one;
  if (resid.valuation() < resid.order())
    throw Error(ErrorKind::InternalInconsistency, "Sl^3 + Cl^3 != 1");
  return cl.truncated(N + 1);
}

std::vector<mpq_class> sl_inverse_differential(int N) {
  // g(u) = u f(u) = sum_j g_j u^j with g_j = D_{j-1}; the equation at u^k reads
  // ((k+1)(k+2)(k+3) + 24) D_{k+3} = 4 D_k - 6 [g^4]'_{k+4}.
  size_t J = static_cast<size_t>(N + 2);
  std::vector<mpq_class> g(J, 0), g2(J, 0);
  g[0] = 1;
  g2[0] = 1;
  mpq_class rest2, rest4, t;
  for (size_t j = 1; j < J; ++j) {
    rest2 = 0;
    for (size_t i = 1; i < j; ++i) {
      if (g[i] == 0 || g[j - i] == 0) continue;
      mpq_mul(t.get_mpq_t(), g[i].get_mpq_t(), g[j - i].get_mpq_t());
      rest2 += t;
    }
    rest4 = 2 * rest2;
    for (size_t i = 1; i < j; ++i) {
      if (g2[i] == 0 || g2[j - i] == 0) continue;
      mpq_mul(t.get_mpq_t(), g2[i].get_mpq_t(), g2[j - i].get_mpq_t());
      rest4 += t;
    }
    long k = static_cast<long>(j) - 4;
    mpq_class Dk = (j >= 3) ? g[j - 3] : mpq_class(0);
    mpq_class lhs = (k + 1) * (k + 2) * (k + 3) + 24;
    g[j] = (4 * Dk - 6 * rest4) / lhs;
    g2[j] = 2 * g[j] + rest2;
  }
  return g;
}

RationalSeries sl_inverse_series(int N) {
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "inverse order must be >= 2");
  RationalSeries recip = sl_series(N + 2).reciprocal().truncated(N + 1);
  RationalSeries diff(-1, sl_inverse_differential(N), N + 1);
  if (!recip.agrees_with(diff) || recip.order() != diff.order())
    throw Error(ErrorKind::InternalInconsistency, "1/Sl: reciprocal and differential routes disagree");
  return diff;
}

std::vector<mpq_class> eisenstein_G(int N) {
  std::vector<mpq_class> G(static_cast<size_t>(std::max(N, 1) + 1));
  G[0] = -1;
  G[1] = mpq_class(27, 140);
  mpq_class acc, t;
  for (int n = 2; n <= N; ++n) {
    acc = 0;
    for (int k = 1; k < n; ++k) {
      mpq_mul(t.get_mpq_t(), G[static_cast<size_t>(k)].get_mpq_t(), G[static_cast<size_t>(n - k)].get_mpq_t());
      acc += t * ((6 * k - 1) * (6 * n - 6 * k - 1));
    }
    long lhs = (6L * n - 1) * ((6L * n - 2) * (6L * n - 3) - 12);
    G[static_cast<size_t>(n)] = 6 * acc / lhs;
  }
  G.resize(static_cast<size_t>(N + 1));
  return G;
}

namespace {

mpz_class pow3(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

}  // namespace

DFromG d_from_G(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "index must be >= 1");
  std::vector<mpq_class> G = eisenstein_G(N);
  std::vector<mpq_class> Ddiff = sl_inverse_differential(6 * N + 2);
  auto Dd = [&](int k) { return Ddiff[static_cast<size_t>(k + 1)]; };

  DFromG out;
  out.D_6m_minus_1.resize(static_cast<size_t>(N + 1));
  for (int m = 0; m <= N; ++m) {
    mpz_class p = pow3(static_cast<unsigned long>(3 * m));  // 3^{3m}
    mpq_class sgn_term = mpq_class((m & 1) ? mpz_class(-p) : p) / 3;
    mpq_class denom = mpq_class(2 * pow3(static_cast<unsigned long>(6 * m))) / 3;
    out.D_6m_minus_1[static_cast<size_t>(m)] = (sgn_term - 1) / denom * G[static_cast<size_t>(m)];
  }

  // 18 sum_n D_{6n+2} 3^{6n} u^{6n} * sum_n (6n-1) G_{6n} u^{6n} = 3.
  out.D_6k_plus_2.resize(static_cast<size_t>(N + 1));
  out.D_6k_plus_2[0] = mpq_class(1, 6) / (-1 * G[0]);
  for (int m = 1; m <= N; ++m) {
    mpq_class acc = 0;
    for (int k = 0; k < m; ++k)
      acc += out.D_6k_plus_2[static_cast<size_t>(k)] * (6 * (m - k) - 1) * G[static_cast<size_t>(m - k)] *
             pow3(static_cast<unsigned long>(6 * k));
    // coefficient of D_{6m+2}: (-1) G_0 3^{6m} = 3^{6m}
    out.D_6k_plus_2[static_cast<size_t>(m)] = -acc / pow3(static_cast<unsigned long>(6 * m));
  }

  out.convolution_identity = true;
  for (int m = 1; m <= N; ++m) {
    mpq_class s = 0;
    for (int k = 0; k <= m; ++k)
      s += Dd(6 * k + 2) * (6 * (m - k) - 1) * G[static_cast<size_t>(m - k)] * pow3(static_cast<unsigned long>(6 * k));
    if (s != 0) out.convolution_identity = false;
  }

  out.matches_differential = true;
  for (int m = 0; m <= N; ++m) {
    if (out.D_6m_minus_1[static_cast<size_t>(m)] != Dd(6 * m - 1)) out.matches_differential = false;
    if (out.D_6k_plus_2[static_cast<size_t>(m)] != Dd(6 * m + 2)) out.matches_differential = false;
  }
  if (!out.matches_differential || !out.convolution_identity)
    throw Error(ErrorKind::InternalInconsistency, "G/D relations disagree with the differential route");
  return out;
}

RationalSeries arcsl_series(int N) {
  RationalSeries s = RationalSeries::zero(N + 1);
  mpq_class b = 1, alpha(-2, 3);
  for (int n = 0; 3 * n + 1 <= N; ++n) {
    if (n > 0) b = b * (alpha - (n - 1)) / n;
    mpq_class c = b / (3 * n + 1);
    s.set_coeff(3 * n + 1, (n & 1) ? mpq_class(-c) : c);
  }
  return s;
}

RationalSeries sl_add(const RationalSeries& x, const RationalSeries& y, int N) {
  int order = N + 1;
  RationalSeries X = x.truncated(order), Y = y.truncated(order);
  RationalSeries one = RationalSeries::monomial(1, 0, order);
  // h_k = sum_{i=0}^k x^i y^{k-i} = x h_{k-1} + y^k
  std::vector<RationalSeries> h{one};
  RationalSeries ypow = one;
  for (int k = 1; k <= N; ++k) {
    ypow = (ypow * Y).truncated(order);
    h.push_back((X * h.back() + ypow).truncated(order));
  }
  RationalSeries sum_num = RationalSeries::zero(order), sum_den = RationalSeries::zero(order);
  for (int n = 1; 3 * n + 1 <= N; ++n) {
    mpq_class b = rational_binomial(mpq_class(1, 3), static_cast<unsigned>(n));
    sum_num = sum_num + ((n & 1) ? mpq_class(-b) : b) * h[static_cast<size_t>(3 * n - 3)];
  }
  for (int n = 1; 3 * n <= N; ++n) {
    mpq_class b = rational_binomial(mpq_class(2, 3), static_cast<unsigned>(n));
    sum_den = sum_den + ((n & 1) ? mpq_class(-b) : b) * h[static_cast<size_t>(3 * n - 2)];
  }
  RationalSeries xy = X * Y;
  RationalSeries num = X + Y - (xy * xy * sum_num).truncated(order);
  RationalSeries den = one - (xy * sum_den).truncated(order);
  return (num * den.reciprocal()).truncated(order);
}

SlMultiple sl_multiple_series(long r, int N) {
  if (r == 0) throw Error(ErrorKind::ZeroMultiplier, "Sl(0 u) has no inverse series");
  int order = N + 1;
  RationalSeries t = RationalSeries::monomial(1, 1, order);
  RationalSeries step = t;
  if (r < 0) {
    RationalSeries cl_inv = binomial_series_t3(mpq_class(-1, 3), -1, order);
    step = -(t * cl_inv).truncated(order);
  }
  RationalSeries s = step;
  for (long k = 1; k < std::labs(r); ++k) s = sl_add(s, step, N);
  SlMultiple out;
  out.sl = s;
  out.inverse = s.reciprocal();
  return out;
}

bool denominator_supported_on(const mpq_class& q, const std::vector<unsigned long>& primes) {
  mpz_class d = q.get_den();
  for (unsigned long p : primes) {
    if (p < 2) continue;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
  }
  return d == 1;
}

bool sl_multiple_membership(long r, const SlMultiple& s) {
  if (s.sl.coeff(1) != r) return false;
  for (int k = s.sl.offset(); k < s.sl.order(); ++k) {
    mpq_class c = s.sl.coeff(k);
    if (c == 0 || k == 1) continue;
    if (k < 4 || k % 3 != 1) return false;
    if (!denominator_supported_on(c, {3})) return false;
  }
  if (s.inverse.coeff(-1) != mpq_class(1) / r) return false;
  std::vector<unsigned long> primes{3};
  {
    mpz_class a = std::labs(r);
    for (unsigned long p = 2; p <= static_cast<unsigned long>(std::labs(r)); ++p)
      if (mpz_divisible_ui_p(a.get_mpz_t(), p)) primes.push_back(p);
  }
  for (int k = s.inverse.offset(); k < s.inverse.order(); ++k) {
    mpq_class c = s.inverse.coeff(k);
    if (c == 0 || k == -1) continue;
    if (k < 2 || ((k % 3) + 3) % 3 != 2) return false;
    if (!denominator_supported_on(c, primes)) return false;
  }
  return true;
}

mpq_class BHTable::d(int k) const {
  mpq_class r = D(k);
  if (k > 0) r *= factorial(static_cast<unsigned>(k));
  return r;
}

BHTable compute_table(int N) {
  if (N < 4) N = 4;
  BHTable T;
  T.order = N;
  T.c = sl_hurwitz(N);
  std::vector<mpz_class> cc;
  sl_cl_hurwitz_coupled(N, cc, T.e);
  if (cc != T.c)
    throw Error(ErrorKind::InternalInconsistency, "coupled system disagrees with Sl''' recurrence");
  T.C = hurwitz_to_taylor(T.c);
  T.E = hurwitz_to_taylor(T.e);
  RationalSeries inv = sl_inverse_series(N);
  for (int k = -1; k <= N; ++k) T.D_.push_back(inv.coeff(k));
  T.G_ = eisenstein_G(N / 6 + 1);
  T.BH_.resize(T.G_.size());
  for (size_t n = 0; n < T.G_.size(); ++n) T.BH_[n] = T.G_[n] * factorial(static_cast<unsigned>(6 * n));
  return T;
}

std::shared_ptr<const BHTable> shared_table(int N) {
  static std::mutex mu;
  static std::shared_ptr<const BHTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache->order < N) cache = std::make_shared<const BHTable>(compute_table(std::max(N, 64)));
  return cache;
}

bool LemmaReport::all_pass() const { return failures() == 0; }

size_t LemmaReport::failures() const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const LemmaCheck& c) { return !c.pass; }));
}

LemmaReport lemma_checkers(int N, const BHTable& T) {
  if (T.order < 6 * N + 2)
    throw Error(ErrorKind::InvalidArgument, "table too short for lemma checks");
  LemmaReport rep;
  auto add = [&](const char* name, int idx, bool ok) { rep.checks.push_back({name, idx, ok}); };
  auto is_int = [](const mpq_class& q) { return q.get_den() == 1; };

  std::vector<unsigned long> primes1mod3;
  for (unsigned long p = 7; p <= static_cast<unsigned long>(6 * N + 1); p += 6) {
    mpz_class z = p;
    if (mpz_probab_prime_p(z.get_mpz_t(), 30)) primes1mod3.push_back(p);
  }

  for (int m = 0; m <= N; ++m) {
    // c_k in Z, computed from the rational Taylor coefficient.
    for (int k : {3 * m + 1}) {
      mpq_class ck = T.C[static_cast<size_t>(k)] * factorial(static_cast<unsigned>(k));
      add("c_k integral", k, is_int(ck));
      int s = (k + 1) % 2 == 0 ? 1 : -1;
      add("(-1)^(k+1) c_k > 0", k, s * sgn(ck) > 0);
    }
    add("(-1)^n e_3n > 0", m, ((m % 2) ? -1 : 1) * sgn(mpq_class(T.e[static_cast<size_t>(3 * m)])) > 0);

    mpq_class d62 = T.d(6 * m + 2);
    add("2 d_{6m+2} in Z[1/3]", m, denominator_supported_on(2 * d62, {3}));
    add("d_{6m+2} in Z[1/3]", m, denominator_supported_on(d62, {3}));
    add("d_{6n+2} 3^{3n+1} in Z", m, is_int(d62 * pow3(static_cast<unsigned long>(3 * m + 1))));

    mpq_class h = 2 * factorial(static_cast<unsigned>(6 * m)) * T.D(6 * m + 2);
    for (unsigned long p : primes1mod3) {
      unsigned long t = static_cast<unsigned long>(6 * m) / (p - 1);
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), p, t);
      h *= pw;
    }
    add("prod l^t(l,m) 2 (6m)! D_{6m+2} in Z[1/3]", m, denominator_supported_on(h, {3}));

    rep.conjecture.push_back({"(-1)^n D_{6n+2} > 0", m, ((m % 2) ? -1 : 1) * sgn(T.D(6 * m + 2)) > 0});

    if (m >= 1) {
      mpq_class w = 2 * m * T.d(6 * m - 1);
      for (unsigned long p : primes1mod3)
        if ((6 * static_cast<unsigned long>(m)) % (p - 1) == 0) w *= p;
      add("2m prod l d_{6m-1} in Z[1/3]", m, denominator_supported_on(w, {3}));
      add("G_6n > 0", m, sgn(T.G(6 * m)) > 0);
      add("(-1)^m D_{6m-1} > 0", m, ((m % 2) ? -1 : 1) * sgn(T.D(6 * m - 1)) > 0);
    }
  }
  return rep;
}

}  // namespace ellgauss
