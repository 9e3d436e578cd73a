// Acceptance run: one PASS/FAIL line per criterion, followed by indented notes.
//
//   acceptance [--expect-fail 1,4,...]
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ellgauss/analytic.hpp"
#include "ellgauss/congruence.hpp"
#include "ellgauss/curves.hpp"
#include "ellgauss/lseries.hpp"
#include "ellgauss/modarith.hpp"
#include "ellgauss/report.hpp"
#include "ellgauss/series.hpp"
#include "lattice_oracle.hpp"
#include "reference_tables.hpp"

namespace ellgauss {
namespace {

// Pinned limits.
constexpr double kTablesSeconds = 10.0;
constexpr double kExamplesSeconds = 5.0;
constexpr double kSweepSeconds = 600.0;
constexpr mpfr_prec_t kSweepMaxPrecision = 1024;
constexpr mpfr_prec_t kExamplePrecision = 128;
constexpr long kWpSlackBits = 24;
constexpr long kCubeSlackBits = 16;
constexpr double kPointCountSeconds = 60.0;
constexpr unsigned long kSweepBound = 500;
constexpr unsigned long kTateBound = 200;
constexpr unsigned long kSplitNormBound = 200;
constexpr unsigned long kDeuNormBound = 1000;
constexpr int kLemmaIndex = 60;
constexpr int kArcSlOrder = 100;
constexpr int kMultipleOrder = 40;
constexpr long kMultipleBound = 5;
constexpr mpfr_prec_t kOraclePrecision = 192;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

std::string sci(const Real& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x.to_double();
  return os.str();
}

mpq_class q(const char* s) {
  mpq_class r(s);
  r.canonicalize();
  return r;
}

std::vector<unsigned long> admissible(unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long p : modp::primes_up_to(bound))
    if (p % 9 == 4 || p % 9 == 7) out.push_back(p);
  return out;
}

// Shared by criteria 3, 4 and 9.
struct SweepEntry {
  PrimaryPrime P;
  AlphaResult a;
  CongruenceReport cong;
};
std::vector<SweepEntry> g_sweep;
double g_sweep_seconds = 0;

Outcome table_regression() {
  Outcome o;
  auto t0 = Clock::now();
  BHTable t = compute_table(67);
  report::json j = report::tables_json(t);
  double elapsed = since(t0);
  const auto& t1 = j.at("table1");
  const auto& t2 = j.at("table2");
  const auto& t3 = j.at("table3");
  int total = 0, mismatched = 0;
  for (const auto& [n, v] : reference::table1()) {
    ++total;
    if (t1.at("c_" + std::to_string(n)) != v) {
      ++mismatched;
      o.check(false, "c_" + std::to_string(n));
    }
  }
  for (const auto& [n, v] : reference::table2()) {
    ++total;
    if (q(t2.at("d_" + std::to_string(n)).get<std::string>().c_str()) != q(v)) {
      ++mismatched;
      o.check(false, "d_" + std::to_string(n));
    }
  }
  std::vector<int> bad_g;
  for (const auto& row : reference::table3()) {
    std::string sn = std::to_string(row.n);
    total += 2;
    mpq_class G = q(t3.at("G_" + sn).get<std::string>().c_str());
    mpq_class BH = q(t3.at("BH_" + sn).get<std::string>().c_str());
    bool g_ok = G == q(row.G), bh_ok = BH == q(row.BH);
    if (!g_ok) o.check(false, "G_" + sn + " printed " + row.G + ", computed " + G.get_str());
    if (!bh_ok) o.check(false, "BH_" + sn + " printed " + row.BH + ", computed " + BH.get_str());
    mismatched += !g_ok + !bh_ok;
    if (!g_ok) bad_g.push_back(row.n);
  }
  o.check(elapsed < kTablesSeconds, "runtime " + secs(elapsed));
  o.note(std::to_string(total - mismatched) + "/" + std::to_string(total) + " published values reproduced in " +
         secs(elapsed));
  // Evidence that the mismatches sit in the published rows.
  for (int n : bad_g) {
    Real oracle = testing_oracle::lattice_G(n, kOraclePrecision);
    Real ours(t.G(n), kOraclePrecision);
    const char* printed = nullptr;
    for (const auto& row : reference::table3())
      if (row.n == n) printed = row.G;
    Real theirs(q(printed), kOraclePrecision);
    double tol = testing_oracle::lattice_G_tolerance(n, kOraclePrecision);
    o.note("G_" + std::to_string(n) + ": lattice sum vs computed rel " + sci(abs(ours - oracle) / oracle) +
           " (bound " + sci(Real(tol, 64)) + "), vs printed rel " + sci(abs(theirs - oracle) / oracle) +
           ", printed/computed = " + mpq_class(q(printed) / t.G(n)).get_str());
    // D_{6m-1} is a fixed rational multiple of G_{6m}; the printed G contradicts the printed d_{6m-1}.
    int m = n / 6;
    mpz_class p3m, p6m;
    mpz_ui_pow_ui(p3m.get_mpz_t(), 3, static_cast<unsigned long>(3 * m));
    mpz_ui_pow_ui(p6m.get_mpz_t(), 3, static_cast<unsigned long>(6 * m));
    mpq_class factor = (mpq_class((m & 1) ? mpz_class(-p3m) : p3m) / 3 - 1) / (mpq_class(2 * p6m) / 3);
    mpq_class d_from_printed = factor * q(printed) * factorial(static_cast<unsigned>(n - 1));
    for (const auto& [k, v] : reference::table2())
      if (k == n - 1)
        o.note("  printed d_" + std::to_string(k) + " = " + v + "; implied by printed G_" + std::to_string(n) +
               ": " + d_from_printed.get_str() + (d_from_printed == q(v) ? " (consistent)" : " (inconsistent)"));
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  auto t0 = Clock::now();
  PrimaryPrime P7 = split_prime(mpz_class(7)), P13 = split_prime(mpz_class(13));
  PrecisionPolicy pol{kExamplePrecision, kSweepMaxPrecision};
  AlphaResult a7 = alpha(P7, pol), a13 = alpha(P13, pol);
  mpz_class r7 = bh_residue(P7), r13 = bh_residue(P13);
  double elapsed = since(t0);
  o.check(a7.alpha == EisensteinInt::rho(), "alpha(7) = " + a7.alpha.to_string());
  o.check(a13.alpha == -EisensteinInt::rho().conj(), "alpha(13) = " + a13.alpha.to_string());
  o.check(r7 == 2, "bh_residue(7) = " + r7.get_str());
  o.check(r13 == 4, "bh_residue(13) = " + r13.get_str());
  o.check(elapsed < kExamplesSeconds, "runtime " + secs(elapsed));
  o.note("alpha(7) = " + a7.alpha.to_string() + ", alpha(13) = " + a13.alpha.to_string() + ", residues " +
         r7.get_str() + " mod 7, " + r13.get_str() + " mod 13, " + secs(elapsed));
  return o;
}

Outcome congruence_sweep() {
  Outcome o;
  auto t0 = Clock::now();
  mpfr_prec_t max_used = 0;
  int passed = 0;
  for (unsigned long ell : admissible(kSweepBound)) {
    PrimaryPrime P = split_prime(mpz_class(ell));
    try {
      AlphaResult a = alpha(P, {kExamplePrecision, kSweepMaxPrecision});
      CongruenceReport r = verify_main(P, a);
      max_used = std::max(max_used, a.precision_used);
      o.check(r.pass(), "ell = " + std::to_string(ell) + " alpha residue " + r.alpha_residue.get_str() +
                            " vs " + r.bh_residue.get_str() + ", |alpha|^2 " + r.abs_square_lhs.get_str() +
                            " vs " + r.abs_square_rhs.get_str());
      passed += r.pass();
      g_sweep.push_back({P, a, r});
    } catch (const Error& e) {
      o.check(false, "ell = " + std::to_string(ell) + ": " + e.what());
    }
  }
  g_sweep_seconds = since(t0);
  o.check(g_sweep_seconds < kSweepSeconds, "runtime " + secs(g_sweep_seconds));
  o.check(max_used <= kSweepMaxPrecision, "precision " + std::to_string(max_used));
  o.note(std::to_string(passed) + "/" + std::to_string(admissible(kSweepBound).size()) +
         " primes pass, max precision " + std::to_string(max_used) + " bits, " + secs(g_sweep_seconds));
  return o;
}

Outcome special_values() {
  Outcome o;
  for (mpfr_prec_t p : {128, 256, 512, 1024}) {
    WpPair w = wp_pair(HPComplex(Real(mpq_class(1, 3), p)));
    Real bound = Real::two_pow(-(static_cast<long>(p) - kWpSlackBits), p);
    Real e1 = (w.wp - HPComplex(Real(3L, p))).abs() / 3L;
    Real e2 = (w.dwp - HPComplex(Real(-9L, p))).abs() / 9L;
    o.check(e1 < bound, "wp(varpi/3) at " + std::to_string(p) + " bits, rel " + sci(e1));
    o.check(e2 < bound, "wp'(varpi/3) at " + std::to_string(p) + " bits, rel " + sci(e2));
    if (p == 128) o.note("at 128 bits: wp rel " + sci(e1) + ", wp' rel " + sci(e2) + ", bound " + sci(bound));
  }
  double worst = -1e9;
  for (const auto& s : g_sweep) {
    mpfr_prec_t p = s.a.precision_used;
    Real bound = Real::two_pow(-(static_cast<long>(p) - kCubeSlackBits), s.a.working_precision);
    o.check(s.a.lambda_cube_rel_error < bound, "lambda~^3 at ell = " + s.a.ell.get_str());
    HPComplex cube = s.a.lambda_tilde.pow(3);
    HPComplex lam = embed(s.a.lambda, cube.prec());
    Real rel = (cube - lam).abs() / lam.abs();
    o.check(rel < bound, "recomputed lambda~^3 at ell = " + s.a.ell.get_str());
    double margin = rel.is_zero() ? -1e9 : std::log2(rel.to_double()) + static_cast<double>(p - kCubeSlackBits);
    worst = std::max(worst, margin);
  }
  o.check(!g_sweep.empty(), "no swept primes");
  std::ostringstream os;
  os << g_sweep.size() << " swept primes: lambda~^3 = lambda, largest error 2^" << std::fixed << std::setprecision(0)
     << worst << " times the bound 2^-(prec-" << kCubeSlackBits << ")";
  o.note(os.str());
  return o;
}

Outcome point_counts() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<PrimaryPrime> lambdas = {PrimaryPrime::from_element(EisensteinInt(1, 3)),
                                       PrimaryPrime::from_element(EisensteinInt(4, 3)),
                                       split_prime(mpz_class(97)), split_prime(mpz_class(139)),
                                       split_prime(mpz_class(499))};
  int compared = 0;
  for (const PrimaryPrime& P : lambdas) {
    for (unsigned long p : modp::primes_up_to(kSplitNormBound)) {
      if (p % 3 != 1) continue;
      PrimaryPrime M = split_prime(mpz_class(p));
      for (const EisensteinInt& mu : {M.lambda, M.lambda.conj()}) {
        if (mu == P.lambda) continue;
        mpz_class b = count_points_split(P, mu, CountMethod::Brute);
        mpz_class j = count_points_split(P, mu, CountMethod::Jacobi);
        o.check(b == j, "lambda " + P.lambda.to_string() + " at " + mu.to_string());
        ++compared;
      }
    }
    for (unsigned long qq : {2ul, 5ul, 11ul, 17ul}) {
      mpz_class b = count_points_inert(P, qq, CountMethod::Brute);
      mpz_class j = count_points_inert(P, qq, CountMethod::Jacobi);
      o.check(b == j, "lambda " + P.lambda.to_string() + " at -" + std::to_string(qq));
      ++compared;
    }
  }
  double elapsed = since(t0);
  o.check(elapsed < kPointCountSeconds, "runtime " + secs(elapsed));
  o.note(std::to_string(compared) + " counts compared over lambda = 1+3ρ, 4+3ρ and over 97, 139, 499, " +
         secs(elapsed));
  return o;
}

Outcome jacobi_identities() {
  Outcome o;
  int n = 0;
  for (unsigned long p : modp::primes_up_to(kSplitNormBound)) {
    if (p % 3 != 1) continue;
    EisensteinInt mu = split_prime(mpz_class(p)).lambda;
    for (const EisensteinInt& m : {mu, mu.conj()}) {
      o.check(jacobi_sum_split(m) == jacobi_sum_split_formula(m), "J at " + m.to_string());
      ++n;
    }
  }
  std::vector<unsigned long> qs;
  for (unsigned long qq : modp::primes_up_to(13))
    if (qq % 3 == 2 && qq != 2) qs.push_back(qq);
  for (unsigned long qq : qs)
    o.check(jacobi_sum_inert(qq) == EisensteinInt(static_cast<long>(qq)), "J_2 at q = " + std::to_string(qq));
  o.note(std::to_string(n) + " split Jacobi sums; J_2 = q for q = 5, 11 (q = 2 has no quadratic character)");
  return o;
}

Outcome tate_oracle() {
  Outcome o;
  int n = 0;
  for (unsigned long ell : admissible(kTateBound)) {
    PrimaryPrime P = split_prime(mpz_class(ell));
    CurveModel E = CurveModel::of(P);
    auto [cl, c3] = local_data_closed_form(P);
    LocalData tl = tate_algorithm(E, PrimeKind::Lambda), t3 = tate_algorithm(E, PrimeKind::OneMinusRho);
    bool ok = tl.symbol() == cl.symbol() && tl.tamagawa == cl.tamagawa && t3.symbol() == c3.symbol() &&
              t3.tamagawa == c3.tamagawa;
    o.check(ok, "ell = " + std::to_string(ell) + ": " + tl.symbol() + "/" + t3.symbol());
    ++n;
  }
  o.note(std::to_string(n) + " admissible primes up to " + std::to_string(kTateBound));
  return o;
}

Outcome deu_correspondence() {
  Outcome o;
  int n = 0;
  size_t ideals = 0;
  for (unsigned long ell : {7ul, 13ul, 31ul, 43ul, 61ul, 79ul, 97ul}) {
    DeuReport r = verify_deu(split_prime(mpz_class(ell)), kDeuNormBound);
    o.check(r.pass(), "ell = " + std::to_string(ell) + ", " + std::to_string(r.failures()) + " mismatches");
    ideals += r.factors.size();
    ++n;
  }
  o.note(std::to_string(n) + " values of ell, " + std::to_string(ideals) + " local factor identities, norm <= " +
         std::to_string(kDeuNormBound));
  return o;
}

Outcome sha_consistency() {
  Outcome o;
  int proper = 0;
  std::set<std::string> values;
  for (const auto& s : g_sweep) {
    ShaPrediction sha = sha_prediction(s.P, s.a);
    mpq_class expect = mpq_class(s.a.alpha.norm()) / sha.tau_one_minus_rho;
    o.check(sha.predicted_sha == expect, "predicted_sha at ell = " + s.a.ell.get_str());
    mpz_class num = sha.predicted_sha.get_num(), den = sha.predicted_sha.get_den();
    for (unsigned long p : {2ul, 3ul}) {
      while (num % p == 0) num /= p;
      while (den % p == 0) den /= p;
    }
    bool square = num > 0 && den == 1 && mpz_perfect_square_p(num.get_mpz_t());
    o.check(square, "square part at ell = " + s.a.ell.get_str());
    MaincoReport m = verify_mainco(s.P, sha);
    o.check(m.pass(), "mainco at ell = " + s.a.ell.get_str());
    if (m.index > 1 && m.pass()) ++proper;
    values.insert(sha.predicted_sha.get_str());
  }
  o.check(!g_sweep.empty(), "no swept primes");
  o.check(proper >= 1, "no prime with proper <2,3>");
  std::string vs;
  for (const auto& v : values) vs += (vs.empty() ? "" : ", ") + v;
  o.note(std::to_string(g_sweep.size()) + " primes; predicted_sha values {" + vs + "}; " + std::to_string(proper) +
         " primes with proper <2,3>");
  return o;
}

Outcome property_suites() {
  Outcome o;
  auto t = shared_table(6 * kLemmaIndex + 2);
  LemmaReport rep = lemma_checkers(kLemmaIndex, *t);
  o.check(rep.all_pass(), std::to_string(rep.failures()) + " lemma failures");
  try {
    DFromG d = d_from_G(kLemmaIndex);
    o.check(d.matches_differential && d.convolution_identity, "D from G");
  } catch (const Error& e) {
    o.check(false, e.what());
  }
  RationalSeries arc = arcsl_series(kArcSlOrder), sl = sl_series(kArcSlOrder);
  RationalSeries id = RationalSeries::monomial(1, 1, kArcSlOrder + 1);
  o.check(sl.compose(arc).agrees_with(id) && arc.compose(sl).agrees_with(id), "arcsl inverse");
  for (long r = -kMultipleBound; r <= kMultipleBound; ++r) {
    if (r == 0) continue;
    o.check(sl_multiple_membership(r, sl_multiple_series(r, kMultipleOrder)), "Sl(" + std::to_string(r) + "u)");
  }
  size_t conj_true = 0;
  for (const auto& c : rep.conjecture) conj_true += c.pass;
  o.note(std::to_string(rep.checks.size()) + " lemma checks to index " + std::to_string(kLemmaIndex) +
         "; sign pattern of D_{6n+2} (reported only) holds for " + std::to_string(conj_true) + "/" +
         std::to_string(rep.conjecture.size()));
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace
}  // namespace ellgauss

int main(int argc, char** argv) {
  using namespace ellgauss;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail N,M,...]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "table regression", table_regression},
      {2, "worked examples", worked_examples},
      {3, "main congruence sweep", congruence_sweep},
      {4, "special values", special_values},
      {5, "point count oracles", point_counts},
      {6, "Jacobi identities", jacobi_identities},
      {7, "Tate oracle", tate_oracle},
      {8, "local factor correspondence", deu_correspondence},
      {9, "Sha consistency", sha_consistency},
      {10, "property suites", property_suites},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
              << secs(since(t0)) << ")\n";
    for (const auto& n : o.notes) std::cout << "      " << n << '\n';
    std::cout.flush();
  }
  std::cout << "summary: " << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!failed.empty()) {
    std::cout << "; failing:";
    for (int f : failed) std::cout << ' ' << f;
  }
  std::cout << '\n';
  if (!expected.empty()) {
    std::cout << "expected failures:";
    for (int f : expected) std::cout << ' ' << f;
    std::cout << (failed == expected ? " (matches)" : " (does not match)") << '\n';
  }
  return failed == expected ? 0 : 1;
}
