#include <gtest/gtest.h>

#include "ellgauss/curves.hpp"
#include "ellgauss/error.hpp"
#include "ellgauss/fq2.hpp"
#include "ellgauss/modarith.hpp"

namespace ellgauss {
namespace {

std::vector<PrimaryPrime> sample_lambdas() {
  std::vector<PrimaryPrime> v;
  for (unsigned long ell : {7ul, 13ul, 97ul, 139ul, 499ul}) v.push_back(split_prime(mpz_class(ell)));
  return v;
}

// y^2 + L y = x^3 counted point by point on the minimal model.
unsigned long naive_count_split(const PrimaryPrime& P, const EisensteinInt& mu) {
  PrimaryPrime M = PrimaryPrime::from_element(mu);
  unsigned long p = M.ell_ui();
  unsigned long L = modp::reduce(residue_iso(P.lambda, M), p);
  unsigned long n = 1;
  for (unsigned long x = 0; x < p; ++x) {
    unsigned long x3 = modp::mul(x, modp::mul(x, x, p), p);
    for (unsigned long y = 0; y < p; ++y)
      n += modp::add(modp::mul(y, y, p), modp::mul(L, y, p), p) == x3;
  }
  return n;
}

unsigned long naive_count_inert(const PrimaryPrime& P, unsigned long q) {
  Fq2Field F(q);
  Fq2 L{modp::reduce(P.lambda.a(), q), modp::reduce(P.lambda.b(), q)};
  unsigned long n = 1;
  for (unsigned long i = 0; i < F.size(); ++i) {
    Fq2 x = F.from_index(i);
    Fq2 x3 = F.mul(x, F.mul(x, x));
    for (unsigned long j = 0; j < F.size(); ++j) {
      Fq2 y = F.from_index(j);
      n += F.equal(F.add(F.mul(y, y), F.mul(L, y)), x3);
    }
  }
  return n;
}

TEST(Curves, ModelInvariants) {
  for (const PrimaryPrime& P : sample_lambdas()) {
    CurveModel E = CurveModel::of(P);
    EisensteinInt lam4 = P.lambda.pow(4);
    EXPECT_EQ(E.discriminant(), EisensteinInt(-27) * lam4);
    EXPECT_EQ(E.w.c4(), EisensteinInt(0));
    EXPECT_EQ(valuation(E.discriminant(), EisensteinInt(1, -1)), 6);
    EXPECT_EQ(valuation(E.discriminant(), P.lambda), 4);
    EisensteinInt rest = *E.discriminant().divide_exact(EisensteinInt(1, -1).pow(6) * lam4);
    EXPECT_TRUE(rest.is_unit());
  }
}

TEST(Curves, CoordinateChangePreservesDiscriminant) {
  Weierstrass w{0, 0, EisensteinInt(4, 3), 0, 0};
  Weierstrass t = w.transformed(EisensteinInt(2, 1), EisensteinInt(-1, 1), EisensteinInt(3, -2));
  EXPECT_EQ(t.discriminant(), w.discriminant());
  EXPECT_EQ(t.c4(), w.c4());
  EXPECT_EQ(t.transformed(0, 0, 0), t);
}

TEST(Curves, BruteEqualsJacobiAtSplitPrimes) {
  for (const PrimaryPrime& P : sample_lambdas()) {
    for (unsigned long p : modp::primes_up_to(200)) {
      if (p % 3 != 1) continue;
      PrimaryPrime M = split_prime(mpz_class(p));
      for (const EisensteinInt& mu : {M.lambda, M.lambda.conj()}) {
        if (mu == P.lambda) continue;
        mpz_class b = count_points_split(P, mu, CountMethod::Brute);
        mpz_class j = count_points_split(P, mu, CountMethod::Jacobi);
        EXPECT_EQ(b, j) << P.ell << " " << mu.to_string();
        EXPECT_EQ(b, naive_count_split(P, mu));
      }
    }
  }
}

TEST(Curves, BruteEqualsJacobiAtInertPrimes) {
  int one_mod_two = 0;
  for (const PrimaryPrime& P : sample_lambdas()) {
    for (unsigned long q : {2ul, 5ul, 11ul, 17ul}) {
      mpz_class b = count_points_inert(P, q, CountMethod::Brute);
      EXPECT_EQ(b, count_points_inert(P, q, CountMethod::Jacobi)) << P.ell << " " << q;
      EXPECT_EQ(b, naive_count_inert(P, q));
    }
    // For lambda = 1 mod 2 the reduction at 2 is y^2 + y = x^3 over F_4.
    if (mpz_odd_p(P.lambda.a().get_mpz_t()) && mpz_even_p(P.lambda.b().get_mpz_t())) {
      EXPECT_EQ(count_points_inert(P, 2, CountMethod::Brute), 9) << P.ell;
      ++one_mod_two;
    }
    mpz_class n5 = count_points_inert(P, 5, CountMethod::Brute);
    EXPECT_TRUE(n5 == 36 || n5 == 21) << n5;
  }
  EXPECT_GT(one_mod_two, 0);
}

TEST(Curves, BadPrimesRejected) {
  PrimaryPrime P = split_prime(mpz_class(13));
  EXPECT_THROW(count_points_split(P, P.lambda, CountMethod::Brute), Error);
  EXPECT_THROW(count_points_inert(P, 7, CountMethod::Brute), Error);
}

TEST(Curves, JacobiSumIdentities) {
  for (unsigned long p : modp::primes_up_to(200)) {
    if (p % 3 != 1) continue;
    EisensteinInt mu = split_prime(mpz_class(p)).lambda;
    for (const EisensteinInt& m : {mu, mu.conj()}) {
      EisensteinInt J = jacobi_sum_split(m);
      EXPECT_EQ(J, jacobi_sum_split_formula(m)) << m.to_string();
      EXPECT_EQ(J.norm(), p);
    }
  }
  for (unsigned long q : {5ul, 11ul}) EXPECT_EQ(jacobi_sum_inert(q), EisensteinInt(static_cast<long>(q)));
  EXPECT_THROW(jacobi_sum_inert(2), Error);
}

TEST(Curves, TateAgreesWithClosedForm) {
  for (unsigned long ell : modp::primes_up_to(500)) {
    if (ell % 3 != 1 || ell % 9 == 1) continue;
    PrimaryPrime P = split_prime(mpz_class(ell));
    CurveModel E = CurveModel::of(P);
    auto [cl, c3] = local_data_closed_form(P);
    LocalData tl = tate_algorithm(E, PrimeKind::Lambda), t3 = tate_algorithm(E, PrimeKind::OneMinusRho);
    EXPECT_EQ(tl.symbol(), cl.symbol()) << ell;
    EXPECT_EQ(tl.tamagawa, cl.tamagawa) << ell;
    EXPECT_EQ(tl.disc_valuation, cl.disc_valuation);
    EXPECT_EQ(t3.symbol(), c3.symbol()) << ell;
    EXPECT_EQ(t3.tamagawa, c3.tamagawa) << ell;
    EXPECT_EQ(t3.disc_valuation, c3.disc_valuation);
  }
}

TEST(Curves, TateStepTwoModelAtSeven) {
  LocalData d = tate_algorithm(CurveModel::of(split_prime(mpz_class(7))), PrimeKind::OneMinusRho);
  ASSERT_TRUE(d.step2_model.has_value());
  Weierstrass expect{0, -3, EisensteinInt(3, 9), 3, EisensteinInt(15, 6)};
  EXPECT_EQ(*d.step2_model, expect) << d.step2_model->to_string();
  EXPECT_EQ(d.step2_model->discriminant(), CurveModel::of(split_prime(mpz_class(7))).discriminant());
}

TEST(Curves, TateStarFamily) {
  for (const EisensteinInt& pi : {EisensteinInt(1, 3), EisensteinInt(1, -1), EisensteinInt(4, 3)}) {
    Weierstrass w{0, pi, 0, pi.pow(4), 0};
    LocalData d = tate_algorithm(w, pi);
    EXPECT_EQ(d.kodaira, "In*") << pi.to_string();
    EXPECT_EQ(d.n, d.disc_valuation - 6);
    EXPECT_EQ(d.symbol(), "I4*");
    EXPECT_EQ(d.tamagawa, 4);
    EXPECT_EQ(d.disc_valuation, 10);
  }
}

// Rational curves at lambda = 1 + 3 rho, whose residue field is F_7.
TEST(Curves, TateOnRationalCurvesAtSeven) {
  const EisensteinInt pi(1, 3);
  struct Case {
    Weierstrass w;
    const char* symbol;
    int tamagawa;
  };
  std::vector<Case> cases = {
      {{0, 0, 0, 0, 7}, "II", 1},
      {{0, 0, 0, 0, 49}, "IV", 3},
      {{0, 0, 0, 7, 0}, "III", 2},
      {{0, 0, 0, 49, 0}, "I0*", 2},
      {{0, 0, 0, -49, 0}, "I0*", 4},
      {{0, 0, 0, 0, 343}, "I0*", 4},
      {{1, 0, 0, 0, 7}, "I1", 1},
      {{1, 0, 0, 0, 49}, "I2", 2},
      {{0, 0, 0, 0, 1}, "I0", 1},
  };
  for (const auto& c : cases) {
    LocalData d = tate_algorithm(c.w, pi);
    EXPECT_EQ(d.symbol(), c.symbol) << c.w.to_string();
    EXPECT_EQ(d.tamagawa, c.tamagawa) << c.w.to_string();
  }
}

TEST(Curves, Valuation) {
  EisensteinInt pi(1, -1);
  EXPECT_EQ(valuation(EisensteinInt(3), pi), 2);
  EXPECT_EQ(valuation(EisensteinInt(27), pi), 6);
  EXPECT_EQ(valuation(EisensteinInt(2), pi), 0);
  EXPECT_EQ(valuation(EisensteinInt(7 * 7 * 13), EisensteinInt(1, 3)), 2);
}

TEST(Curves, TorsionIsExactlyThree) {
  for (unsigned long ell : {7ul, 13ul, 31ul, 43ul, 97ul, 139ul, 499ul}) {
    PrimaryPrime P = split_prime(mpz_class(ell));
    TorsionReport t = torsion(P);
    EXPECT_TRUE(t.three_torsion_verified);
    EXPECT_TRUE(t.two_torsion_trivial);
    EXPECT_EQ(t.reduction_bound, 3);
    EXPECT_EQ(t.order, 3);
    ASSERT_EQ(t.points.size(), 3u);
    EisensteinRational B = EisensteinRational(P.lambda * P.lambda) * EisensteinRational(mpq_class(1, 4));
    const auto& T = t.points[1];
    ASSERT_TRUE(T.has_value());
    EXPECT_EQ(T->y * T->y, T->x * T->x * T->x + B);
    auto T2 = ec_add(T, T, B);
    EXPECT_EQ(T2, t.points[2]);
    EXPECT_FALSE(ec_add(T2, T, B).has_value());
  }
}

TEST(Curves, GroupLawAssociativeOnRationalPoints) {
  EisensteinRational B(mpq_class(-2));
  std::optional<AffinePoint> P{AffinePoint{EisensteinRational(mpq_class(3)), EisensteinRational(mpq_class(5))}};
  auto P2 = ec_add(P, P, B), P3 = ec_add(P2, P, B);
  ASSERT_TRUE(P2 && P3);
  EXPECT_EQ(ec_add(P, P2, B), ec_add(P2, P, B));
  EXPECT_EQ(ec_add(P2, P2, B), ec_add(P3, P, B));
  for (const auto& Q : {P2, P3}) EXPECT_EQ(Q->y * Q->y, Q->x * Q->x * Q->x + B);
}

}  // namespace
}  // namespace ellgauss
