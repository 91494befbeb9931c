#include <gtest/gtest.h>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"
#include "gpade/padic.hpp"
#include "oracles.hpp"

using namespace gpade;
namespace t = gpade::testing;

namespace {

GParams half() { return derive_params({Rational(1), make_rational(1, 2)}); }
GParams logarithm() { return derive_params({Rational(1), Rational(1)}); }

Rational partial_sum(const Rational& alpha, const Rational& alpha0, const Rational& beta, int terms) {
  Rational s = 0, power = 1;
  for (int n = 0; n < terms; ++n, power *= beta) s += t::series_coefficient(alpha, alpha0, static_cast<std::uint64_t>(n)) * power;
  return s;
}

// Largest k with a^k <= h * H^(1/2), from a^(2k) <= h^2 H.
int exact_half_log(const Integer& h, const Integer& H, const Integer& a) {
  int k = 0;
  while (pow(a, static_cast<std::uint64_t>(2 * (k + 1))) <= h * h * H) ++k;
  return k;
}

}  // namespace

TEST(PAdicEnclosure, ExactAndApproximateValues) {
  auto e = PAdicEnclosure::exact(3, make_rational(18, 5));
  EXPECT_EQ(e.valuation(), 2);
  EXPECT_TRUE(e.is_exact());
  auto a = PAdicEnclosure::approximate(2, Rational(8), 3);
  EXPECT_TRUE(a.below_precision());
  EXPECT_EQ(a.valuation_offset(), 3);
  auto b = PAdicEnclosure::approximate(2, Rational(12), 10);
  EXPECT_EQ(b.valuation(), 2);
  EXPECT_EQ(b.relative_precision(), 8);
  EXPECT_EQ(b.unit_residue(), 3);
  auto sum = b + PAdicEnclosure::approximate(2, Rational(20), 5);
  EXPECT_EQ(sum.abs_precision(), 5);
  EXPECT_TRUE(sum.below_precision());
  EXPECT_EQ((b * make_rational(1, 4)).valuation(), 0);
}

TEST(EvalPhiPadic, AgreesWithLongPartialSums) {
  GParams gp = half();
  const Rational beta = make_rational(8, 3);
  for (std::int64_t k : {8, 32, 64}) {
    PAdicEnclosure e = eval_phi_padic(gp, 1, beta, 2, k);
    ASSERT_TRUE(e.abs_precision().has_value());
    EXPECT_GE(*e.abs_precision(), k);
    Rational ref = partial_sum(gp.alpha(1), gp.alpha(0), beta, static_cast<int>(4 * k));
    Rational diff = ref - e.center();
    if (diff != 0) {
      EXPECT_GE(t::valuation(diff, 2), k);
    }
  }
  EXPECT_EQ(eval_phi_padic(gp, 1, Rational(0), 2, 10).valuation(), 0);
}

TEST(EvalPhiPadic, RandomAdmissiblePoints) {
  t::ConfigGenerator gen(77);
  int evaluated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    GParams gp = derive_params(gen.next().alphas);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      Integer base = gp.s_lcm() * static_cast<unsigned long>(p * p);
      Rational beta = make_rational(base, Integer(7));
      if (!padic_domain_check(gp, p, beta).admissible) continue;
      for (int j = 1; j <= gp.m(); ++j) {
        PAdicEnclosure e = eval_phi_padic(gp, j, beta, p, 20);
        Rational ref = partial_sum(gp.alpha(j), gp.alpha(0), beta, 120);
        Rational diff = ref - e.center();
        if (diff != 0) EXPECT_GE(t::valuation(diff, p), 20);
        ++evaluated;
      }
    }
  }
  EXPECT_GT(evaluated, 40);
}

TEST(EvalPhiPadic, RejectsPointsOutsideDomain) {
  try {
    eval_phi_padic(half(), 1, make_rational(4, 3), 2, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
}

TEST(LinearForm, HeightsAndCertification) {
  LinearFormInstance f = make_linear_form({5, -4}, make_rational(1, 2), make_rational(1, 20));
  EXPECT_EQ(f.h[0], 5);
  EXPECT_EQ(f.h[1], 4);
  EXPECT_EQ(f.Htilde, 20);
  LinearFormInstance g = make_linear_form({0, 0, 3}, make_rational(1, 2), make_rational(1, 20));
  EXPECT_EQ(g.h[0], 3);
  EXPECT_EQ(g.h[1], 1);
  EXPECT_EQ(g.Htilde, 9);
  EXPECT_THROW(make_linear_form({0, 0}, make_rational(1, 2), make_rational(1, 20)), Error);

  auto v = PAdicEnclosure::approximate(3, Rational(4), 10);
  LinearFormValue lf = linear_form_valuation({v}, {Integer(-1), Integer(1)});
  EXPECT_TRUE(lf.certified_nonzero);
  EXPECT_EQ(lf.valuation, 1);
  EXPECT_EQ(lf.abs_value, make_rational(1, 3));
  LinearFormValue below = linear_form_valuation({v}, {Integer(-4), Integer(1)});
  EXPECT_FALSE(below.certified_nonzero);
  EXPECT_EQ(below.valuation, 10);
}

TEST(BlockDegrees, ExactLogsForHalfTau) {
  for (long l0 = -12; l0 <= 12; l0 += 3) {
    for (long l1 = -40; l1 <= 40; l1 += 7) {
      if (l0 == 0 && l1 == 0) continue;
      LinearFormInstance f = make_linear_form({l0, l1}, make_rational(1, 2), make_rational(1, 20));
      BlockSelection b = select_block_degrees(f, Integer(8));
      EXPECT_EQ(b.raw[0], exact_half_log(f.h[0], f.Htilde, 8)) << l0 << "," << l1;
      EXPECT_EQ(b.raw[1], exact_half_log(f.h[1], f.Htilde, 8)) << l0 << "," << l1;
      EXPECT_EQ(b.clamped, b.raw[1] == 0 || b.raw[0] == 0);
      EXPECT_EQ(b.shape.n(1), std::max(1, b.raw[1]));
      EXPECT_GE(b.shape.n0(), b.shape.n(1));
    }
  }
}

TEST(Theorem5Audit, SyntheticScaleChain) {
  GParams gp = half();
  const std::vector<std::pair<std::vector<Integer>, Integer>> cases = {
      {{1, 1}, 58800}, {{5, -4}, 785400}, {{7, 3}, 630000}};
  for (const auto& [ell, lambda] : cases) {
    Theorem5Report r = theorem5_audit(gp, make_rational(8, 3), 2,
                                      make_linear_form(ell, make_rational(1, 2), make_rational(1, 20)),
                                      ThetaSpec::paper());
    EXPECT_EQ(r.witness_index, 0);
    EXPECT_EQ(r.Lambda, lambda);
    EXPECT_EQ(r.Lambda_valuation, t::valuation(Rational(lambda), 2));
    EXPECT_FALSE(r.hypotheses_hold);
    EXPECT_TRUE(std::any_of(r.hypotheses.begin(), r.hypotheses.end(),
                            [](const Check& c) { return c.verdict == Verdict::Fail; }));
    ASSERT_EQ(r.chain.size(), 3u);
    EXPECT_EQ(r.chain[0].verdict, Verdict::Pass);
    EXPECT_LT(r.remainder_sum.abs_value, pow(Rational(2), -r.Lambda_valuation));
    EXPECT_EQ(r.chain[2].verdict, Verdict::NotApplicable);
    EXPECT_TRUE(r.chain_verified);
  }
}

TEST(Theorem3Constants, HalfInstance) {
  Theorem3Constants c = theorem3_constants(half(), ThetaSpec::paper());
  EXPECT_TRUE(certainly_lt(Interval(make_rational(241579, 10000)), c.log_C));
  EXPECT_TRUE(certainly_lt(c.log_C, Interval(make_rational(241599, 10000))));
  EXPECT_TRUE(c.cross_check);
}

TEST(GlobalProbe, LogarithmAtTwoAndThree) {
  GlobalProbe two = probe_a_global(logarithm(), 2, {0, 1}, 64);
  ASSERT_EQ(two.primes.size(), 1u);
  EXPECT_FALSE(two.certified_nonzero);
  EXPECT_FALSE(two.primes[0].value.certified_nonzero);
  EXPECT_GE(two.primes[0].value.valuation, 64);
  GlobalProbe three = probe_a_global(logarithm(), 3, {0, 1}, 64);
  ASSERT_EQ(three.primes.size(), 1u);
  EXPECT_TRUE(three.certified_nonzero);
  EXPECT_EQ(three.primes[0].value.abs_value, 1);
  GlobalProbe six = probe_a_global(logarithm(), 6, {1, 1}, 32);
  EXPECT_EQ(six.primes.size(), 2u);
}
