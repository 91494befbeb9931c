#include <gtest/gtest.h>

#include "gpade/error.hpp"
#include "gpade/realapprox.hpp"
#include "oracles.hpp"

using namespace gpade;
namespace t = gpade::testing;

namespace {

GParams logarithm() { return derive_params({Rational(1), Rational(1)}); }

const Rational& tiny() {
  static const Rational tol = make_rational(Integer(1), pow(Integer(2), 1000));
  return tol;
}

}  // namespace

TEST(EvalPhiReal, LogarithmClosedForm) {
  GParams gp = logarithm();
  for (Rational z : {make_rational(1, 2), make_rational(-1, 2), make_rational(1, 3), make_rational(-7, 9),
                     make_rational(9, 10)}) {
    RealEnclosure e = eval_phi_real(gp, z, 120);
    Rational ref = t::log_series_value(z, 4 * 1024);
    EXPECT_LE(e.lower, ref + tiny()) << to_string(z);
    EXPECT_GE(e.upper, ref - tiny()) << to_string(z);
  }
  RealEnclosure half = eval_phi_real(gp, make_rational(1, 2), 60);
  EXPECT_LE(half.width(), pow(Rational(2), -50));
}

TEST(EvalPhiReal, PositivePointsGiveLowerPartialSum) {
  t::ConfigGenerator gen(90);
  for (int trial = 0; trial < 30; ++trial) {
    auto cfg = gen.next_single();
    GParams gp = derive_params(cfg.alphas);
    Rational z = make_rational(trial % 5 + 1, 7);
    RealEnclosure e = eval_phi_real(gp, z, 40);
    Rational s = 0, power = 1;
    for (int n = 0; n <= 40; ++n, power *= z) s += t::series_coefficient(cfg.alphas[1], cfg.alphas[0], static_cast<std::uint64_t>(n)) * power;
    EXPECT_EQ(e.lower, s);
    EXPECT_EQ(e.width(), pow(z, 41) / (1 - z));
    RealEnclosure fine = eval_phi_real(gp, z, 160);
    EXPECT_LE(e.lower, fine.upper);
    EXPECT_LE(fine.lower, e.upper);
    EXPECT_LT(fine.width(), e.width());
  }
}

TEST(EvalPhiReal, RejectsPointsOutsideDisc) {
  EXPECT_THROW(eval_phi_real(logarithm(), Rational(1), 10), Error);
  EXPECT_THROW(eval_phi_real(logarithm(), make_rational(-3, 2), 10), Error);
}

TEST(CVartheta, MatchesBruteForce) {
  for (Rational v : {Rational(2), Rational(3), make_rational(3, 2), make_rational(5, 4), make_rational(11, 10),
                     make_rational(101, 100)}) {
    EXPECT_EQ(c_vartheta(v), t::brute_force_c_vartheta(v, 3000)) << to_string(v);
  }
  EXPECT_EQ(c_vartheta(Rational(2)), 6u);
  EXPECT_THROW(c_vartheta(Rational(1)), Error);
}

TEST(Theorem4Constants, VariantSelection) {
  Theorem4Constants one = theorem4_constants(logarithm(), ThetaSpec::sharp(), Rational(2));
  EXPECT_EQ(one.a1_variant, "alpha0-one");
  ASSERT_TRUE(one.a1_alpha0_one && one.a1_integer_alpha0);
  EXPECT_TRUE(certainly_le(*one.a1_alpha0_one, *one.a1_integer_alpha0));
  EXPECT_TRUE(certainly_le(*one.a1_integer_alpha0, one.a1_general));
  EXPECT_TRUE(certainly_lt(Interval(make_rational(52106, 1000)), one.a1));
  EXPECT_TRUE(certainly_lt(one.a1, Interval(make_rational(52107, 1000))));
  EXPECT_EQ(one.c_vartheta, 6u);

  Theorem4Constants integer = theorem4_constants(derive_params({Rational(2), make_rational(1, 2)}),
                                                 ThetaSpec::sharp(), Rational(2));
  EXPECT_EQ(integer.a1_variant, "integer-alpha0");
  Theorem4Constants general = theorem4_constants(derive_params({make_rational(1, 2), make_rational(1, 3)}),
                                                 ThetaSpec::sharp(), Rational(2));
  EXPECT_EQ(general.a1_variant, "general");
  EXPECT_FALSE(general.a1_integer_alpha0.has_value());
  EXPECT_THROW(theorem4_constants(derive_params({Rational(1), make_rational(1, 2), make_rational(1, 3)}),
                                  ThetaSpec::sharp(), Rational(2)),
               Error);
}

TEST(Theorem4, SmallestAdmissibleB) {
  Theorem4Constants k = theorem4_constants(logarithm(), ThetaSpec::sharp(), Rational(2));
  for (long a : {1L, -1L, 2L}) {
    Integer b = smallest_admissible_b(k, Integer(a));
    Interval threshold = pow(k.a1 * Interval(std::labs(a)), 6UL);
    EXPECT_TRUE(certainly_le(threshold, Interval(b)));
    EXPECT_TRUE(certainly_lt(Interval(Integer(b - 1)), threshold));
  }
}

TEST(Theorem4, HypothesisFailures) {
  Theorem4Constants k = theorem4_constants(logarithm(), ThetaSpec::sharp(), Rational(2));
  RestrictedInstance inst;
  inst.a = 1;
  inst.b = 1000;
  try {
    compute_M0(inst, k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisFailure);
  }
  inst.b = smallest_admissible_b(k, 1);
  inst.B = 5;
  inst.t = 0;
  EXPECT_THROW(compute_M0(inst, k), Error);
  inst.B = 1;
  inst.M = 5;
  try {
    theorem4_audit(logarithm(), inst, k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisFailure);
  }
}

TEST(Theorem4, AuditAndCorollary) {
  GParams gp = logarithm();
  Theorem4Constants k = theorem4_constants(gp, ThetaSpec::sharp(), Rational(2));
  RestrictedInstance inst;
  inst.a = 1;
  inst.b = smallest_admissible_b(k, 1);
  Interval M0 = compute_M0(inst, k);
  inst.M = M0.ceil_upper().get_si();
  Theorem4Report r = theorem4_audit(gp, inst, k);
  for (const auto& c : r.checks) EXPECT_EQ(c.verdict, Verdict::Pass) << c.name;
  EXPECT_TRUE(r.final_verdict);
  EXPECT_TRUE(r.phi.contains(r.phi.lower));

  inst.candidate_n = r.n + 1;
  Theorem4Report shifted = theorem4_audit(gp, inst, k);
  EXPECT_TRUE(shifted.final_verdict);
  EXPECT_EQ(shifted.n, r.n + 1);

  EXPECT_EQ(epsilon_corollary(r, inst, make_rational(1, 10)).verdict, Verdict::NotApplicable);
  EXPECT_EQ(epsilon_corollary(r, inst, Rational(4)).verdict, Verdict::NotApplicable);

  // b^(9/10) > a1^18 once b > a1^20.
  RestrictedInstance big;
  big.a = 1;
  big.b = pow(k.a1, 20UL).ceil_upper() + 1;
  big.M = compute_M0(big, k).ceil_upper().get_si();
  Theorem4Report rb = theorem4_audit(gp, big, k);
  EXPECT_TRUE(rb.final_verdict);
  EXPECT_EQ(epsilon_corollary(rb, big, make_rational(9, 10)).verdict, Verdict::Pass);
}
