#include <gtest/gtest.h>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"
#include "gpade/params.hpp"
#include "oracles.hpp"

using namespace gpade;
namespace t = gpade::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(DeriveParams, HalfInstance) {
  GParams gp = derive_params({Rational(1), make_rational(1, 2)});
  EXPECT_EQ(gp.m(), 1);
  EXPECT_EQ(gp.r(0), 1);
  EXPECT_EQ(gp.s(0), 1);
  EXPECT_EQ(gp.r(1), 1);
  EXPECT_EQ(gp.s(1), 2);
  EXPECT_EQ(gp.u(1), 3);
  EXPECT_EQ(gp.v(1), 2);
  EXPECT_EQ(gp.d(1), 1);
  EXPECT_EQ(gp.s_lcm(), 2);
  EXPECT_EQ(gp.dtilde(), 1);
  EXPECT_EQ(gp.U(), 3);
  EXPECT_EQ(gp.V(), 2);
}

TEST(DeriveParams, InvariantsOnRandomConfigs) {
  t::ConfigGenerator gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto cfg = gen.next();
    GParams gp = derive_params(cfg.alphas);
    Integer s = 1, v = 1, d = 1;
    for (int j = 1; j <= gp.m(); ++j) {
      EXPECT_EQ(make_rational(gp.r(j), gp.s(j)), cfg.alphas[static_cast<std::size_t>(j)]);
      EXPECT_EQ(make_rational(gp.u(j), gp.v(j)), cfg.alphas[static_cast<std::size_t>(j)] + cfg.alphas[0]);
      EXPECT_EQ(gp.d(j) * gp.v(j), gp.s(0) * gp.s(j));
      s = lcm(s, gp.s(j));
      v = lcm(v, gp.v(j));
      d = lcm(d, gp.d(j));
    }
    EXPECT_EQ(gp.s_lcm(), s);
    EXPECT_EQ(gp.v_lcm(), v);
    EXPECT_EQ(gp.d_lcm(), d);
    EXPECT_EQ(gp.dtilde() * gcd(d, gp.s(0)), d);
  }
}

TEST(DeriveParams, RejectsBadInput) {
  EXPECT_EQ(code_of([] { derive_params({Rational(1)}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { derive_params({Rational(0), Rational(1)}); }), ErrorCode::NonPositiveAlpha);
  EXPECT_EQ(code_of([] { derive_params({Rational(1), make_rational(-1, 2)}); }), ErrorCode::NonPositiveAlpha);
  try {
    derive_params({Rational(1), make_rational(1, 3), make_rational(1, 2), make_rational(5, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IntegerDifference);
    ASSERT_TRUE(e.indices().has_value());
    EXPECT_EQ(*e.indices(), std::make_pair(2, 3));
  }
}

TEST(DomainCheck, ValuationThreshold) {
  GParams gp = derive_params({Rational(1), make_rational(1, 2)});
  DomainCheck c = padic_domain_check(gp, 2, make_rational(8, 3));
  EXPECT_TRUE(c.admissible);
  EXPECT_EQ(c.delta_p, 1);
  EXPECT_EQ(c.delta_2p, 1);
  EXPECT_FALSE(padic_domain_check(gp, 2, make_rational(4, 3)).admissible);
  DomainCheck c3 = padic_domain_check(gp, 3, Rational(3));
  EXPECT_TRUE(c3.admissible);
  EXPECT_EQ(c3.delta_p, 0);
  EXPECT_FALSE(padic_domain_check(gp, 3, make_rational(1, 3)).admissible);
  EXPECT_THROW(padic_domain_check(gp, 3, Rational(0)), Error);
}

TEST(DomainCheck, MatchesDefinitionOnGrid) {
  t::ConfigGenerator gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    GParams gp = derive_params(gen.next().alphas);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      for (long a = 1; a <= 40; ++a) {
        Rational beta = make_rational(a, 7);
        Rational lhs = padic_abs(beta, p);
        Rational rhs = padic_abs(Rational(gp.s_lcm()), p);
        bool two = p == 2 && gp.s_lcm() % 2 == 0;
        if (two) rhs /= 2;
        EXPECT_EQ(padic_domain_check(gp, p, beta).admissible, lhs < rhs);
      }
    }
  }
}

TEST(ParamFile, ParsesWithComments) {
  auto alphas = parse_param_text("# header\nm = 2\n\nalpha0 = 1   # trailing\nalpha2 = 2/3\nalpha1 = 1/2\n");
  ASSERT_EQ(alphas.size(), 3u);
  EXPECT_EQ(alphas[0], 1);
  EXPECT_EQ(alphas[1], make_rational(1, 2));
  EXPECT_EQ(alphas[2], make_rational(2, 3));
}

TEST(ParamFile, ReportsLineNumbers) {
  try {
    parse_param_text("m = 1\nalpha0 = 1\nalpha1 = 0.5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_param_text("alpha0 = 1\nalpha1 = 2\n"), Error);
  EXPECT_THROW(parse_param_text("m = 1\nalpha0 = 1\n"), Error);
  EXPECT_THROW(parse_param_text("m = 1\nalpha0 = 1\nalpha0 = 2\nalpha1 = 1\n"), Error);
  EXPECT_THROW(parse_param_text("m = 1\nalpha0 = 1\nalpha1 = 1\nbeta = 2\n"), Error);
  EXPECT_THROW(read_param_file("/nonexistent/params.txt"), Error);
}
