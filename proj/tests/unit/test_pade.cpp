#include <gtest/gtest.h>

#include "gpade/error.hpp"
#include "gpade/pade.hpp"
#include "oracles.hpp"

using namespace gpade;
namespace t = gpade::testing;

namespace {

GParams half() { return derive_params({Rational(1), make_rational(1, 2)}); }

std::vector<int> numerator_degrees(const ApproxShape& shape) {
  std::vector<int> out;
  for (int j = 1; j <= shape.m(); ++j) out.push_back(shape.Nj(j));
  return out;
}

}  // namespace

TEST(Pade, HalfInstanceCoefficients) {
  PadeFamily f = build_family(half(), ApproxShape::standard({1}, 1));
  EXPECT_EQ(f.Q(0), (Polynomial{make_rational(-5, 3), 1}));
  EXPECT_EQ(f.Q(1), (Polynomial{make_rational(-7, 5), 1}));
  EXPECT_EQ(f.P(0, 1), (Polynomial{make_rational(-5, 3), make_rational(4, 9)}));
  EXPECT_EQ(f.P(1, 1), (Polynomial{make_rational(-7, 5), make_rational(8, 15), make_rational(4, 75)}));
  EXPECT_EQ(f.c(0, 1, 3), make_rational(-4, 105));
}

TEST(Pade, PhiCoefficientsMatchDirectProducts) {
  t::ConfigGenerator gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto cfg = gen.next();
    GParams gp = derive_params(cfg.alphas);
    for (int j = 1; j <= gp.m(); ++j) {
      auto c = phi_coefficients(gp, j, 15);
      for (std::size_t n = 0; n < c.size(); ++n) {
        EXPECT_EQ(c[n], t::series_coefficient(cfg.alphas[static_cast<std::size_t>(j)], cfg.alphas[0], n));
      }
    }
  }
}

TEST(Pade, ClosedFormMatchesGaussJordanOracle) {
  t::ConfigGenerator gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    auto cfg = gen.next();
    GParams gp = derive_params(cfg.alphas);
    ApproxShape shape = ApproxShape::standard(cfg.n, cfg.n0);
    for (int i = 0; i <= gp.m(); ++i) {
      auto expected = t::order_condition_q(cfg.alphas, cfg.n, numerator_degrees(shape), i);
      EXPECT_EQ(build_q(gp, shape, i), expected) << cfg.describe() << " i=" << i;
      EXPECT_EQ(oracle_solve(gp, shape, i), expected) << cfg.describe() << " i=" << i;
    }
  }
}

TEST(Pade, GenericShapesMatchOracle) {
  GParams gp = derive_params({make_rational(1, 3), make_rational(1, 2), make_rational(3, 4)});
  for (auto [N1, N2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 5}, {6, 2}, {4, 4}}) {
    ApproxShape shape = ApproxShape::generic({1, 2}, {N1, N2});
    for (int i = 0; i <= 2; ++i) {
      auto expected = t::order_condition_q(gp.alphas(), {1, 2}, {N1, N2}, i);
      EXPECT_EQ(build_q(gp, shape, i), expected) << N1 << "," << N2 << " i=" << i;
    }
  }
}

TEST(Pade, NumeratorsAreTruncatedProducts) {
  t::ConfigGenerator gen(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto cfg = gen.next();
    GParams gp = derive_params(cfg.alphas);
    ApproxShape shape = ApproxShape::standard(cfg.n, cfg.n0);
    PadeFamily f = build_family(gp, shape);
    for (int i = 0; i <= gp.m(); ++i) {
      const auto& q = f.q[static_cast<std::size_t>(i)];
      for (int j = 1; j <= gp.m(); ++j) {
        const Rational& aj = cfg.alphas[static_cast<std::size_t>(j)];
        auto p = build_p(gp, shape, q, i, j);
        ASSERT_EQ(static_cast<int>(p.size()), shape.Nij(i, j) + 1);
        for (int mu = 0; mu <= shape.Nij(i, j); ++mu) {
          EXPECT_EQ(p[static_cast<std::size_t>(mu)], t::product_coefficient(q, aj, cfg.alphas[0], mu));
        }
        for (int mu = shape.Nij(i, j) + 1; mu <= shape.Nij(i, j) + shape.n(j); ++mu) {
          EXPECT_EQ(t::product_coefficient(q, aj, cfg.alphas[0], mu), 0) << cfg.describe();
        }
      }
    }
    EXPECT_TRUE(verify_order(f).all_pass) << cfg.describe();
  }
}

TEST(Pade, PerturbedDenominatorBreaksOrder) {
  GParams gp = half();
  ApproxShape shape = ApproxShape::standard({2}, 3);
  PadeFamily f = build_family(gp, shape);
  f.q[1][0] += 1;
  f.series[1][0] = remainder_coeffs(gp, f.q[1], 1, f.truncation);
  OrderReport r = verify_order(f);
  EXPECT_FALSE(r.all_pass);
  EXPECT_TRUE(r.pass[0][0]);
  EXPECT_FALSE(r.pass[1][0]);
}

TEST(Pade, OmegaDeterminantHalfInstance) {
  OmegaResult om = omega_det(build_family(half(), ApproxShape::standard({1}, 1)));
  EXPECT_EQ(om.exponent, 3);
  EXPECT_EQ(om.omega, make_rational(4, 75));
}

TEST(Pade, OmegaDeterminantAtSamplePoints) {
  t::ConfigGenerator gen(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto cfg = gen.next();
    GParams gp = derive_params(cfg.alphas);
    ApproxShape shape = ApproxShape::standard(cfg.n, cfg.n0);
    PadeFamily f = build_family(gp, shape);
    OmegaResult om = omega_det(f);
    int expected = shape.N() + gp.m();
    Rational omega = 1;
    for (int j = 1; j <= gp.m(); ++j) {
      expected += shape.Nj(j);
      auto qj = t::order_condition_q(cfg.alphas, cfg.n, numerator_degrees(shape), j);
      omega *= t::product_coefficient(qj, cfg.alphas[static_cast<std::size_t>(j)], cfg.alphas[0], shape.Nj(j) + 1);
    }
    EXPECT_EQ(om.exponent, expected) << cfg.describe();
    EXPECT_EQ(om.omega, omega) << cfg.describe();
    EXPECT_NE(om.omega, 0);
    for (Rational z : {Rational(1), Rational(-2), make_rational(1, 3)}) {
      t::QMatrix m(static_cast<std::size_t>(gp.m() + 1));
      for (int i = 0; i <= gp.m(); ++i) {
        m[static_cast<std::size_t>(i)].push_back(f.Q(i)(z));
        for (int j = 1; j <= gp.m(); ++j) m[static_cast<std::size_t>(i)].push_back(f.P(i, j)(z));
      }
      EXPECT_EQ(t::gauss_determinant(m), omega * pow(z, expected)) << cfg.describe();
    }
  }
}

TEST(Pade, ShapeValidation) {
  EXPECT_THROW(ApproxShape::standard({}, 1), Error);
  EXPECT_THROW(ApproxShape::standard({0}, 1), Error);
  EXPECT_THROW(ApproxShape::standard({3}, 2), Error);
  EXPECT_THROW(ApproxShape::generic({2, 2}, {2, 4}), Error);
  EXPECT_THROW(ApproxShape::generic({1}, {0}).n0(), Error);
  ApproxShape s = ApproxShape::standard({2, 3}, 4);
  EXPECT_EQ(s.N(), 5);
  EXPECT_EQ(s.Ntilde(), 9);
  EXPECT_EQ(s.Nj(1), 7);
  EXPECT_EQ(s.Nij(2, 2), 7);
  EXPECT_THROW(build_family(half(), s), Error);
  EXPECT_THROW(build_family(half(), ApproxShape::standard({1}, 1), 2), Error);
}
