#include <gtest/gtest.h>

#include <mpfr.h>

#include <random>

#include "gpade/error.hpp"
#include "gpade/interval.hpp"
#include "gpade/linalg.hpp"
#include "gpade/polynomial.hpp"
#include "oracles.hpp"

using namespace gpade;
namespace t = gpade::testing;

namespace {

Rational lo(const Interval& x) { return t::mpfr_exact(x.lower_ptr()); }
Rational hi(const Interval& x) { return t::mpfr_exact(x.upper_ptr()); }

Rational mpfr_reference(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Rational& arg) {
  mpfr_t x;
  mpfr_init2(x, 4096);
  mpfr_set_q(x, arg.get_mpq_t(), MPFR_RNDN);
  fn(x, x, MPFR_RNDN);
  Rational r = t::mpfr_exact(x);
  mpfr_clear(x);
  return r;
}

std::mt19937_64& rng() {
  static std::mt19937_64 g(99);
  return g;
}

Rational random_rational(long span = 9) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return make_rational(num(rng()), den(rng()));
}

}  // namespace

TEST(Interval, RationalEnclosureIsOutward) {
  for (long d : {3L, 7L, 10L, 49L}) {
    Rational q = make_rational(1, d);
    Interval x(q);
    EXPECT_LE(lo(x), q);
    EXPECT_GE(hi(x), q);
    EXPECT_TRUE(x.contains(q));
    EXPECT_TRUE((x * Interval(d)).contains(Rational(1)));
  }
  EXPECT_EQ(lo(Interval(5L)), 5);
  EXPECT_EQ(hi(Interval(5L)), 5);
}

TEST(Interval, TranscendentalsContainReference) {
  const Rational tol = make_rational(Integer(1), pow(Integer(2), 2000));
  for (long n : {2L, 3L, 10L, 12345L}) {
    Rational ref = mpfr_reference(mpfr_log, Rational(n));
    Interval x = log(Interval(n));
    EXPECT_LE(lo(x), ref + tol);
    EXPECT_GE(hi(x), ref - tol);
    Interval e = exp(Interval(make_rational(n, 7)));
    Rational eref = mpfr_reference(mpfr_exp, make_rational(n, 7));
    EXPECT_LE(lo(e), eref + tol);
    EXPECT_GE(hi(e), eref - tol);
  }
  EXPECT_TRUE(Interval::log2_constant().contains_zero() == false);
  EXPECT_TRUE(certainly_lt(Interval::log2_constant(), Interval(make_rational(6932, 10000))));
  EXPECT_TRUE(certainly_lt(Interval(make_rational(6931, 10000)), Interval::log2_constant()));
}

TEST(Interval, AlgebraicIdentities) {
  Interval two(2L);
  EXPECT_TRUE((sqrt(two) * sqrt(two)).contains(Rational(2)));
  EXPECT_TRUE(pow(root(Interval(27L), 3), 3UL).contains(Rational(27)));
  EXPECT_TRUE(pow(Interval(8L), make_rational(2, 3)).contains(Rational(4)));
  EXPECT_TRUE(exp(log(Interval(make_rational(5, 3)))).contains(make_rational(5, 3)));
  EXPECT_TRUE((Interval(make_rational(1, 3)) - Interval(make_rational(1, 3))).contains_zero());
  EXPECT_THROW(Interval(1L) / Interval::hull(Interval(-1L), Interval(1L)), Error);
}

TEST(Interval, ComparisonsAndFloors) {
  Interval a(make_rational(7, 2));
  EXPECT_EQ(*a.certain_floor(), 3);
  EXPECT_EQ(*a.certain_ceil(), 4);
  EXPECT_EQ(a.floor_lower(), 3);
  EXPECT_EQ(a.ceil_upper(), 4);
  Interval wide = Interval::hull(Interval(2L), Interval(5L));
  EXPECT_FALSE(wide.certain_floor().has_value());
  EXPECT_TRUE(certainly_le(Interval(2L), Interval(2L)));
  EXPECT_FALSE(certainly_lt(Interval(2L), Interval(2L)));
  EXPECT_TRUE(certainly_le(max(Interval(1L), Interval(3L)), Interval(3L)));
  EXPECT_TRUE(abs(Interval(-4L)).contains(Rational(4)));
}

TEST(Interval, RandomArithmeticContainsExactResult) {
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = random_rational(), b = random_rational(), c = random_rational();
    if (c == 0) c = 1;
    Interval r = (Interval(a) + Interval(b)) * Interval(a) / Interval(c) - Interval(b);
    EXPECT_TRUE(r.contains((a + b) * a / c - b));
  }
}

TEST(Polynomial, EvaluationMatchesArithmetic) {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> ca(4), cb(3);
    for (auto& x : ca) x = random_rational();
    for (auto& x : cb) x = random_rational();
    Polynomial pa(ca), pb(cb);
    Rational z = random_rational();
    EXPECT_EQ((pa * pb)(z), pa(z) * pb(z));
    EXPECT_EQ((pa + pb)(z), pa(z) + pb(z));
    EXPECT_EQ((pa - pb)(z), pa(z) - pb(z));
    if (!pb.is_zero()) EXPECT_EQ(divide_exact(pa * pb, pb), pa);
  }
}

TEST(Polynomial, TrimsAndReportsOrder) {
  Polynomial p{0, 0, make_rational(3, 2), 0};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.order(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(Polynomial::monomial(5, 3).coefficient(3), 5);
  EXPECT_THROW(divide_exact(Polynomial{1, 1}, Polynomial{0, 1}), Error);
}

TEST(Linalg, BareissMatchesGaussDeterminant) {
  std::uniform_int_distribution<long> e(-20, 20);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<Integer> a(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
      t::QMatrix q(static_cast<std::size_t>(n), std::vector<t::Q>(static_cast<std::size_t>(n)));
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          long v = (trial % 4 == 0 && r == 1) ? 0 : e(rng());
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
          q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
      }
      EXPECT_EQ(Rational(bareiss_determinant(a)), t::gauss_determinant(q));
    }
  }
}

TEST(Linalg, PolynomialDeterminantsAgree) {
  for (int n = 1; n <= 4; ++n) {
    Matrix<Polynomial> a(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (auto& row : a) {
      for (auto& p : row) p = Polynomial{random_rational(), random_rational(), random_rational()};
    }
    Polynomial b = bareiss_determinant(a);
    EXPECT_EQ(b, cofactor_determinant(a));
    for (long zi = -3; zi <= 3; ++zi) {
      t::QMatrix at(static_cast<std::size_t>(n), std::vector<t::Q>(static_cast<std::size_t>(n)));
      for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) at[r][c] = a[r][c](Rational(zi));
      }
      EXPECT_EQ(b(Rational(zi)), t::gauss_determinant(at));
    }
  }
}

TEST(Linalg, FractionFreeSolveMatchesGaussJordan) {
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Rational> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      std::vector<Rational> b(static_cast<std::size_t>(n));
      for (auto& row : a) {
        for (auto& x : row) x = random_rational();
      }
      for (auto& x : b) x = random_rational();
      std::vector<t::Q> expected;
      if (!t::gauss_jordan_solve(a, b, expected)) {
        EXPECT_THROW(solve_fraction_free(a, b), Error);
        continue;
      }
      EliminationStats stats;
      EXPECT_EQ(solve_fraction_free(a, b, &stats), expected);
      EXPECT_FALSE(stats.zero_pivot_encountered);
    }
  }
}

TEST(Linalg, SingularSystemThrows) {
  Matrix<Rational> a{{1, 2}, {2, 4}};
  EliminationStats stats;
  try {
    solve_fraction_free(a, {1, 1}, &stats);
    FAIL() << "expected SingularSystem";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
  }
  EXPECT_TRUE(stats.zero_pivot_encountered);
}
