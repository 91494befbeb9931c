#include "gpade/denom.hpp"

#include <algorithm>
#include <sstream>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"

namespace gpade {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Interval iv(const Integer& z, long prec) { return Interval(z, prec); }
Interval iv(long z, long prec) { return Interval(z, prec); }

Interval eps(const Integer& n, long prec) { return epsilon_n(n, prec).value; }

/// prod over primes p <= x with keep(p) of p^{M_p(x)}.
template <typename Keep>
FactoredInteger prime_power_product_if(const Integer& x, Keep keep) {
  FactoredInteger out;
  if (x < 2) return out;
  const std::uint64_t limit = to_u64(x);
  auto primes = primes_up_to(limit);
  for (std::uint64_t p : *primes) {
    if (p > limit) break;
    if (keep(p)) out *= FactoredInteger::prime_power(p, floor_log(p, x));
  }
  return out;
}

bool divides(std::uint64_t p, const Integer& n) {
  return n % Integer(static_cast<unsigned long>(p)) == 0;
}

void require_standard(const ApproxShape& shape) {
  if (!shape.is_standard()) {
    throw Error(ErrorCode::InvalidArgument, "denominators are defined for standard shapes only");
  }
}

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace

ThetaSpec ThetaSpec::paper(long precision) {
  ThetaSpec t;
  t.mode = Mode::Paper;
  t.theta = Interval::log2_constant(precision) * Interval(8L, precision);
  t.c_theta = 2;
  t.certified = true;
  return t;
}

ThetaSpec ThetaSpec::sharp(long precision) {
  ThetaSpec t;
  t.mode = Mode::Sharp;
  t.theta = Interval(make_rational(63, 50), precision);
  t.c_theta = 2;
  t.certified = true;
  return t;
}

ThetaSpec ThetaSpec::custom(const Rational& theta, std::uint64_t c_theta, long precision) {
  if (theta <= 1) throw Error(ErrorCode::InvalidArgument, "theta must exceed 1");
  ThetaSpec t;
  t.mode = Mode::Custom;
  t.theta = Interval(theta, precision);
  t.c_theta = c_theta;
  t.certified = false;
  return t;
}

ThetaSpec ThetaSpec::parse(std::string_view text, long precision) {
  if (text == "paper") return paper(precision);
  if (text == "sharp") return sharp(precision);
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto body = text.substr(prefix.size());
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "custom theta mode needs 'custom:<theta>,<c>'");
    }
    Rational theta = parse_rational(body.substr(0, comma));
    Integer c = parse_integer(body.substr(comma + 1));
    if (c < 0) throw Error(ErrorCode::ParseError, "c(theta) must be nonnegative");
    return custom(theta, to_u64(c), precision);
  }
  throw Error(ErrorCode::ParseError, "unknown theta mode '" + std::string(text) + "'");
}

std::string ThetaSpec::label() const {
  switch (mode) {
    case Mode::Paper:
      return "paper";
    case Mode::Sharp:
      return "sharp";
    case Mode::Custom:
      break;
  }
  return "custom:" + theta.lower_string(12) + "," + std::to_string(c_theta);
}

BoundConstants bound_constants(const GParams& gp, const ThetaSpec& theta) {
  const long prec = theta.theta.precision();
  const Interval& th = theta.theta;
  const Interval m = iv(gp.m(), prec);
  const Integer& s0 = gp.s(0);
  const Integer& r0 = gp.r(0);

  BoundConstants out{theta, {}};
  out.c[0] = th * (m * iv(gp.R() + gp.S(), prec) + iv(gp.U(), prec));
  out.c[1] = m * th * iv(gp.S(), prec);
  out.c[2] = log(iv(s0 * s0, prec) * eps(s0, prec) * eps(gp.v_lcm(), prec));
  out.c[3] = th * iv(gp.V(), prec) +
             log(iv(gp.d_lcm(), prec) * eps(gp.s_lcm(), prec) / iv(gcd(gp.d_lcm(), s0), prec));
  out.c[4] = th * (iv(2 * (r0 - s0), prec) + m * iv(gp.U(), prec));
  out.c[5] = iv(2, prec) * th * iv(s0, prec) +
             log(iv(gp.d_lcm(), prec) * eps(gp.s_lcm(), prec) / iv(s0, prec));
  out.c[6] = m * th * iv(gp.V(), prec);
  out.c[7] = out.c[2] + out.c[3] + out.c[5] + out.c[6] + iv(3, prec);
  return out;
}

FactoredInteger compute_d1(const GParams& gp, const ApproxShape& shape) {
  require_standard(shape);
  const int N = shape.N();
  const Integer& s0 = gp.s(0);
  FactoredInteger d1 = FactoredInteger::factor(s0).pow(static_cast<std::uint64_t>(2 * N - 1));
  for (std::uint64_t p : prime_divisors(s0)) {
    d1 *= FactoredInteger::prime_power(p, legendre_nu(p, static_cast<std::uint64_t>(N - 1)));
  }
  for (int j = 1; j <= gp.m(); ++j) {
    const auto nj = static_cast<std::uint64_t>(shape.n(j));
    for (std::uint64_t p : prime_divisors(gp.v(j))) {
      d1 *= FactoredInteger::prime_power(p, legendre_nu(p, nj));
    }
    const Integer x = gp.r(j) + (shape.n0() + 1) * gp.s(j);
    const Integer& sj = gp.s(j);
    d1 *= prime_power_product_if(x, [&](std::uint64_t p) { return !divides(p, sj); });
  }
  return d1;
}

FactoredInteger compute_d2(const GParams& gp, const ApproxShape& shape) {
  require_standard(shape);
  const auto nt = static_cast<std::uint64_t>(shape.Ntilde());
  FactoredInteger d2 = FactoredInteger::factor(gp.dtilde()).pow(nt);
  for (std::uint64_t p : prime_divisors(gp.s_lcm())) {
    d2 *= FactoredInteger::prime_power(p, legendre_nu(p, nt));
  }
  const Integer x = gp.U() + gp.V() * static_cast<unsigned long>(nt);
  d2 *= prime_power_product_if(x, [](std::uint64_t) { return true; });
  return d2;
}

DenominatorCert make_certificate(const GParams& gp, const ApproxShape& shape) {
  DenominatorCert cert{compute_d1(gp, shape), compute_d2(gp, shape), {}};
  cert.d = cert.d1 * cert.d2;
  return cert;
}

IntegralityReport verify_integrality(const PadeFamily& family, const DenominatorCert& cert) {
  IntegralityReport report;
  auto fail = [&](const std::string& what) {
    if (report.pass) report.first_violation = what;
    report.pass = false;
  };
  for (int i = 0; i <= family.m(); ++i) {
    const auto& q = family.q[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < q.size(); ++k) {
      ++report.checked;
      Rational scaled = q[k] * Rational(cert.d1.value());
      if (!is_integer(scaled)) {
        fail("D1 * a_{" + std::to_string(i) + "," + std::to_string(k) + "} = " + to_string(scaled));
      }
    }
    for (int j = 1; j <= family.m(); ++j) {
      for (int mu = 0; mu <= family.shape.Nij(i, j); ++mu) {
        ++report.checked;
        Rational scaled = family.c(i, j, mu) * Rational(cert.d.value());
        if (!is_integer(scaled)) {
          fail("D * c_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(mu) +
               "} = " + to_string(scaled));
        }
      }
    }
  }
  return report;
}

void require_integrality(const PadeFamily& family, const DenominatorCert& cert) {
  auto report = verify_integrality(family, cert);
  if (!report.pass) throw Error(ErrorCode::IntegralityViolation, *report.first_violation);
}

std::vector<Check> check_size_bounds(const PadeFamily& family, const DenominatorCert& cert,
                                     const BoundConstants& constants,
                                     const std::vector<Rational>& sample_points) {
  const auto& shape = family.shape;
  require_standard(shape);
  for (const auto& z : sample_points) {
    if (abs(z) < 2) throw Error(ErrorCode::InvalidArgument, "sample points need |z| >= 2");
  }
  const long prec = constants.theta.theta.precision();
  const int N = shape.N();
  const int n0 = shape.n0();
  const int nt = shape.Ntilde();
  const auto c_theta = static_cast<long>(constants.theta.c_theta);
  std::vector<Check> checks;

  if (std::min(n0, N) < c_theta) {
    checks.push_back(not_applicable("D(N) bound", "min(n0, N) < c(theta)"));
  } else {
    Interval rhs = exp(constants(1) + constants(2) * iv(n0, prec) + constants(3) * iv(N, prec) +
                       constants(4) * iv(nt, prec));
    checks.push_back(make_check("D(N) bound", Rational(cert.d.value()), rhs));
  }
  if (N < c_theta) {
    checks.push_back(not_applicable("coefficient and polynomial bounds", "N < c(theta)"));
    return checks;
  }

  const Interval growth = exp(constants(5) + constants(6) * iv(N, prec) + constants(7) * iv(nt, prec));
  const Interval coef_bound = iv(N, prec) * growth;
  for (int i = 0; i <= family.m(); ++i) {
    Rational biggest = 0;
    for (const auto& a : family.q[static_cast<std::size_t>(i)]) biggest = std::max(biggest, abs(a));
    checks.push_back(make_check("|a_" + std::to_string(i) + "k| bound", biggest, coef_bound));
  }
  for (const auto& z : sample_points) {
    const std::string at = " at z=" + to_string(z);
    const Interval az(abs(z), prec);
    for (int i = 0; i <= family.m(); ++i) {
      Interval rhs = iv(2 * N, prec) * growth * pow(az, static_cast<unsigned long>(N));
      checks.push_back(make_check("|Q_" + std::to_string(i) + "| bound" + at,
                                  abs(family.Q(i)(z)), rhs));
      for (int j = 1; j <= family.m(); ++j) {
        Interval prhs = iv(2L * N * (N + 1), prec) * growth *
                        pow(az, static_cast<unsigned long>(nt - shape.n(j) + 1));
        checks.push_back(make_check("|P_" + std::to_string(i) + std::to_string(j) + "| bound" + at,
                                    abs(family.P(i, j)(z)), prhs));
      }
    }
  }
  return checks;
}

Interval ntilde1(const GParams& gp, const BoundConstants& constants, const Rational& beta,
                 std::uint64_t p) {
  const long prec = constants.theta.theta.precision();
  const DomainCheck dom = padic_domain_check(gp, p, beta);
  Interval out = iv(static_cast<long>((gp.m() + 1) * constants.theta.c_theta), prec);
  out = max(out, constants(1) + constants(5));
  Interval third = log(iv(2 * gp.dtilde(), prec));
  const Integer a = abs_int(beta.get_num());
  if (dom.delta_p == 1) third += iv(4, prec) * log(iv(a, prec));
  return max(out, third);
}

ScaledSystem scaled_integers(const PadeFamily& family, const DenominatorCert& cert,
                             const Rational& beta, std::uint64_t p) {
  require_standard(family.shape);
  if (abs(beta) < 2) {
    throw Error(ErrorCode::DomainViolation, "|beta| = |" + to_string(beta) + "| is below 2");
  }
  if (!padic_domain_check(family.params, p, beta).admissible) {
    throw Error(ErrorCode::DomainViolation,
                "beta = " + to_string(beta) + " is outside the " + std::to_string(p) +
                    "-adic domain of convergence");
  }
  ScaledSystem out;
  out.beta = beta;
  out.a = beta.get_num();
  out.b = beta.get_den();
  const Rational scale(cert.d.value() * pow(out.b, static_cast<std::uint64_t>(family.shape.Ntilde())));
  auto to_int = [&](const Rational& x, const std::string& what) {
    Rational v = x * scale;
    if (!is_integer(v)) throw Error(ErrorCode::IntegralityViolation, what + " = " + to_string(v));
    return Integer(v.get_num());
  };
  Matrix<Integer> mat;
  for (int i = 0; i <= family.m(); ++i) {
    out.Q.push_back(to_int(family.Q(i)(beta), "scaled Q_" + std::to_string(i)));
    std::vector<Integer> prow;
    for (int j = 1; j <= family.m(); ++j) {
      prow.push_back(to_int(family.P(i, j)(beta),
                            "scaled P_" + std::to_string(i) + std::to_string(j)));
    }
    std::vector<Integer> row{out.Q.back()};
    row.insert(row.end(), prow.begin(), prow.end());
    mat.push_back(std::move(row));
    out.P.push_back(std::move(prow));
  }
  out.determinant = bareiss_determinant(std::move(mat));
  if (out.determinant == 0) {
    throw Error(ErrorCode::SingularSystem, "scaled integer matrix is singular");
  }
  return out;
}

std::vector<Check> check_scaled_bounds(const PadeFamily& family, const ScaledSystem& scaled,
                                       const BoundConstants& constants, std::uint64_t p) {
  const auto& shape = family.shape;
  require_standard(shape);
  const long prec = constants.theta.theta.precision();
  const Interval n1 = ntilde1(family.params, constants, scaled.beta, p);
  const int nt = shape.Ntilde();
  const int n0 = shape.n0();
  const auto c_theta = static_cast<int>(constants.theta.c_theta);
  std::vector<Check> checks;
  if (!certainly_le(n1, iv(nt, prec))) {
    checks.push_back(not_applicable("scaled Q/P bounds",
                                    "Ntilde = " + std::to_string(nt) + " is not above Ntilde_1 <= " +
                                        n1.upper_string(8)));
    return checks;
  }
  if (std::min(n0, shape.N()) < c_theta) {
    checks.push_back(not_applicable("scaled Q/P bounds", "min(n0, N) < c(theta)"));
    return checks;
  }
  const Interval base = exp(constants(2) * iv(n0, prec) + constants(8) * iv(nt, prec));
  const Interval a(abs_int(scaled.a), prec);
  const Interval b(scaled.b, prec);
  for (int i = 0; i <= family.m(); ++i) {
    Interval rhs = base * pow(b, static_cast<unsigned long>(n0)) *
                   pow(a, static_cast<unsigned long>(nt - n0));
    checks.push_back(make_check("|scaled Q_" + std::to_string(i) + "| bound",
                                Rational(abs_int(scaled.Q[static_cast<std::size_t>(i)])), rhs));
    for (int j = 1; j <= family.m(); ++j) {
      const int nj = shape.n(j);
      Interval prhs = base * pow(b, static_cast<unsigned long>(nj)) *
                      pow(a, static_cast<unsigned long>(nt - nj + 1));
      checks.push_back(make_check(
          "|scaled P_" + std::to_string(i) + std::to_string(j) + "| bound",
          Rational(abs_int(scaled.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)])),
          prhs));
    }
  }
  return checks;
}

RemainderPadicBound remainder_padic_bound(const GParams& gp, const ApproxShape& shape,
                                          const Rational& beta, std::uint64_t p,
                                          const BoundConstants& constants) {
  require_standard(shape);
  const DomainCheck dom = padic_domain_check(gp, p, beta);
  if (!dom.admissible) {
    throw Error(ErrorCode::DomainViolation,
                "beta = " + to_string(beta) + " is outside the " + std::to_string(p) +
                    "-adic domain of convergence");
  }
  const long prec = constants.theta.theta.precision();
  const int nt = shape.Ntilde();
  const Integer a = abs_int(beta.get_num());
  const Rational a_p = padic_abs(Rational(a), p);

  RemainderPadicBound out;
  out.delta_p = dom.delta_p;
  out.valuation_bound = Rational(2 * gp.dtilde()) * pow(a_p, static_cast<std::int64_t>(nt + 1));
  if (dom.delta_p == 1) out.valuation_bound *= Rational(pow(a, 4)) * nt;
  out.scaled_log_bound = iv(2 * nt, prec) + iv(nt + 1, prec) * log(Interval(a_p, prec));
  out.ntilde1 = ntilde1(gp, constants, beta, p);
  out.scaled_applicable = certainly_le(out.ntilde1, iv(nt, prec));
  return out;
}

std::vector<RemainderValuation> check_remainder_valuations(const PadeFamily& family,
                                                           const DenominatorCert& cert,
                                                           const Rational& beta, std::uint64_t p,
                                                           const BoundConstants& constants,
                                                           int truncation) {
  if (truncation > family.truncation) {
    throw Error(ErrorCode::InvalidArgument, "truncation exceeds the family's series order");
  }
  const auto bound = remainder_padic_bound(family.params, family.shape, beta, p, constants);
  const long prec = constants.theta.theta.precision();
  const std::int64_t vd = p_valuation(cert.d.value(), p);
  const std::int64_t vb = p_valuation(beta, p);
  const Interval log_p = log(iv(static_cast<long>(p), prec));
  const Rational pr(static_cast<unsigned long>(p));

  std::vector<RemainderValuation> out;
  for (int i = 0; i <= family.m(); ++i) {
    for (int j = 1; j <= family.m(); ++j) {
      RemainderValuation rv;
      rv.i = i;
      rv.j = j;
      Rational sum = 0;
      Rational power = pow(beta, static_cast<std::int64_t>(family.shape.Nij(i, j) + 1));
      std::optional<std::int64_t> min_term;
      for (int mu = family.shape.Nij(i, j) + 1; mu <= truncation; ++mu, power *= beta) {
        const Rational& c = family.c(i, j, mu);
        if (c == 0) continue;
        std::int64_t v = vd + p_valuation(c, p) + vb * mu;
        min_term = min_term ? std::min(*min_term, v) : v;
        sum += c * power;
      }
      if (sum != 0) rv.truncated_valuation = vd + p_valuation(sum, p);
      if (min_term) {
        rv.min_term_valuation = *min_term;
        // |term|_p <= p^{-min_term}; compare that upper bound against both bounds.
        rv.direct = pow(pr, -*min_term) <= bound.valuation_bound ? Verdict::Pass : Verdict::Fail;
        if (bound.scaled_applicable) {
          rv.scaled = compare(iv(-*min_term, prec) * log_p, bound.scaled_log_bound, false);
        }
      } else {
        rv.direct = Verdict::Pass;
        if (bound.scaled_applicable) rv.scaled = Verdict::Pass;
      }
      out.push_back(rv);
    }
  }
  return out;
}

}  // namespace gpade
