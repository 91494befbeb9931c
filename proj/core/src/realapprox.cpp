#include "gpade/realapprox.hpp"

#include <algorithm>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"
#include "gpade/pade.hpp"

namespace gpade {

namespace {

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

void require_m1(const GParams& gp) {
  if (gp.m() != 1) throw Error(ErrorCode::InvalidArgument, "restricted approximation needs m = 1");
}

/// Distance from x to the interval [lo, hi]; zero inside.
Rational distance(const Rational& x, const Rational& lo, const Rational& hi) {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return 0;
}

Rational nearest_integer(const Rational& x) {
  Rational shifted = x + make_rational(1, 2);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return Rational(fl);
}

/// B <= b^t for rational t = P/Q, i.e. B^Q <= b^P.
bool within_power(const Integer& B, const Integer& b, const Rational& t) {
  return pow(B, to_u64(Integer(t.get_den()))) <= pow(b, to_u64(Integer(t.get_num())));
}

}  // namespace

RealEnclosure eval_phi_real(const GParams& gp, const Rational& z, int terms, int j) {
  if (j < 1 || j > gp.m()) throw Error(ErrorCode::InvalidArgument, "series index out of range");
  if (terms < 0) throw Error(ErrorCode::InvalidArgument, "negative term count");
  const Rational az = abs(z);
  if (az >= 1) throw Error(ErrorCode::InvalidArgument, "real evaluation needs |z| < 1");
  if (z == 0) return {1, 1};
  const Rational& alpha = gp.alpha(j);
  const Rational sum_alpha = alpha + gp.alpha(0);
  Rational term = 1;
  Rational partial = 0;
  for (int mu = 0; mu <= terms; ++mu) {
    partial += term;
    term *= z * (alpha + mu) / (sum_alpha + mu);
  }
  // Coefficients lie in (0, 1] and decrease, so the tail has the sign of z^{T+1}.
  const Rational tail = pow(az, static_cast<std::int64_t>(terms) + 1) / (1 - az);
  const bool negative_tail = z < 0 && (terms % 2 == 0);
  if (negative_tail) return {partial - tail, partial};
  return {partial, partial + tail};
}

std::uint64_t c_vartheta(const Rational& vartheta) {
  if (vartheta <= 1) throw Error(ErrorCode::InvalidArgument, "vartheta must exceed 1");
  const Integer p = vartheta.get_num();
  const Integer q = vartheta.get_den();
  // g(n) = (n+1)^2 / vartheta^n has ratio g(n+1)/g(n) = ((n+2)/(n+1))^2 / vartheta, which
  // decreases in n. Once g(n) <= 1 and that ratio is <= 1, every later n also satisfies it.
  std::int64_t last_fail = -1;
  Integer pn = 1;
  Integer qn = 1;
  for (std::uint64_t n = 0;; ++n) {
    const Integer n1(static_cast<unsigned long>(n + 1));
    const Integer n2(static_cast<unsigned long>(n + 2));
    const bool holds = n1 * n1 * qn <= pn;
    if (!holds) {
      last_fail = static_cast<std::int64_t>(n);
    } else if (n2 * n2 * q <= n1 * n1 * p) {
      return static_cast<std::uint64_t>(last_fail + 1);
    }
    pn *= p;
    qn *= q;
    if (n > 1000000) throw Error(ErrorCode::InvalidArgument, "vartheta too close to 1");
  }
}

Theorem4Constants theorem4_constants(const GParams& gp, const ThetaSpec& theta,
                                     const Rational& vartheta) {
  require_m1(gp);
  const long prec = theta.theta.precision();
  const Interval& th = theta.theta;
  auto iv = [prec](const Integer& z) { return Interval(z, prec); };
  const Interval eps_s = epsilon_n(gp.s_lcm(), prec).value;
  const Interval vt(vartheta, prec);

  Theorem4Constants out{Interval::zero(prec), "general", Interval::zero(prec), std::nullopt, std::nullopt,
                        Interval::zero(prec), theta.c_theta, c_vartheta(vartheta), vartheta, theta};
  const Integer& s0 = gp.s(0);
  const Integer& s = gp.s_lcm();
  const Integer& v = gp.v_lcm();
  out.a1_general = root(vt * iv(gp.d_lcm() * s0) * epsilon_n(s0, prec).value *
                            epsilon_n(v, prec).value,
                        4) *
                   iv(gp.dtilde()) * eps_s *
                   exp(th * (Interval(make_rational(1, 2), prec) * iv(s0) + iv(s) + iv(2 * v)));
  out.a1 = out.a1_general;
  const Interval e3s = exp(Interval(3L, prec) * th * iv(s));
  if (is_integer(gp.alpha(0))) {
    out.a1_integer_alpha0 = root(Interval(4L, prec) * vt, 4) * e3s;
    out.a1 = *out.a1_integer_alpha0;
    out.a1_variant = "integer-alpha0";
  }
  if (gp.alpha(0) == 1) {
    out.a1_alpha0_one = root(Interval(2L, prec), 4) * e3s;
    out.a1 = *out.a1_alpha0_one;
    out.a1_variant = "alpha0-one";
  }
  out.a2 = Interval(4L, prec) * iv(gp.dtilde()) * eps_s *
           exp(th * iv(gp.r(1) + s + 2 * gp.r(0) + 2 * gp.u(1)));
  return out;
}

Integer smallest_admissible_b(const Theorem4Constants& constants, const Integer& a) {
  const long prec = constants.a1.precision();
  const Interval target = pow(constants.a1 * Interval(abs_int(a), prec), 6UL);
  Integer b = target.ceil_upper();
  // ceil_upper may overshoot by one when the enclosure straddles an integer.
  while (b > 1 && certainly_le(target, Interval(Integer(b - 1), prec))) b -= 1;
  return b;
}

Interval compute_M0(const RestrictedInstance& instance, const Theorem4Constants& constants) {
  const long prec = constants.a1.precision();
  if (instance.a == 0 || instance.b < 1 || instance.B < 1 || instance.t < 0) {
    throw Error(ErrorCode::InvalidArgument, "need a != 0, b >= 1, B >= 1, t >= 0");
  }
  const Interval a1a = constants.a1 * Interval(abs_int(instance.a), prec);
  if (!certainly_le(pow(a1a, 6UL), Interval(instance.b, prec))) {
    throw Error(ErrorCode::HypothesisFailure,
                "b = " + to_string(instance.b) + " is not certified >= (a1 |a|)^6 ~ " +
                    pow(a1a, 6UL).upper_string(12));
  }
  if (!within_power(instance.B, instance.b, instance.t)) {
    throw Error(ErrorCode::HypothesisFailure, "B exceeds b^t");
  }
  const Interval log_b = log(Interval(instance.b, prec));
  const Interval ratio = log_b / log(a1a);
  const Interval half(make_rational(1, 2), prec);
  const Interval e1 = Interval(6L, prec) * log(constants.a2 * Interval(abs_int(instance.a), prec)) / log_b + half;
  const Interval e2((4 * instance.t + 1) / 2, prec);
  const Interval e3 = ratio / Interval(4L, prec);
  const auto cmax = std::max<std::uint64_t>({constants.c_theta, constants.c_vartheta, 4});
  const Interval e4(make_rational(static_cast<long>(1 + cmax), 2), prec);
  return ratio * max(max(e1, e2), max(e3, e4));
}

Theorem4Report theorem4_audit(const GParams& gp, const RestrictedInstance& instance,
                              const Theorem4Constants& constants) {
  require_m1(gp);
  const long prec = constants.a1.precision();
  const Interval M0 = compute_M0(instance, constants);
  const Interval M_iv(instance.M, prec);
  if (!certainly_le(M0, M_iv)) {
    throw Error(ErrorCode::HypothesisFailure,
                "M = " + std::to_string(instance.M) + " is not certified >= M0 ~ " + M0.upper_string(12));
  }
  const Interval& th = constants.theta.theta;
  auto iv = [prec](const Integer& z) { return Interval(z, prec); };
  const Integer abs_a = abs_int(instance.a);
  const Integer& b = instance.b;
  const Integer& B = instance.B;
  const auto M = static_cast<std::uint64_t>(instance.M);
  const Interval log_a = log(iv(abs_a));
  const Interval log_b = log(iv(b));
  const Interval log_B = log(iv(B));
  const Interval log_a1 = log(constants.a1);

  Theorem4Report r{constants.a1, constants.a2, Interval::zero(prec), M0, Interval::zero(prec), 0, 0, 0,
                   {}, {}, 0, -1, 0, {}, {}, false};
  r.x = log_b / (Interval(2L, prec) * log(constants.a1 * iv(abs_a)));
  auto h = (M_iv / (r.x - Interval(2L, prec))).certain_floor();
  if (!h) throw Error(ErrorCode::PrecisionInsufficient, "cannot certify floor(M / (x - 2))");
  r.h = h->get_si();
  if (r.h < 1) throw Error(ErrorCode::HypothesisFailure, "h = floor(M / (x - 2)) is zero");
  auto n0 = (r.x * Interval(r.h, prec)).certain_floor();
  if (!n0) throw Error(ErrorCode::PrecisionInsufficient, "cannot certify floor(x h)");
  r.n1 = static_cast<int>(r.h);
  r.n0 = static_cast<int>(n0->get_si());
  const int nt = r.n0 + r.n1;
  const Interval hv(r.h, prec);

  r.checks.push_back(make_check("h >= 12 log(a2|a|)/log b",
                                Interval(12L, prec) * log(constants.a2 * iv(abs_a)) / log_b, hv));
  r.checks.push_back(make_check("h >= 4t", 4 * instance.t, Rational(r.h)));
  r.checks.push_back(make_check("h >= M/(x-1)", M_iv / (r.x - Interval(1L, prec)), hv));
  const auto cmax = std::max<std::uint64_t>({constants.c_theta, constants.c_vartheta, 4});
  r.checks.push_back(make_check("h >= max{c(theta), c(vartheta), 4}",
                                Rational(static_cast<long>(cmax)), Rational(r.h)));
  r.checks.push_back(make_check("n0 - n1 + 1 >= M", Rational(static_cast<long>(M)),
                                Rational(r.n0 - r.n1 + 1)));

  const ApproxShape shape = ApproxShape::standard({r.n1}, r.n0);
  const PadeFamily family = build_family(gp, shape);

  // Denominators for the m = 1 family.
  r.D1 = compute_d1(gp, shape);
  const Integer& s = gp.s_lcm();
  const Integer& v = gp.v_lcm();
  r.D2 = FactoredInteger::factor(gp.dtilde()).pow(static_cast<std::uint64_t>(r.n0 + 1));
  for (std::uint64_t p : prime_divisors(s)) {
    r.D2 *= FactoredInteger::prime_power(p, legendre_nu(p, static_cast<std::uint64_t>(r.n0 + 1)));
  }
  {
    const Integer x = gp.u(1) + v * r.n0;
    const std::uint64_t limit = to_u64(x);
    auto primes = primes_up_to(limit);
    for (std::uint64_t p : *primes) {
      if (p > limit) break;
      if (v % Integer(static_cast<unsigned long>(p)) != 0) {
        r.D2 *= FactoredInteger::prime_power(p, floor_log(p, x));
      }
    }
  }
  const Integer D1 = r.D1.value();
  const Integer D12 = D1 * r.D2.value();
  bool integral = true;
  for (int i = 0; i <= 1; ++i) {
    for (const auto& c : family.q[static_cast<std::size_t>(i)]) integral = integral && is_integer(c * Rational(D1));
    const Polynomial P = family.P(i, 1);
    for (const auto& c : P.coefficients()) integral = integral && is_integer(c * Rational(D12));
  }
  r.checks.push_back(make_check("D1 Q_i, D1 D2 P_i integral", Rational(integral ? 0 : 1), Rational(0)));

  // Coefficient bound E1.
  const Integer& s0 = gp.s(0);
  const Interval eps_s = epsilon_n(s, prec).value;
  r.E1 = Interval(static_cast<long>(r.n1), prec) * exp(th * iv(2 * gp.r(0) + gp.u(1))) *
         pow(iv(gp.d_lcm()) * eps_s / iv(s0), static_cast<unsigned long>(r.n1)) *
         exp(th * (iv(2 * s0 * r.n1) + iv(v * nt)));
  Rational biggest = 0;
  for (const auto& q : family.q) {
    for (const auto& c : q) biggest = std::max(biggest, abs(c));
  }
  r.checks.push_back(make_check("|a_ik| <= E1", biggest, r.E1));

  const Rational z = make_rational(instance.a, b);
  const Rational az = abs(z);
  const Interval one_minus(1 - az, prec);

  // Series length: width |z|^{T+1}/(1-|z|) must stay below a tenth of the final bound.
  const Interval log_rhs = -(log_B + M_iv * log_b +
                             M_iv * (Interval(18L, prec) * log_a1 + Interval(17L, prec) * log_a));
  const Interval log_inv_z = log_b - log_a;
  const Interval needed = (log(Interval(10L, prec)) - log_rhs - log(one_minus)) / log_inv_z;
  int terms = static_cast<int>(needed.ceil_upper().get_si()) + 2;
  for (;; terms += 8) {
    r.phi = eval_phi_real(gp, z, terms);
    const Interval width(r.phi.width(), prec);
    if (certainly_lt(width * Interval(10L, prec), exp(log_rhs))) break;
    if (terms > 100000) throw Error(ErrorCode::PrecisionInsufficient, "series enclosure too wide");
  }
  r.series_terms = terms + 1;

  const Rational scale(B * pow(b, M));
  if (instance.candidate_n) {
    r.n = *instance.candidate_n;
  } else {
    r.n = nearest_integer(scale * (r.phi.lower + r.phi.upper) / 2).get_num();
  }

  for (int i = 0; i <= 1; ++i) {
    const Rational qz = family.Q(i)(z);
    const Rational pz = family.P(i, 1)(z);
    if (Rational(r.n) * qz - scale * pz != 0) {
      r.witness_index = i;
      break;
    }
  }
  if (r.witness_index < 0) throw Error(ErrorCode::SingularSystem, "both W_i vanish");
  const int i = r.witness_index;
  const Rational Qz = family.Q(i)(z);
  const Rational Pz = family.P(i, 1)(z);

  // W_i = D2 b^{n0-n1+1} U_i - B b^M V_i with b^M | W_i.
  const Rational Ui = Rational(D1 * pow(b, static_cast<std::uint64_t>(r.n1))) * Qz;
  const Rational Vi = Rational(D12 * pow(b, static_cast<std::uint64_t>(r.n0 + 1))) * Pz;
  bool w_ok = is_integer(Ui) && is_integer(Vi);
  if (w_ok) {
    const Integer W = r.D2.value() * pow(b, static_cast<std::uint64_t>(r.n0 - r.n1 + 1)) *
                          Integer(Ui.get_num()) -
                      B * pow(b, M) * Integer(Vi.get_num());
    w_ok = W != 0 && W % pow(b, M) == 0;
  }
  r.checks.push_back(make_check("W_i nonzero integer divisible by b^M", Rational(w_ok ? 0 : 1), Rational(0)));

  const Interval Qz_abs(abs(Qz), prec);
  r.checks.push_back(make_check("|Q_i(a/b)| <= E1/(1-|z|)", abs(Qz), r.E1 / one_minus));
  const Rational R_lo = Qz * (Qz >= 0 ? r.phi.lower : r.phi.upper) - Pz;
  const Rational R_hi = Qz * (Qz >= 0 ? r.phi.upper : r.phi.lower) - Pz;
  const Rational R_abs_max = std::max(abs(R_lo), abs(R_hi));
  const Interval az_iv(az, prec);
  r.checks.push_back(make_check("|R_i(a/b)| <= (n1+1) E1 |z|^(Ntilde+1)/(1-|z|)", R_abs_max,
                                Interval(static_cast<long>(r.n1 + 1), prec) * r.E1 *
                                    pow(az_iv, static_cast<unsigned long>(nt + 1)) / one_minus));

  // Size condition tying n1 to log b.
  const Interval log_size =
      log(constants.a2 * iv(abs_a)) +
      Interval(static_cast<long>(r.n1), prec) *
          log(Interval(constants.vartheta, prec) * iv(gp.d_lcm() * s0) *
              epsilon_n(s0, prec).value * epsilon_n(v, prec).value) +
      Interval(static_cast<long>(r.n0), prec) * log(iv(gp.dtilde())) +
      Interval(static_cast<long>(nt), prec) * log(eps_s) +
      th * iv(2 * s0 * r.n1 + (s + v) * r.n0 + v * nt) + Interval(static_cast<long>(nt), prec) * log_a +
      log_B - Interval(static_cast<long>(r.n1), prec) * log_b;
  r.checks.push_back(make_check("size condition: log LHS <= 0", log_size, Rational(0)));

  const Rational gap_lower = Rational(pow(b, M)) / Rational(2 * D12 * pow(b, static_cast<std::uint64_t>(r.n0 + 1)));
  r.checks.push_back(make_check("B |R_i(a/b)| <= 1/(2 D1 D2 b^(n0+1))", Rational(B) * R_abs_max,
                                Rational(1) / Rational(2 * D12 * pow(b, static_cast<std::uint64_t>(r.n0 + 1)))));

  const Rational dist_scaled = distance(Rational(r.n), scale * r.phi.lower, scale * r.phi.upper);
  r.checks.push_back(make_check("b^M/(2 D1 D2 b^(n0+1)) <= |Q_i| |n - B b^M phi|", gap_lower,
                                abs(Qz) * dist_scaled));

  const Interval chain_rhs = exp(M_iv * (Interval(18L, prec) * log_a1 + Interval(17L, prec) * log_a + log_b));
  r.checks.push_back(make_check("2 D1 D2 b^(n0+1) |Q_i| <= (a1^18 |a|^17)^M b^M",
                                Rational(2 * D12 * pow(b, static_cast<std::uint64_t>(r.n0 + 1))) * abs(Qz),
                                chain_rhs));

  const Interval rhs_final = exp(log_rhs);
  r.checks.push_back(make_check("enclosure width < RHS/10", Interval(r.phi.width(), prec) * Interval(10L, prec),
                                rhs_final, true));
  const Rational dist = distance(Rational(r.n) / scale, r.phi.lower, r.phi.upper);
  r.checks.push_back(make_check("final: RHS <= |phi(a/b) - n/(B b^M)|", rhs_final, dist));

  r.final_verdict = all_pass(r.checks);
  return r;
}

Check epsilon_corollary(const Theorem4Report& report, const RestrictedInstance& instance,
                        const Rational& eps) {
  const long prec = report.a1.precision();
  const std::string name = "epsilon corollary: |phi - n/(B b^M)| >= 1/(B b^(M(1+eps)))";
  if (eps <= 0 || eps >= 1) return not_applicable(name, "eps must lie in (0, 1)");
  const Interval log_b = log(Interval(instance.b, prec));
  const Interval lhs = Interval(eps, prec) * log_b;
  const Interval rhs = Interval(18L, prec) * log(report.a1) +
                       Interval(17L, prec) * log(Interval(abs_int(instance.a), prec));
  if (!certainly_lt(rhs, lhs)) return not_applicable(name, "b^eps > a1^18 |a|^17 not certified");
  const Rational scale(instance.B * pow(instance.b, static_cast<std::uint64_t>(instance.M)));
  const Rational dist = distance(Rational(report.n) / scale, report.phi.lower, report.phi.upper);
  const Interval bound = exp(-(log(Interval(instance.B, prec)) +
                               Interval(instance.M, prec) * Interval(1 + eps, prec) * log_b));
  return make_check(name, bound, dist);
}

}  // namespace gpade
