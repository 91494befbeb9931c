#include "gpade/padic.hpp"

#include <algorithm>
#include <limits>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"

namespace gpade {

namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kExactResidueDigits = 64;

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational p_power(std::uint64_t p, std::int64_t e) {
  return pow(Rational(static_cast<unsigned long>(p)), e);
}

std::string domain_message(const Rational& beta, std::uint64_t p) {
  return "beta = " + to_string(beta) + " is outside the " + std::to_string(p) +
         "-adic domain of convergence";
}

// Largest t >= 0 with a^{tQ} <= h^Q H^P, i.e. floor(log(h H^tau) / log a) for tau = P/Q.
int floor_log_ratio(const Integer& a, const Integer& h, const Integer& H, const Rational& tau) {
  const auto q = to_u64(Integer(tau.get_den()));
  const auto pnum = to_u64(Integer(tau.get_num()));
  const Integer target = pow(h, q) * pow(H, pnum);
  const Integer step = pow(a, q);
  Integer acc = step;
  int t = 0;
  while (acc <= target) {
    acc *= step;
    ++t;
  }
  return t;
}

}  // namespace

PAdicEnclosure::PAdicEnclosure(std::uint64_t p, Rational center,
                               std::optional<std::int64_t> abs_precision)
    : p_(p), center_(std::move(center)), abs_precision_(abs_precision) {}

PAdicEnclosure PAdicEnclosure::exact(std::uint64_t p, Rational value) {
  return PAdicEnclosure(p, std::move(value), std::nullopt);
}

PAdicEnclosure PAdicEnclosure::approximate(std::uint64_t p, Rational center,
                                           std::int64_t abs_precision) {
  return PAdicEnclosure(p, std::move(center), abs_precision);
}

std::optional<std::int64_t> PAdicEnclosure::valuation() const {
  if (center_ == 0) return std::nullopt;
  const std::int64_t v = p_valuation(center_, p_);
  if (abs_precision_ && v >= *abs_precision_) return std::nullopt;
  return v;
}

std::int64_t PAdicEnclosure::valuation_offset() const {
  if (auto v = valuation()) return *v;
  return abs_precision_.value_or(kInfinite);
}

std::int64_t PAdicEnclosure::relative_precision() const {
  auto v = valuation();
  if (!v) return 0;
  return abs_precision_ ? *abs_precision_ - *v : kInfinite;
}

Integer PAdicEnclosure::unit_residue() const {
  auto v = valuation();
  if (!v) return 0;
  const std::int64_t digits = std::min(relative_precision(), kExactResidueDigits);
  const Integer modulus = pow(Integer(static_cast<unsigned long>(p_)), static_cast<std::uint64_t>(digits));
  const Rational unit = center_ / p_power(p_, *v);
  Integer inv;
  const Integer den(unit.get_den());
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer out = Integer(unit.get_num()) * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

PAdicEnclosure& PAdicEnclosure::operator+=(const PAdicEnclosure& rhs) {
  if (rhs.p_ != p_) throw Error(ErrorCode::InvalidArgument, "p-adic enclosures for different primes");
  center_ += rhs.center_;
  if (rhs.abs_precision_) {
    abs_precision_ = abs_precision_ ? std::min(*abs_precision_, *rhs.abs_precision_) : rhs.abs_precision_;
  }
  return *this;
}

PAdicEnclosure& PAdicEnclosure::operator*=(const Rational& c) {
  if (c == 0) {
    center_ = 0;
    abs_precision_.reset();
    return *this;
  }
  center_ *= c;
  if (abs_precision_) *abs_precision_ += p_valuation(c, p_);
  return *this;
}

PAdicEnclosure eval_phi_padic(const GParams& gp, int j, const Rational& beta, std::uint64_t p,
                              std::int64_t k) {
  if (j < 1 || j > gp.m()) throw Error(ErrorCode::InvalidArgument, "series index out of range");
  if (beta == 0) return PAdicEnclosure::exact(p, 1);
  if (!padic_domain_check(gp, p, beta).admissible) {
    throw Error(ErrorCode::DomainViolation, domain_message(beta, p));
  }
  // Term mu has valuation >= f(mu) = mu w - delta (mu - 1)/(p - 1) - log_p(u + v mu), where
  // w = v_p(beta) - v_p(d_j / (d_j, s_0)), delta = [p | s_j] and the log term is present only
  // for p not dividing v_j. f is convex, so once f'(T + 1) >= 0 the tail beyond T is bounded
  // below by f(T + 1).
  const Integer pz(static_cast<unsigned long>(p));
  const Integer dtj = gp.d(j) / gcd(gp.d(j), gp.s(0));
  const std::int64_t w = p_valuation(beta, p) - p_valuation(dtj, p);
  const bool delta = gp.s(j) % pz == 0;
  const bool log_term = gp.v(j) % pz != 0;
  const Rational rho = Rational(w) - (delta ? make_rational(1, static_cast<long>(p - 1)) : Rational(0));
  const long prec = kDefaultPrecision;
  const Interval log_p = log(Interval(static_cast<long>(p), prec));

  auto tail_bound = [&](std::int64_t mu) -> std::optional<std::int64_t> {
    const Integer x = gp.u(j) + gp.v(j) * static_cast<long>(mu);
    Interval f(Rational(w) * mu, prec);
    if (delta) f -= Interval(make_rational(static_cast<long>(mu - 1), static_cast<long>(p - 1)), prec);
    if (log_term) {
      // f'(mu) >= 0  <=>  x rho ln p >= v
      Interval slope = Interval(x, prec) * Interval(rho, prec) * log_p;
      if (!certainly_le(Interval(gp.v(j), prec), slope)) return std::nullopt;
      f -= log(Interval(x, prec)) / log_p;
    }
    return static_cast<std::int64_t>(f.floor_lower().get_si());
  };

  const Rational& alpha = gp.alpha(j);
  const Rational sum_alpha = alpha + gp.alpha(0);
  Rational term = 1;
  Rational partial = 0;
  for (std::int64_t mu = 0;; ++mu) {
    partial += term;
    if (auto bound = tail_bound(mu + 1); bound && *bound >= k) {
      return PAdicEnclosure::approximate(p, partial, *bound);
    }
    term *= beta * (alpha + mu) / (sum_alpha + mu);
    if (mu > 64 * (k + 64) + 100000) {
      throw Error(ErrorCode::PrecisionInsufficient, "p-adic series did not reach precision");
    }
  }
}

LinearFormValue linear_form_valuation(const std::vector<PAdicEnclosure>& values,
                                      const std::vector<Integer>& ell) {
  if (values.empty() || ell.size() != values.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "need m values and m + 1 coefficients");
  }
  const std::uint64_t p = values.front().p();
  PAdicEnclosure L = PAdicEnclosure::exact(p, Rational(ell[0]));
  for (std::size_t j = 0; j < values.size(); ++j) L += values[j] * Rational(ell[j + 1]);
  LinearFormValue out;
  if (auto v = L.valuation()) {
    out.certified_nonzero = true;
    out.valuation = *v;
  } else {
    out.valuation = L.valuation_offset();
  }
  out.abs_value = out.valuation == kInfinite ? Rational(0) : p_power(p, -out.valuation);
  return out;
}

LinearFormInstance make_linear_form(std::vector<Integer> ell, const Rational& tau,
                                    const Rational& delta) {
  if (ell.size() < 2) throw Error(ErrorCode::InvalidArgument, "need ell_0 and at least one ell_j");
  if (std::all_of(ell.begin(), ell.end(), [](const Integer& x) { return x == 0; })) {
    throw Error(ErrorCode::InvalidArgument, "ell must be nonzero");
  }
  if (tau <= 0) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  if (delta < 0) throw Error(ErrorCode::InvalidArgument, "delta must be nonnegative");
  LinearFormInstance out{std::move(ell), {}, 1, tau, delta};
  Integer h0 = 0;
  for (const auto& x : out.ell) h0 = std::max(h0, abs_int(x));
  out.h.push_back(h0);
  for (std::size_t j = 1; j < out.ell.size(); ++j) {
    out.h.push_back(std::max(Integer(1), abs_int(out.ell[j])));
  }
  for (const auto& h : out.h) out.Htilde *= h;
  return out;
}

BlockSelection select_block_degrees(const LinearFormInstance& instance, const Integer& a) {
  const Integer abs_a = abs_int(a);
  if (abs_a < 2) throw Error(ErrorCode::InvalidArgument, "block degrees need |a| >= 2");
  BlockSelection out;
  std::vector<int> clamped;
  for (const auto& h : instance.h) {
    int n = floor_log_ratio(abs_a, h, instance.Htilde, instance.tau);
    out.raw.push_back(n);
    if (n < 1) out.clamped = true;
    clamped.push_back(std::max(n, 1));
  }
  const int n0 = clamped.front();
  out.shape = ApproxShape::standard(std::vector<int>(clamped.begin() + 1, clamped.end()), n0);

  const auto q = to_u64(Integer(instance.tau.get_den()));
  const auto pn = to_u64(Integer(instance.tau.get_num()));
  const auto m1 = static_cast<std::uint64_t>(instance.h.size());  // m + 1
  const auto nt = static_cast<std::uint64_t>(out.shape.Ntilde());
  out.ntilde_bound = pow(abs_a, nt * q) <= pow(instance.Htilde, q + m1 * pn);
  out.n0_bound = pow(abs_a, static_cast<std::uint64_t>(n0) * q) <= pow(instance.Htilde, q + pn);
  return out;
}

Theorem5Report theorem5_audit(const GParams& gp, const Rational& beta, std::uint64_t p,
                              const LinearFormInstance& instance, const ThetaSpec& theta,
                              const Theorem5Options& options) {
  const int m = gp.m();
  if (static_cast<int>(instance.ell.size()) != m + 1) {
    throw Error(ErrorCode::InvalidArgument, "ell must have m + 1 entries");
  }
  if (abs(beta) < 2) throw Error(ErrorCode::DomainViolation, "|beta| must be at least 2");
  const DomainCheck dom = padic_domain_check(gp, p, beta);
  if (!dom.admissible) throw Error(ErrorCode::DomainViolation, domain_message(beta, p));

  const long prec = theta.theta.precision();
  Theorem5Report r{beta, p, instance, theta.label(), theta.certified, {}, false,
                   bound_constants(gp, theta), Interval::zero(prec), Interval::zero(prec), Interval::zero(prec),
                   {}, false, Interval::zero(prec), {}, -1, 0, 0, {}, {}, {}, false, {}};
  const auto& c = r.constants;
  const Integer a = abs_int(beta.get_num());
  const Integer& b = beta.get_den();
  const Interval log_a = log(Interval(a, prec));
  const Interval log_b = log(Interval(b, prec));
  const Interval log_p = log(Interval(static_cast<long>(p), prec));
  const Rational& tau = instance.tau;
  const Rational& delta = instance.delta;
  const Interval tau_iv(tau, prec);
  const Rational inv_tau = 1 / tau;
  const Interval m1(static_cast<long>(m + 1), prec);

  r.hypotheses.push_back(make_check("4 delta (1 + (m+1) tau) < tau",
                                    4 * delta * (1 + (m + 1) * tau), tau, true));
  r.hypotheses.push_back(make_check("gcd(a, b) = 1", Rational(gcd(a, b)), Rational(1)));
  const Rational a_p = padic_abs(Rational(a), p);
  const Rational s_p = padic_abs(Rational(gp.s_lcm()), p);
  r.hypotheses.push_back(make_check("|a|_p <= 2^-delta(2,p) |s|_p", a_p,
                                    s_p / Rational(dom.delta_2p == 1 ? 2 : 1)));
  r.hypotheses.push_back(make_check("log|a|_p <= (delta - 1) log|a|",
                                    Interval(-p_valuation(Rational(a), p), prec) * log_p,
                                    Interval(delta - 1, prec) * log_a));
  const Interval log_K =
      Interval(2L, prec) * (c(2) * Interval(1 + inv_tau, prec) +
                            (c(8) + Interval(2L, prec)) * Interval(m + 1 + inv_tau, prec));
  r.hypotheses.push_back(make_check("2(1+1/tau) log b + log K < log|a|",
                                    Interval(2 * (1 + inv_tau), prec) * log_b + log_K, log_a, true));

  r.ntilde1 = ntilde1(gp, c, beta, p);
  const Interval one_mt = Interval(1 + (m + 1) * tau, prec);
  r.log_H0 = max((r.ntilde1 + m1) * log_a / one_mt, Interval(8L, prec) * log_a / tau_iv);
  r.log_Htilde = log(Interval(instance.Htilde, prec));
  r.hypotheses.push_back(make_check("log H0 <= log Htilde", r.log_H0, r.log_Htilde));
  r.hypotheses_hold = all_pass(r.hypotheses);

  r.epsilon = (m + 1) * tau;
  r.delta_matches_specialization = delta == r.epsilon / (8 * (m + 1));
  r.log_ctilde = Interval(r.epsilon, prec) * log_K;

  r.blocks = select_block_degrees(instance, a);
  const ApproxShape& shape = r.blocks.shape;
  const PadeFamily family = build_family(gp, shape);
  const DenominatorCert cert = make_certificate(gp, shape);
  const ScaledSystem scaled = scaled_integers(family, cert, beta, p);

  for (int i = 0; i <= m; ++i) {
    Integer lambda = scaled.Q[static_cast<std::size_t>(i)] * instance.ell[0];
    for (int j = 1; j <= m; ++j) {
      lambda += scaled.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] *
                instance.ell[static_cast<std::size_t>(j)];
    }
    if (lambda != 0) {
      r.witness_index = i;
      r.Lambda = lambda;
      break;
    }
  }
  if (r.witness_index < 0) {
    throw Error(ErrorCode::SingularSystem, "every Lambda_i vanishes for a nonzero ell");
  }
  r.Lambda_valuation = p_valuation(r.Lambda, p);
  const Integer& Qi = scaled.Q[static_cast<std::size_t>(r.witness_index)];
  const std::int64_t vQ = Qi == 0 ? 0 : p_valuation(Qi, p);

  std::int64_t k = std::max<std::int64_t>(r.Lambda_valuation - vQ + 2, 8);
  for (;; k *= 2) {
    if (k > options.max_precision) {
      throw Error(ErrorCode::PrecisionInsufficient,
                  "needs more than " + std::to_string(options.max_precision) + " p-adic digits");
    }
    std::vector<PAdicEnclosure> values;
    for (int j = 1; j <= m; ++j) values.push_back(eval_phi_padic(gp, j, beta, p, k));
    r.L = linear_form_valuation(values, instance.ell);

    PAdicEnclosure L = PAdicEnclosure::exact(p, Rational(instance.ell[0]));
    for (int j = 1; j <= m; ++j) {
      L += values[static_cast<std::size_t>(j - 1)] * Rational(instance.ell[static_cast<std::size_t>(j)]);
    }
    PAdicEnclosure rem = L * Rational(Qi) + PAdicEnclosure::exact(p, Rational(-r.Lambda));
    if (rem.is_exact() || rem.valuation() || rem.valuation_offset() > r.Lambda_valuation) {
      if (auto v = rem.valuation()) {
        r.remainder_sum = {true, *v, p_power(p, -*v)};
      } else {
        const std::int64_t off = rem.valuation_offset();
        r.remainder_sum = {false, off, off == kInfinite ? Rational(0) : p_power(p, -off)};
      }
      break;
    }
  }

  const Rational lambda_abs = p_power(p, -r.Lambda_valuation);
  Check rem_check = make_check("|sum R_ij ell_j|_p < |Lambda|_p", r.remainder_sum.abs_value,
                         lambda_abs, true);
  if (!r.remainder_sum.certified_nonzero) rem_check.note = "remainder sum below its certified precision bound";
  r.chain.push_back(rem_check);

  const bool scaled_ok = certainly_le(r.ntilde1, Interval(static_cast<long>(shape.Ntilde()), prec)) &&
                         !r.blocks.clamped;
  const Interval nt(static_cast<long>(shape.Ntilde()), prec);
  const Interval lower_log = -(c(2) * Interval(static_cast<long>(shape.n0()), prec)) -
                         (c(8) + Interval(1L, prec)) * nt - (nt + Interval(2L, prec)) * log_a +
                         (tau_iv - Interval(1 + tau, prec) * log_b / log_a) * r.log_Htilde;
  Check lower_check = make_check("explicit lower bound < log|Lambda|_p", lower_log,
                         Interval(-r.Lambda_valuation, prec) * log_p, true);
  if (!scaled_ok) {
    lower_check.note = std::string("evaluates to ") + to_string(lower_check.verdict) +
               "; not claimed: Ntilde < Ntilde_1 or clamped block degrees";
    lower_check.verdict = Verdict::NotApplicable;
  }
  r.chain.push_back(lower_check);

  Check final_check = not_applicable("|L|_p > Htilde^(-1-(m+1)tau)", "L not certified nonzero");
  if (r.L.certified_nonzero) {
    final_check = make_check("|L|_p > Htilde^(-1-(m+1)tau)",
                             -(Interval(1 + (m + 1) * tau, prec) * r.log_Htilde),
                             Interval(-r.L.valuation, prec) * log_p, true);
  }
  if (!r.hypotheses_hold && final_check.verdict != Verdict::NotApplicable) {
    final_check.note = std::string("evaluates to ") + to_string(final_check.verdict) +
                       "; not claimed: size hypotheses unmet";
    final_check.verdict = Verdict::NotApplicable;
  }
  r.chain.push_back(final_check);

  r.chain_verified = rem_check.verdict == Verdict::Pass &&
                     std::none_of(r.chain.begin(), r.chain.end(), [](const Check& ch) {
                       return ch.verdict == Verdict::Fail || ch.verdict == Verdict::Undecided;
                     });
  if (!r.chain_verified) {
    r.verdict = "inequality chain failed at this instance";
  } else if (r.hypotheses_hold) {
    r.verdict = "hypotheses hold and the lower bound is verified";
  } else {
    r.verdict = "remainder comparison verified at this instance; asymptotic hypotheses unmet";
  }
  return r;
}

Theorem3Constants theorem3_constants(const GParams& gp, const ThetaSpec& theta) {
  const long prec = theta.theta.precision();
  const int m = gp.m();
  Theorem3Constants out{theta.label(), Interval::zero(prec), Interval::zero(prec), Interval::zero(prec), false};
  const BoundConstants c = bound_constants(gp, theta);
  out.c9 = c(2) + Interval(static_cast<long>(m + 1), prec) * c(8);

  ThetaSpec unit = theta;
  unit.mode = ThetaSpec::Mode::Custom;
  unit.theta = Interval(1L, prec);
  unit.certified = false;
  const BoundConstants c1 = bound_constants(gp, unit);
  out.c9_at_one = c1(2) + Interval(static_cast<long>(m + 1), prec) * c1(8);

  const Interval eps_s = epsilon_n(gp.s_lcm(), prec).value;
  const Interval inner = Interval(Integer(gp.d_lcm() * gp.dtilde() * gp.s(0)), prec) *
                         epsilon_n(gp.s(0), prec).value * eps_s * eps_s *
                         epsilon_n(gp.v_lcm(), prec).value;
  out.log_C = Interval(Integer(m * gp.S()), prec) +
              Interval(static_cast<long>(m + 1), prec) *
                  (Interval(3L, prec) + log(inner) + Interval(Integer(2 * gp.s(0)), prec) +
                   Interval(Integer((m + 1) * gp.V()), prec));
  out.cross_check = (out.c9_at_one - out.log_C).contains_zero();
  return out;
}

GlobalProbe probe_a_global(const GParams& gp, const Integer& a, const std::vector<Integer>& ell,
                           std::int64_t k) {
  if (abs_int(a) < 2) throw Error(ErrorCode::InvalidArgument, "probe needs |a| > 1");
  if (gcd(a, gp.s_lcm()) != 1) throw Error(ErrorCode::InvalidArgument, "probe needs gcd(a, s) = 1");
  if (static_cast<int>(ell.size()) != gp.m() + 1) {
    throw Error(ErrorCode::InvalidArgument, "ell must have m + 1 entries");
  }
  GlobalProbe out{a, ell, {}, false};
  for (std::uint64_t p : prime_divisors(abs_int(a))) {
    std::vector<PAdicEnclosure> values;
    for (int j = 1; j <= gp.m(); ++j) values.push_back(eval_phi_padic(gp, j, Rational(a), p, k));
    auto value = linear_form_valuation(values, ell);
    out.certified_nonzero = out.certified_nonzero || value.certified_nonzero;
    out.primes.push_back({p, value});
  }
  return out;
}

}  // namespace gpade
