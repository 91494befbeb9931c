#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "gpade/arith.hpp"
#include "gpade/denom.hpp"
#include "gpade/error.hpp"
#include "gpade/pade.hpp"
#include "gpade/padic.hpp"
#include "gpade/params.hpp"
#include "gpade/realapprox.hpp"

namespace gpade::cli {

namespace {

const std::vector<std::string> kCheckColumns = {"instance", "item", "i", "j", "p", "value",
                                                "relation", "bound", "verdict", "note"};
const std::vector<std::string> kConstructColumns = {"instance", "poly", "i", "j", "k",
                                                    "coefficient"};

class Session {
 public:
  Session(const RunConfig& config, std::string name, InstanceResult& out)
      : cfg(config), fmt{config.exact, 20}, name_(std::move(name)), out_(out) {}

  Row row(const std::string& item) const { return Row{{"instance", name_}, {"item", item}}; }

  void add(Row r) { out_.rows.push_back(std::move(r)); }

  void add_value(const std::string& item, Row value, const std::string& note = {}) {
    Row r = row(item);
    r["value"] = std::move(value);
    if (!note.empty()) r["note"] = note;
    add(std::move(r));
  }

  void add_verdict(Row r, Verdict v) {
    r["verdict"] = to_string(v);
    note_verdict(v, r["item"].get<std::string>());
    add(std::move(r));
  }

  void add_check(const Check& c, std::optional<int> i = std::nullopt,
                 std::optional<int> j = std::nullopt) {
    Row r = row(c.name);
    if (i) r["i"] = *i;
    if (j) r["j"] = *j;
    if (c.verdict != Verdict::NotApplicable || c.note.rfind("evaluates to", 0) == 0) {
      r["value"] = fmt.quantity(c.lhs);
      r["relation"] = c.strict ? "<" : "<=";
      r["bound"] = fmt.quantity(c.rhs);
    }
    if (!c.note.empty()) r["note"] = c.note;
    add_verdict(std::move(r), c.verdict);
  }

  /// Hypotheses are reported as MET/UNMET and never change the exit status.
  void add_hypothesis(const Check& c) {
    Row r = row(c.name);
    r["value"] = fmt.quantity(c.lhs);
    r["relation"] = c.strict ? "<" : "<=";
    r["bound"] = fmt.quantity(c.rhs);
    r["verdict"] = c.verdict == Verdict::Pass ? "MET" : c.verdict == Verdict::Fail ? "UNMET" : "UNDECIDED";
    r["note"] = c.note.empty() ? "hypothesis" : "hypothesis; " + c.note;
    add(std::move(r));
  }

  void note_verdict(Verdict v, const std::string& item) {
    if (v == Verdict::Fail || v == Verdict::Undecided) {
      out_.status = std::max(out_.status, 1);
      out_.diagnostics.push_back(name_ + ": " + item + " " + to_string(v));
    }
  }

  const RunConfig& cfg;
  Formatter fmt;

 private:
  std::string name_;
  InstanceResult& out_;
};

ApproxShape shape_from(const RunConfig& cfg, const GParams& gp) {
  std::vector<int> n = cfg.n.value_or(std::vector<int>(static_cast<std::size_t>(gp.m()), 1));
  if (static_cast<int>(n.size()) != gp.m()) {
    throw UsageError("--n", "expected " + std::to_string(gp.m()) + " block degrees, got " +
                                std::to_string(n.size()));
  }
  int n0 = cfg.n0.value_or(*std::max_element(n.begin(), n.end()));
  try {
    return ApproxShape::standard(n, n0);
  } catch (const Error& e) {
    throw UsageError(cfg.n0 ? "--n0" : "--n", e.what());
  }
}

ThetaSpec theta_from(const RunConfig& cfg) {
  try {
    return ThetaSpec::parse(cfg.theta_mode, cfg.precision);
  } catch (const Error& e) {
    throw UsageError("--theta-mode", e.what());
  }
}

const Rational& require_beta(const RunConfig& cfg) {
  if (!cfg.beta) throw UsageError("--beta", "required by '" + cfg.subcommand + "'");
  return *cfg.beta;
}

std::uint64_t require_p(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("--p", "required by '" + cfg.subcommand + "'");
  return *cfg.p;
}

void cmd_construct(Session& s, const GParams& gp) {
  ApproxShape shape = shape_from(s.cfg, gp);
  PadeFamily family = build_family(gp, shape, s.cfg.truncation);
  std::optional<DenominatorCert> cert;
  if (s.cfg.scaled) cert = make_certificate(gp, shape);
  Rational qscale = cert ? Rational(cert->d1.value()) : Rational(1);
  Rational pscale = cert ? Rational(cert->d.value()) : Rational(1);

  auto emit = [&](const char* poly, int i, std::optional<int> j, int k, const Rational& c) {
    Row r{{"instance", s.row("").at("instance")}, {"poly", poly}, {"i", i}, {"k", k}};
    if (j) r["j"] = *j;
    r["coefficient"] = s.fmt.rational(c);
    s.add(std::move(r));
  };
  for (int i = 0; i <= gp.m(); ++i) {
    const auto& q = family.q[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < q.size(); ++k) emit("Q", i, std::nullopt, static_cast<int>(k), q[k] * qscale);
    for (int j = 1; j <= gp.m(); ++j) {
      for (int mu = 0; mu <= shape.Nij(i, j); ++mu) emit("P", i, j, mu, family.c(i, j, mu) * pscale);
    }
  }
  if (s.cfg.truncation) {
    for (int i = 0; i <= gp.m(); ++i) {
      for (int j = 1; j <= gp.m(); ++j) {
        for (int mu = shape.Nij(i, j) + 1; mu <= family.truncation; ++mu) {
          emit("R", i, j, mu, family.c(i, j, mu) * pscale);
        }
      }
    }
  }
}

void cmd_verify(Session& s, const GParams& gp) {
  ApproxShape shape = shape_from(s.cfg, gp);
  PadeFamily family = build_family(gp, shape, s.cfg.truncation);
  OrderReport order = verify_order(family);
  for (int i = 0; i <= gp.m(); ++i) {
    for (int j = 1; j <= gp.m(); ++j) {
      Row r = s.row("order");
      r["i"] = i;
      r["j"] = j;
      r["value"] = std::to_string(shape.Nij(i, j) + 1) + ".." + std::to_string(shape.Nij(i, j) + shape.n(j));
      bool ok = order.pass[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      s.add_verdict(std::move(r), ok ? Verdict::Pass : Verdict::Fail);
    }
  }
  for (int i = 0; i <= gp.m(); ++i) {
    Row r = s.row("oracle");
    r["i"] = i;
    try {
      bool same = oracle_solve(gp, shape, i) == family.q[static_cast<std::size_t>(i)];
      r["value"] = same ? "equal" : "differs";
      s.add_verdict(std::move(r), same ? Verdict::Pass : Verdict::Fail);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem) throw;
      r["value"] = "zero pivot";
      r["note"] = e.what();
      s.add_verdict(std::move(r), Verdict::Fail);
    }
  }
  int expected = shape.N() + gp.m();
  for (int j = 1; j <= gp.m(); ++j) expected += shape.Nj(j);
  Rational omega_expected = 1;
  for (int j = 1; j <= gp.m(); ++j) omega_expected *= family.c(j, j, shape.Nj(j) + 1);
  try {
    OmegaResult om = omega_det(family);
    Row r = s.row("omega_exponent");
    r["value"] = om.exponent;
    r["relation"] = "=";
    r["bound"] = expected;
    s.add_verdict(std::move(r), om.exponent == expected ? Verdict::Pass : Verdict::Fail);
    Row w = s.row("omega");
    w["value"] = s.fmt.rational(om.omega);
    w["relation"] = "=";
    w["bound"] = s.fmt.rational(omega_expected);
    bool ok = om.omega == omega_expected && om.omega != 0;
    s.add_verdict(std::move(w), ok ? Verdict::Pass : Verdict::Fail);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonMonomialDeterminant) throw;
    Row r = s.row("omega_exponent");
    r["note"] = e.what();
    s.add_verdict(std::move(r), Verdict::Fail);
  }
}

void cmd_denominators(Session& s, const GParams& gp) {
  ApproxShape shape = shape_from(s.cfg, gp);
  PadeFamily family = build_family(gp, shape, s.cfg.truncation);
  DenominatorCert cert = make_certificate(gp, shape);
  s.add_value("D1", s.fmt.integer(cert.d1.value()), cert.d1.to_string());
  s.add_value("D2", s.fmt.integer(cert.d2.value()), cert.d2.to_string());
  s.add_value("D", s.fmt.integer(cert.d.value()), cert.d.to_string());

  IntegralityReport integ = verify_integrality(family, cert);
  Row r = s.row("integrality");
  r["value"] = integ.checked;
  if (integ.first_violation) r["note"] = *integ.first_violation;
  s.add_verdict(std::move(r), integ.pass ? Verdict::Pass : Verdict::Fail);

  if (!s.cfg.beta) return;
  ThetaSpec theta = theta_from(s.cfg);
  BoundConstants constants = bound_constants(gp, theta);
  if (abs(*s.cfg.beta) < 2) throw UsageError("--beta", "size bounds need |beta| >= 2");
  for (const auto& c : check_size_bounds(family, cert, constants, {*s.cfg.beta})) s.add_check(c);
  if (!s.cfg.p) return;
  ScaledSystem scaled = scaled_integers(family, cert, *s.cfg.beta, *s.cfg.p);
  for (int i = 0; i <= gp.m(); ++i) {
    Row q = s.row("scaled_Q");
    q["i"] = i;
    q["value"] = s.fmt.integer(scaled.Q[static_cast<std::size_t>(i)]);
    s.add(std::move(q));
    for (int j = 1; j <= gp.m(); ++j) {
      Row pr = s.row("scaled_P");
      pr["i"] = i;
      pr["j"] = j;
      pr["value"] = s.fmt.integer(scaled.P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
      s.add(std::move(pr));
    }
  }
  s.add_value("scaled_determinant", s.fmt.integer(scaled.determinant));
  for (const auto& c : check_scaled_bounds(family, scaled, constants, *s.cfg.p)) s.add_check(c);
}

void cmd_constants(Session& s, const GParams& gp) {
  ThetaSpec theta = theta_from(s.cfg);
  BoundConstants constants = bound_constants(gp, theta);
  std::string tag = "theta " + theta.label() + (theta.certified ? "" : " (uncertified)");
  for (int k = 1; k <= 8; ++k) s.add_value("c" + std::to_string(k), s.fmt.interval(constants(k)), tag);
  if (s.cfg.beta && s.cfg.p) {
    Row r = s.row("Ntilde1");
    r["p"] = *s.cfg.p;
    r["value"] = s.fmt.interval(ntilde1(gp, constants, *s.cfg.beta, *s.cfg.p));
    s.add(std::move(r));
  }

  if (s.cfg.theorem == 3) {
    Theorem3Constants t3 = theorem3_constants(gp, theta);
    s.add_value("c9", s.fmt.interval(t3.c9), tag);
    s.add_value("c9_theta_one", s.fmt.interval(t3.c9_at_one));
    s.add_value("log_C", s.fmt.interval(t3.log_C));
    Row r = s.row("c9_cross_check");
    r["note"] = "c9 at theta = 1 against log C";
    s.add_verdict(std::move(r), t3.cross_check ? Verdict::Pass : Verdict::Fail);
  } else if (s.cfg.theorem == 4) {
    Theorem4Constants t4 = theorem4_constants(gp, theta, s.cfg.vartheta);
    s.add_value("a1", s.fmt.interval(t4.a1), t4.a1_variant);
    s.add_value("a1_general", s.fmt.interval(t4.a1_general));
    if (t4.a1_integer_alpha0) s.add_value("a1_integer_alpha0", s.fmt.interval(*t4.a1_integer_alpha0));
    if (t4.a1_alpha0_one) s.add_value("a1_alpha0_one", s.fmt.interval(*t4.a1_alpha0_one));
    s.add_value("a2", s.fmt.interval(t4.a2));
    s.add_value("c_vartheta", std::to_string(t4.c_vartheta), "vartheta " + to_string(t4.vartheta));

    RestrictedInstance inst;
    inst.a = s.cfg.beta ? s.cfg.beta->get_num() : Integer(1);
    inst.b = s.cfg.beta ? s.cfg.beta->get_den() : smallest_admissible_b(t4, inst.a);
    inst.B = s.cfg.B;
    inst.t = s.cfg.t;
    s.add_value("b", s.fmt.integer(inst.b), s.cfg.beta ? "from --beta" : "smallest admissible");
    s.add_value("M0", s.fmt.interval(compute_M0(inst, t4)));
  }
}

void cmd_padic(Session& s, const GParams& gp) {
  const Rational& beta = require_beta(s.cfg);
  std::uint64_t p = require_p(s.cfg);
  DomainCheck dom = padic_domain_check(gp, p, beta);
  Row d = s.row("domain");
  d["p"] = p;
  d["value"] = s.fmt.rational(padic_abs(beta, p));
  d["note"] = "|beta|_p against 2^-delta(2,p) |s|_p";
  s.add_verdict(std::move(d), dom.admissible ? Verdict::Pass : Verdict::NotApplicable);
  if (!dom.admissible) {
    throw Error(ErrorCode::DomainViolation,
                "beta = " + to_string(beta) + " is outside the p-adic domain for p = " + std::to_string(p));
  }

  for (int j = 1; j <= gp.m(); ++j) {
    PAdicEnclosure e = eval_phi_padic(gp, j, beta, p, s.cfg.k);
    Row r = s.row("phi");
    r["j"] = j;
    r["p"] = p;
    if (auto v = e.valuation()) {
      r["value"] = *v;
      r["note"] = "unit residue " + to_string(e.unit_residue()) + " mod p^" +
                  std::to_string(e.relative_precision());
    } else {
      r["value"] = "below precision";
    }
    r["bound"] = e.abs_precision() ? Row(*e.abs_precision()) : Row("exact");
    s.add(std::move(r));
  }

  ThetaSpec theta = theta_from(s.cfg);
  BoundConstants constants = bound_constants(gp, theta);

  if (s.cfg.n || s.cfg.truncation || !s.cfg.ell) {
    ApproxShape shape = shape_from(s.cfg, gp);
    int truncation = s.cfg.truncation.value_or(default_truncation(shape));
    PadeFamily family = build_family(gp, shape, truncation);
    DenominatorCert cert = make_certificate(gp, shape);
    RemainderPadicBound rb = remainder_padic_bound(gp, shape, beta, p, constants);
    s.add_value("valuation_bound", s.fmt.rational(rb.valuation_bound));
    s.add_value("scaled_log_bound", s.fmt.interval(rb.scaled_log_bound),
                rb.scaled_applicable ? "Ntilde >= Ntilde1" : "Ntilde < Ntilde1");
    s.add_value("Ntilde1", s.fmt.interval(rb.ntilde1), "theta " + theta.label());
    for (const auto& rv : check_remainder_valuations(family, cert, beta, p, constants, truncation)) {
      Row r = s.row("remainder_valuation");
      r["i"] = rv.i;
      r["j"] = rv.j;
      r["p"] = p;
      r["value"] = rv.min_term_valuation;
      std::string note = "direct " + std::string(to_string(rv.direct)) + ", scaled " + to_string(rv.scaled) +
                         ", truncation " + std::to_string(truncation);
      if (rv.truncated_valuation) note += ", truncated sum valuation " + std::to_string(*rv.truncated_valuation);
      r["note"] = note;
      Verdict v = rv.direct;
      if (rv.scaled == Verdict::Fail || rv.scaled == Verdict::Undecided) v = rv.scaled;
      s.add_verdict(std::move(r), v);
    }
  }

  if (!s.cfg.ell) return;
  if (static_cast<int>(s.cfg.ell->size()) != gp.m() + 1) {
    throw UsageError("--ell", "expected " + std::to_string(gp.m() + 1) + " coefficients");
  }
  Theorem5Report rep = theorem5_audit(gp, beta, p, make_linear_form(*s.cfg.ell, s.cfg.tau, s.cfg.delta), theta);
  for (const auto& c : rep.hypotheses) s.add_hypothesis(c);
  s.add_value("log_Htilde", s.fmt.interval(rep.log_Htilde));
  s.add_value("log_H0", s.fmt.interval(rep.log_H0));
  s.add_value("Ntilde1", s.fmt.interval(rep.ntilde1), "theta " + rep.theta_label);
  s.add_value("log_ctilde", s.fmt.interval(rep.log_ctilde), "epsilon " + to_string(rep.epsilon));
  std::string degrees;
  for (int n : rep.blocks.shape.block_degrees()) degrees += (degrees.empty() ? "" : ",") + std::to_string(n);
  s.add_value("block_degrees", degrees,
              "n0 " + std::to_string(rep.blocks.shape.n0()) + (rep.blocks.clamped ? ", clamped" : ""));
  if (rep.witness_index >= 0) {
    Row w = s.row("witness");
    w["i"] = rep.witness_index;
    w["value"] = s.fmt.integer(rep.Lambda);
    w["note"] = "v_p(Lambda) = " + std::to_string(rep.Lambda_valuation);
    s.add(std::move(w));
    Row rs = s.row("remainder_sum");
    rs["p"] = p;
    rs["value"] = rep.remainder_sum.valuation;
    rs["note"] = rep.remainder_sum.certified_nonzero ? "valuation" : "valuation at least";
    s.add(std::move(rs));
  }
  Row l = s.row("L");
  l["p"] = p;
  l["value"] = rep.L.valuation;
  l["note"] = rep.L.certified_nonzero ? "valuation" : "below precision";
  s.add(std::move(l));
  for (const auto& c : rep.chain) s.add_check(c);
  s.add_value("verdict", rep.verdict);
}

void cmd_global(Session& s, const GParams& gp) {
  const Rational& beta = require_beta(s.cfg);
  if (!is_integer(beta)) throw UsageError("--beta", "the a-global probe needs an integer a");
  if (!s.cfg.ell) throw UsageError("--ell", "required by 'global'");
  if (static_cast<int>(s.cfg.ell->size()) != gp.m() + 1) {
    throw UsageError("--ell", "expected " + std::to_string(gp.m() + 1) + " coefficients");
  }
  GlobalProbe probe = probe_a_global(gp, beta.get_num(), *s.cfg.ell, s.cfg.k);
  for (const auto& e : probe.primes) {
    Row r = s.row("L");
    r["p"] = e.p;
    if (e.value.certified_nonzero) {
      r["value"] = s.fmt.rational(e.value.abs_value);
      r["note"] = "certified |L|_p, valuation " + std::to_string(e.value.valuation);
    } else {
      r["value"] = "below precision";
      r["relation"] = "<=";
      r["bound"] = s.fmt.rational(e.value.abs_value);
      r["note"] = "k = " + std::to_string(e.value.valuation);
    }
    s.add(std::move(r));
  }
  s.add_value("certified_nonzero", probe.certified_nonzero ? "yes" : "no");
}

void cmd_restricted(Session& s, const GParams& gp) {
  if (gp.m() != 1) throw UsageError("--params", "'restricted' needs m = 1");
  ThetaSpec theta = theta_from(s.cfg);
  Theorem4Constants t4 = theorem4_constants(gp, theta, s.cfg.vartheta);
  RestrictedInstance inst;
  inst.a = s.cfg.beta ? s.cfg.beta->get_num() : Integer(1);
  inst.b = s.cfg.beta ? s.cfg.beta->get_den() : smallest_admissible_b(t4, inst.a);
  inst.B = s.cfg.B;
  inst.t = s.cfg.t;
  inst.candidate_n = s.cfg.candidate_n;
  Interval M0 = compute_M0(inst, t4);
  inst.M = s.cfg.M ? *s.cfg.M : M0.ceil_upper().get_si();

  s.add_value("a1", s.fmt.interval(t4.a1), t4.a1_variant + ", theta " + theta.label());
  s.add_value("a2", s.fmt.interval(t4.a2));
  s.add_value("a", s.fmt.integer(inst.a));
  s.add_value("b", s.fmt.integer(inst.b), s.cfg.beta ? "from --beta" : "smallest admissible");
  s.add_value("M0", s.fmt.interval(M0));
  s.add_value("M", std::to_string(inst.M), s.cfg.M ? "from --M" : "ceil(M0)");

  Theorem4Report rep = theorem4_audit(gp, inst, t4);
  s.add_value("E1", s.fmt.interval(rep.E1));
  s.add_value("h", std::to_string(rep.h));
  s.add_value("n0", std::to_string(rep.n0));
  s.add_value("n1", std::to_string(rep.n1));
  s.add_value("D1", s.fmt.integer(rep.D1.value()), rep.D1.to_string());
  s.add_value("D2", s.fmt.integer(rep.D2.value()), rep.D2.to_string());
  s.add_value("candidate_n", s.fmt.integer(rep.n));
  Row w = s.row("witness");
  w["i"] = rep.witness_index;
  s.add(std::move(w));
  s.add_value("phi_lower", s.fmt.rational(rep.phi.lower), std::to_string(rep.series_terms) + " terms");
  s.add_value("phi_upper", s.fmt.rational(rep.phi.upper));
  for (const auto& c : rep.checks) s.add_check(c);
  Row f = s.row("final");
  f["note"] = "|phi(a/b) - n/(B b^M)| >= (a1^18 |a|^17)^-M / (B b^M)";
  s.add_verdict(std::move(f), rep.final_verdict ? Verdict::Pass : Verdict::Fail);
}

using Command = std::function<void(Session&, const GParams&)>;

Command command_for(const std::string& name) {
  if (name == "construct") return cmd_construct;
  if (name == "verify") return cmd_verify;
  if (name == "denominators") return cmd_denominators;
  if (name == "constants") return cmd_constants;
  if (name == "padic") return cmd_padic;
  if (name == "global") return cmd_global;
  if (name == "restricted") return cmd_restricted;
  throw UsageError("subcommand", "unknown '" + name + "'");
}

}  // namespace

std::vector<std::string> columns_for(const std::string& subcommand) {
  return subcommand == "construct" ? kConstructColumns : kCheckColumns;
}

InstanceResult run_instance(const RunConfig& config, const std::string& source, bool inline_alphas) {
  InstanceResult out;
  std::string name = inline_alphas ? "alpha=" + source : source;
  Session session(config, name, out);
  auto fail = [&](int status, const std::string& message) {
    out.status = std::max(out.status, status);
    out.diagnostics.push_back(name + ": " + message);
  };
  try {
    std::vector<Rational> alphas =
        inline_alphas ? parse_rational_list("--alpha", source) : read_param_file(source);
    GParams gp = derive_params(alphas);
    command_for(config.subcommand)(session, gp);
  } catch (const UsageError& e) {
    fail(2, e.what());
  } catch (const Error& e) {
    std::string message = e.what();
    if (e.indices()) {
      message += " (alpha" + std::to_string(e.indices()->first) + ", alpha" +
                 std::to_string(e.indices()->second) + ")";
    }
    fail(e.is_invariant_violation() ? 1 : 2, message);
  }
  return out;
}

Report execute(const RunConfig& config) {
  std::vector<std::pair<std::string, bool>> sources;
  for (const auto& f : config.params_files) sources.emplace_back(f, false);
  for (const auto& a : config.alpha_lists) sources.emplace_back(a, true);

  std::vector<InstanceResult> results(sources.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < sources.size();) {
      results[idx] = run_instance(config, sources[idx].first, sources[idx].second);
    }
  };
  std::size_t workers = std::min<std::size_t>(config.jobs, sources.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  Report report;
  report.command = config.subcommand;
  report.columns = columns_for(config.subcommand);
  for (auto& r : results) {
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
    report.status = std::max(report.status, r.status);
    for (auto& d : r.diagnostics) report.diagnostics.push_back(std::move(d));
  }
  return report;
}

}  // namespace gpade::cli
