#include "cli/app.hpp"

#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace gpade::cli {

namespace {

void add_common_options(CLI::App& app, RawOptions& raw) {
  app.add_option("--params", raw.params, "Parameter file (repeatable)");
  app.add_option("--alpha", raw.alpha, "Inline parameters alpha0,alpha1,... (repeatable)");
  app.add_option("--n", raw.n, "Block degrees n_1,...,n_m");
  app.add_option("--n0", raw.n0, "n0 >= max n_j");
  app.add_option("--beta", raw.beta, "Evaluation point a/b");
  app.add_option("--p", raw.p, "Prime");
  app.add_option("--theta-mode", raw.theta_mode, "paper | sharp | custom:THETA,C")->capture_default_str();
  app.add_option("--vartheta", raw.vartheta, "vartheta > 1")->capture_default_str();
  app.add_option("--tau", raw.tau, "Exponent tau")->capture_default_str();
  app.add_option("--delta", raw.delta, "Exponent delta")->capture_default_str();
  app.add_option("--ell", raw.ell, "Linear form coefficients l0,l1,...");
  app.add_option("--B", raw.B, "B >= 1")->capture_default_str();
  app.add_option("--t", raw.t, "t >= 0 with B <= b^t")->capture_default_str();
  app.add_option("--M", raw.M, "Exponent M (default ceil(M0))");
  app.add_option("--candidate-n", raw.candidate_n, "Numerator to audit (default nearest)");
  app.add_option("--theorem", raw.theorem, "Extra constants: 3 or 4")->capture_default_str();
  app.add_option("--truncation", raw.truncation, "Series truncation for remainders");
  app.add_option("--k", raw.k, "p-adic precision exponent")->capture_default_str();
  app.add_flag("--scaled", raw.scaled, "Multiply coefficients by D1 (Q) and D (P)");
  app.add_option("--format", raw.format, "tsv | json")->capture_default_str();
  app.add_option("--precision", raw.precision, "Interval precision in bits");
  app.add_option("--jobs", raw.jobs, "Worker threads")->capture_default_str();
  app.add_flag("--exact", raw.exact, "Print large integers in full");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RawOptions raw;
  CLI::App app{"Hermite-Pade approximation toolkit for generalized hypergeometric series", "gpade"};
  app.require_subcommand(1);
  add_common_options(app, raw);
  static const std::map<std::string, std::string> descriptions = {
      {"construct", "Print Q_i and P_ij coefficients"},
      {"verify", "Check the order conditions against the linear-system oracle and the determinant"},
      {"denominators", "Common denominators D1, D2, D and the size bounds"},
      {"constants", "Size constants c1..c8 with the extra constants of --theorem"},
      {"padic", "p-adic evaluation, remainder valuations and the linear form audit"},
      {"global", "Evaluate the linear form at an integer point in Q_p for every p | a"},
      {"restricted", "Audit the restricted rational approximation bound"}};
  for (const auto& name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->fallthrough();
    sub->callback([&raw, name] { raw.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }

  RunConfig config;
  try {
    config = make_config(raw);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }

  Report report = execute(config);
  emit_report(report, config.format, out);
  for (const auto& d : report.diagnostics) err << d << '\n';
  return report.status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gpade"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gpade::cli
