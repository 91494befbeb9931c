#include "cli/config.hpp"

#include <limits>
#include <sstream>

#include "gpade/error.hpp"
#include "gpade/primes.hpp"

namespace gpade::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Integer integer_field(const std::string& field, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw UsageError(field, "expected an integer, got '" + text + "'");
  }
}

Rational rational_field(const std::string& field, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(field, "expected an exact rational a/b, got '" + text + "'");
  }
}

long bounded(const std::string& field, const std::string& text, long lo, long hi) {
  Integer z = integer_field(field, text);
  if (z < lo || z > hi) {
    throw UsageError(field, "value " + text + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return z.get_si();
}

}  // namespace

std::vector<Integer> parse_integer_list(const std::string& field, const std::string& text) {
  std::vector<Integer> out;
  for (const auto& part : split(text, ',')) out.push_back(integer_field(field, part));
  if (out.empty()) throw UsageError(field, "empty list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& field, const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(rational_field(field, part));
  if (out.empty()) throw UsageError(field, "empty list");
  return out;
}

RunConfig make_config(const RawOptions& raw) {
  RunConfig cfg;
  cfg.subcommand = raw.subcommand;
  cfg.params_files = raw.params;
  cfg.alpha_lists = raw.alpha;
  for (const auto& a : raw.alpha) parse_rational_list("--alpha", a);
  if (cfg.params_files.empty() && cfg.alpha_lists.empty()) {
    throw UsageError("--params", "a parameter file (or --alpha list) is required");
  }

  if (!raw.n.empty()) {
    std::vector<int> n;
    for (const auto& part : split(raw.n, ',')) n.push_back(static_cast<int>(bounded("--n", part, 0, 1000)));
    cfg.n = n;
  }
  if (!raw.n0.empty()) cfg.n0 = static_cast<int>(bounded("--n0", raw.n0, 0, 1000));
  if (!raw.beta.empty()) {
    cfg.beta = rational_field("--beta", raw.beta);
    if (*cfg.beta == 0) throw UsageError("--beta", "must be nonzero");
  }
  if (!raw.p.empty()) {
    auto p = bounded("--p", raw.p, 2, std::numeric_limits<std::int32_t>::max());
    if (!is_prime(static_cast<std::uint64_t>(p))) throw UsageError("--p", raw.p + " is not prime");
    cfg.p = static_cast<std::uint64_t>(p);
  }

  cfg.theta_mode = raw.theta_mode;
  if (cfg.theta_mode != "paper" && cfg.theta_mode != "sharp" &&
      cfg.theta_mode.rfind("custom:", 0) != 0) {
    throw UsageError("--theta-mode", "expected paper, sharp or custom:<theta>,<c>");
  }
  cfg.vartheta = rational_field("--vartheta", raw.vartheta);
  if (cfg.vartheta <= 1) throw UsageError("--vartheta", "must exceed 1");
  cfg.tau = rational_field("--tau", raw.tau);
  cfg.delta = rational_field("--delta", raw.delta);
  if (!raw.ell.empty()) cfg.ell = parse_integer_list("--ell", raw.ell);

  cfg.B = integer_field("--B", raw.B);
  if (cfg.B < 1) throw UsageError("--B", "must be at least 1");
  cfg.t = rational_field("--t", raw.t);
  if (cfg.t < 0) throw UsageError("--t", "must be nonnegative");
  if (!raw.M.empty()) cfg.M = static_cast<long>(bounded("--M", raw.M, 1, 1000000));
  if (!raw.candidate_n.empty()) cfg.candidate_n = integer_field("--candidate-n", raw.candidate_n);
  cfg.theorem = static_cast<int>(bounded("--theorem", raw.theorem, 0, 4));
  if (cfg.theorem == 1 || cfg.theorem == 2) throw UsageError("--theorem", "expected 3 or 4");
  if (!raw.truncation.empty()) cfg.truncation = static_cast<int>(bounded("--truncation", raw.truncation, 1, 100000));
  cfg.k = bounded("--k", raw.k, 1, 1 << 20);
  cfg.scaled = raw.scaled;

  if (raw.format == "tsv") {
    cfg.format = Format::Tsv;
  } else if (raw.format == "json") {
    cfg.format = Format::Json;
  } else {
    throw UsageError("--format", "expected tsv or json, got '" + raw.format + "'");
  }
  if (!raw.precision.empty()) cfg.precision = static_cast<long>(bounded("--precision", raw.precision, 32, 1 << 16));
  cfg.jobs = static_cast<unsigned>(bounded("--jobs", raw.jobs, 1, 256));
  cfg.exact = raw.exact;
  return cfg;
}

}  // namespace gpade::cli
