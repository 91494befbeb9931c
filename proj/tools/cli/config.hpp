#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "gpade/interval.hpp"
#include "gpade/rational.hpp"

namespace gpade::cli {

/// Bad flag value or missing flag; carries the offending field.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Flags exactly as typed, before any numeric parsing.
struct RawOptions {
  std::string subcommand;
  std::vector<std::string> params;
  std::vector<std::string> alpha;
  std::string n, n0, beta, p, theta_mode = "paper", vartheta = "2";
  std::string tau = "1/2", delta = "1/20", ell;
  std::string B = "1", t = "0", M, candidate_n;
  std::string format = "tsv", precision, jobs = "1", k = "64", truncation, theorem = "0";
  bool exact = false;
  bool scaled = false;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> params_files;
  std::vector<std::string> alpha_lists;  // inline "alpha0,alpha1,..."
  std::optional<std::vector<int>> n;
  std::optional<int> n0;
  std::optional<Rational> beta;
  std::optional<std::uint64_t> p;
  std::string theta_mode = "paper";
  Rational vartheta = 2;
  Rational tau = make_rational(1, 2);
  Rational delta = make_rational(1, 20);
  std::optional<std::vector<Integer>> ell;
  Integer B = 1;
  Rational t = 0;
  std::optional<long> M;
  std::optional<Integer> candidate_n;
  int theorem = 0;
  std::optional<int> truncation;
  std::int64_t k = 64;
  bool scaled = false;
  Format format = Format::Tsv;
  long precision = kDefaultPrecision;
  unsigned jobs = 1;
  bool exact = false;
};

/// Parses every numeric flag exactly (integers and rationals only, never floats).
/// Throws UsageError naming the flag.
RunConfig make_config(const RawOptions& raw);

std::vector<Integer> parse_integer_list(const std::string& field, const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& field, const std::string& text);

}  // namespace gpade::cli
