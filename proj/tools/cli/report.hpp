#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gpade/check.hpp"
#include "gpade/interval.hpp"
#include "gpade/rational.hpp"
#include "json.hpp"

namespace gpade::cli {

enum class Format { Tsv, Json };

using Row = nlohmann::json;

struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  int status = 0;  // 0 pass, 1 a check failed, 2 usage or hypothesis error
  std::vector<std::string> diagnostics;
};

/// Integers longer than this many digits are abbreviated unless exact output is requested.
inline constexpr std::size_t kAbbreviateDigits = 40;

/// Turns exact and certified values into JSON cells.
struct Formatter {
  bool exact = false;
  int digits = 20;

  Row integer(const Integer& z) const;
  Row rational(const Rational& q) const;
  /// {"lower", "upper", "precision_bits"}, endpoints rounded outward.
  Row interval(const Interval& x) const;
  Row quantity(const Quantity& q) const;
};

/// "123...789 (57 digits)" when z has more than kAbbreviateDigits digits.
std::string abbreviate(const std::string& digits);

/// Header line plus one line per row, columns in declared order. Deterministic.
void emit_tsv(const Report& report, std::ostream& out);
/// Single JSON document with sorted keys.
void emit_json(const Report& report, std::ostream& out);
void emit_report(const Report& report, Format format, std::ostream& out);

/// A TSV cell for one JSON value; intervals render as "[lower, upper]@bits".
std::string tsv_cell(const Row& value);

}  // namespace gpade::cli
