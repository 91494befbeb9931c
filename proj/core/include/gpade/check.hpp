#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gpade/interval.hpp"
#include "gpade/rational.hpp"

namespace gpade {

enum class Verdict { Pass, Fail, Undecided, NotApplicable };

const char* to_string(Verdict v) noexcept;

/// An exact rational or a certified real enclosure.
using Quantity = std::variant<Rational, Interval>;

Interval to_interval(const Quantity& q, long precision = kDefaultPrecision);

/// One verified inequality lhs <= rhs (or lhs < rhs when strict), with its verdict.
struct Check {
  std::string name;
  Quantity lhs;
  Quantity rhs;
  bool strict = false;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
};

/// Pass when the enclosures certify the relation, Fail when they certify its negation,
/// Undecided when they overlap. Two rationals are compared exactly.
Verdict compare(const Quantity& lhs, const Quantity& rhs, bool strict);

Check make_check(std::string name, Quantity lhs, Quantity rhs, bool strict = false,
                 std::string note = {});
Check not_applicable(std::string name, std::string note);

bool all_pass(const std::vector<Check>& checks);

}  // namespace gpade
