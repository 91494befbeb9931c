#include "gpade/check.hpp"

#include <algorithm>

namespace gpade {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Undecided: return "UNDECIDED";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

Interval to_interval(const Quantity& q, long precision) {
  if (const auto* r = std::get_if<Rational>(&q)) return Interval(*r, precision);
  return std::get<Interval>(q);
}

Verdict compare(const Quantity& lhs, const Quantity& rhs, bool strict) {
  const auto* l = std::get_if<Rational>(&lhs);
  const auto* r = std::get_if<Rational>(&rhs);
  if (l && r) {
    bool ok = strict ? (*l < *r) : (*l <= *r);
    return ok ? Verdict::Pass : Verdict::Fail;
  }
  long prec = std::max(l ? 0L : std::get<Interval>(lhs).precision(),
                       r ? 0L : std::get<Interval>(rhs).precision());
  Interval li = to_interval(lhs, prec);
  Interval ri = to_interval(rhs, prec);
  if (strict ? certainly_lt(li, ri) : certainly_le(li, ri)) return Verdict::Pass;
  if (strict ? certainly_le(ri, li) : certainly_lt(ri, li)) return Verdict::Fail;
  return Verdict::Undecided;
}

Check make_check(std::string name, Quantity lhs, Quantity rhs, bool strict, std::string note) {
  Check c{std::move(name), std::move(lhs), std::move(rhs), strict, Verdict::NotApplicable,
          std::move(note)};
  c.verdict = compare(c.lhs, c.rhs, strict);
  return c;
}

Check not_applicable(std::string name, std::string note) {
  return Check{std::move(name), Rational(0), Rational(0), false, Verdict::NotApplicable,
               std::move(note)};
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail || c.verdict == Verdict::Undecided) return false;
  }
  return true;
}

}  // namespace gpade
