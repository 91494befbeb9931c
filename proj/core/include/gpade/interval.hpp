#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "gpade/rational.hpp"

namespace gpade {

inline constexpr long kDefaultPrecision = 256;

/// A real number enclosed in [lower, upper] with outward (directed) rounding.
///
/// Every operation rounds the lower endpoint toward -inf and the upper endpoint
/// toward +inf, so the true value of any expression built from exact inputs stays
/// inside. `upper()` is the certified upper bound used for constants that only
/// ever enter as upper estimates.
class Interval {
 public:
  /// The point 0 at the default precision.
  Interval();
  static Interval zero(long precision);
  Interval(const Rational& value, long precision = kDefaultPrecision);
  Interval(const Integer& value, long precision = kDefaultPrecision);
  Interval(long value, long precision = kDefaultPrecision);
  ~Interval();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;

  static Interval hull(const Interval& a, const Interval& b);
  static Interval log2_constant(long precision = kDefaultPrecision);

  long precision() const noexcept { return precision_; }

  Interval operator-() const;
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);  // throws if rhs contains 0

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend Interval log(const Interval& x);  // requires lower > 0
  friend Interval exp(const Interval& x);
  friend Interval sqrt(const Interval& x);
  /// x^(1/k) for x >= 0.
  friend Interval root(const Interval& x, unsigned long k);
  /// x^e for x > 0 and rational e.
  friend Interval pow(const Interval& x, const Rational& e);
  friend Interval pow(const Interval& x, unsigned long e);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval abs(const Interval& x);

  /// a <= b for every pair of points (a.upper <= b.lower).
  friend bool certainly_le(const Interval& a, const Interval& b);
  friend bool certainly_lt(const Interval& a, const Interval& b);

  bool contains(const Rational& q) const;
  bool contains_zero() const;

  /// Floor of the enclosed value when both endpoints share it.
  std::optional<Integer> certain_floor() const;
  std::optional<Integer> certain_ceil() const;
  /// floor(lower) and ceil(upper) as integers.
  Integer floor_lower() const;
  Integer ceil_upper() const;

  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const;
  Interval width() const;

  /// Decimal with `digits` significant digits, rounded outward for each endpoint.
  std::string lower_string(int digits = 30) const;
  std::string upper_string(int digits = 30) const;

  mpfr_srcptr lower_ptr() const noexcept { return lo_; }
  mpfr_srcptr upper_ptr() const noexcept { return hi_; }

 private:
  struct Uninitialized {};
  Interval(Uninitialized, long precision);
  void init();
  long precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace gpade
