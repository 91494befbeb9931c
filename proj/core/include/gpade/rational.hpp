#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gpade {

using Integer = mpz_class;
// gmpxx keeps arithmetic results canonical; construct through make_rational.
using Rational = mpq_class;

/// Reduced num/den with a positive denominator. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "n", "-n" or "n/d" (decimal, surrounding whitespace allowed).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Exact "num/den" (or "num" when den == 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer pow(const Integer& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::int64_t exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline Rational abs(const Rational& q) { return ::abs(q); }

/// Fits-in-uint64 conversion; throws InvalidArgument otherwise.
std::uint64_t to_u64(const Integer& z);

}  // namespace gpade
