#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpade/interval.hpp"
#include "gpade/primes.hpp"
#include "gpade/rational.hpp"

namespace gpade {

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, std::uint64_t n);

/// Legendre's sum nu_p(n) = sum_t floor(n / p^t), the exponent of p in n!.
/// nu_p(0) = 0.
std::uint64_t legendre_nu(std::uint64_t p, std::uint64_t n);

/// Largest t with p^t <= x, by exact comparison. Throws InvalidArgument if x < 1.
std::uint64_t floor_log(std::uint64_t p, const Rational& x);
std::uint64_t floor_log(std::uint64_t p, const Integer& x);

/// prod_{p <= x} p^{floor_log(p, x)}, i.e. lcm(1, ..., x). x >= 1.
FactoredInteger prime_power_product(std::uint64_t x);

struct EpsilonProduct {
  std::vector<std::pair<std::uint64_t, Rational>> exponents;  // (p, 1/(p-1)) for p | n
  Interval value;
};

/// epsilon(n) = prod_{p | n} p^{1/(p-1)}, n >= 1.
EpsilonProduct epsilon_n(const Integer& n, long precision = kDefaultPrecision);

/// v with |q|_p = p^{-v}. Throws InvalidArgument for q == 0.
std::int64_t p_valuation(const Rational& q, std::uint64_t p);
std::int64_t p_valuation(const Integer& z, std::uint64_t p);

/// |q|_p as an exact rational; |0|_p = 0.
Rational padic_abs(const Rational& q, std::uint64_t p);

}  // namespace gpade
