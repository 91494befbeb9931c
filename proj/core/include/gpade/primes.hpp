#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gpade/rational.hpp"

namespace gpade {

using PrimeList = std::vector<std::uint64_t>;

/// Snapshot of the shared sieve containing at least every prime <= limit.
/// The returned list may extend past `limit`; it is never mutated afterwards.
std::shared_ptr<const PrimeList> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

/// Positive integer with its prime factorization; primes strictly increasing.
class FactoredInteger {
 public:
  using Factor = std::pair<std::uint64_t, std::uint64_t>;  // (prime, exponent)

  FactoredInteger() = default;  // the value 1

  static FactoredInteger prime_power(std::uint64_t p, std::uint64_t e);
  /// Factors n > 0 by trial division; n must fit in 64 bits.
  static FactoredInteger factor(std::uint64_t n);
  static FactoredInteger factor(const Integer& n);

  const Integer& value() const noexcept { return value_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint64_t exponent_of(std::uint64_t p) const;

  FactoredInteger& operator*=(const FactoredInteger& other);
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }
  FactoredInteger pow(std::uint64_t k) const;

  /// "2^3 * 3 * 5^2", or "1".
  std::string to_string() const;

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  Integer value_ = 1;
};

/// Distinct prime divisors of n > 0 (trial division; see FactoredInteger::factor).
std::vector<std::uint64_t> prime_divisors(const Integer& n);

}  // namespace gpade
