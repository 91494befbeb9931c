#include "gpade/primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>

#include "gpade/error.hpp"

namespace gpade {

namespace {

PrimeList sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  PrimeList out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t k = i * i; k <= limit; k += i) composite[k] = true;
  }
  return out;
}

struct SharedSieve {
  std::mutex grow_mutex;
  std::shared_ptr<const PrimeList> primes = std::make_shared<const PrimeList>(sieve(1024));
  std::uint64_t limit = 1024;
};

SharedSieve& shared_sieve() {
  static SharedSieve instance;
  return instance;
}

constexpr std::uint64_t kMaxSieve = 1ULL << 31;

}  // namespace

std::shared_ptr<const PrimeList> primes_up_to(std::uint64_t limit) {
  auto& s = shared_sieve();
  std::lock_guard lock(s.grow_mutex);
  if (limit > s.limit) {
    if (limit > kMaxSieve) {
      throw Error(ErrorCode::InvalidArgument, "prime sieve limit too large: " + std::to_string(limit));
    }
    std::uint64_t target = std::max(limit, 2 * s.limit);
    s.primes = std::make_shared<const PrimeList>(sieve(target));
    s.limit = target;
  }
  return s.primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
  auto primes = primes_up_to(root);
  for (std::uint64_t p : *primes) {
    if (p * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

FactoredInteger FactoredInteger::prime_power(std::uint64_t p, std::uint64_t e) {
  FactoredInteger f;
  if (e == 0) return f;
  f.factors_.emplace_back(p, e);
  f.value_ = gpade::pow(Integer(static_cast<unsigned long>(p)), e);
  return f;
}

FactoredInteger FactoredInteger::factor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
  FactoredInteger f;
  f.value_ = Integer(static_cast<unsigned long>(n));
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
  auto primes = primes_up_to(std::min<std::uint64_t>(root, kMaxSieve));
  for (std::uint64_t p : *primes) {
    if (p * p > n) break;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors_.emplace_back(p, e);
  }
  if (n > 1) f.factors_.emplace_back(n, 1);
  return f;
}

FactoredInteger FactoredInteger::factor(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "cannot factor a non-positive integer");
  return factor(to_u64(n));
}

std::uint64_t FactoredInteger::exponent_of(std::uint64_t p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{p, 0});
  return (it != factors_.end() && it->first == p) ? it->second : 0;
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& other) {
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  value_ *= other.value_;
  return *this;
}

FactoredInteger FactoredInteger::pow(std::uint64_t k) const {
  FactoredInteger f;
  if (k == 0) return f;
  for (const auto& [p, e] : factors_) f.factors_.emplace_back(p, e * k);
  f.value_ = gpade::pow(value_, k);
  return f;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::vector<std::uint64_t> prime_divisors(const Integer& n) {
  std::vector<std::uint64_t> out;
  const FactoredInteger f = FactoredInteger::factor(n);
  for (const auto& [p, e] : f.factors()) out.push_back(p);
  return out;
}

}  // namespace gpade
