#include "gpade/arith.hpp"

#include "gpade/error.hpp"

namespace gpade {

Rational pochhammer(const Rational& x, std::uint64_t n) {
  Rational out = 1;
  Rational factor = x;
  for (std::uint64_t k = 0; k < n; ++k) {
    out *= factor;
    factor += 1;
  }
  return out;
}

std::uint64_t legendre_nu(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "legendre_nu needs a prime");
  std::uint64_t total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

std::uint64_t floor_log(std::uint64_t p, const Rational& x) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "floor_log needs a prime");
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "floor_log needs x >= 1, got " + to_string(x));
  // p^t <= x  <=>  p^t <= floor(x) for integer p^t.
  Integer fl = x.get_num() / x.get_den();
  return floor_log(p, fl);
}

std::uint64_t floor_log(std::uint64_t p, const Integer& x) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "floor_log needs a prime");
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "floor_log needs x >= 1, got " + to_string(x));
  Integer power = 1;
  const Integer base(static_cast<unsigned long>(p));
  std::uint64_t t = 0;
  while (power * base <= x) {
    power *= base;
    ++t;
  }
  return t;
}

FactoredInteger prime_power_product(std::uint64_t x) {
  FactoredInteger out;
  if (x < 2) return out;
  auto primes = primes_up_to(x);
  const Integer bound(static_cast<unsigned long>(x));
  for (std::uint64_t p : *primes) {
    if (p > x) break;
    out *= FactoredInteger::prime_power(p, floor_log(p, bound));
  }
  return out;
}

EpsilonProduct epsilon_n(const Integer& n, long precision) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "epsilon_n needs n >= 1");
  EpsilonProduct out{{}, Interval(1L, precision)};
  for (std::uint64_t p : prime_divisors(n)) {
    out.exponents.emplace_back(p, make_rational(1, static_cast<long>(p - 1)));
    out.value *= root(Interval(static_cast<long>(p), precision), p - 1);
  }
  return out;
}

std::int64_t p_valuation(const Integer& z, std::uint64_t p) {
  if (z == 0) throw Error(ErrorCode::InvalidArgument, "valuation of 0 is infinite");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p_valuation needs a prime");
  mpz_t tmp;
  mpz_init(tmp);
  const Integer base(static_cast<unsigned long>(p));
  auto v = static_cast<std::int64_t>(mpz_remove(tmp, z.get_mpz_t(), base.get_mpz_t()));
  mpz_clear(tmp);
  return v;
}

std::int64_t p_valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "valuation of 0 is infinite");
  return p_valuation(Integer(q.get_num()), p) - p_valuation(Integer(q.get_den()), p);
}

Rational padic_abs(const Rational& q, std::uint64_t p) {
  if (q == 0) return 0;
  return pow(make_rational(static_cast<long>(p)), -p_valuation(q, p));
}

}  // namespace gpade
