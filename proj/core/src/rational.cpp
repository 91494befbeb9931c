#include "gpade/rational.hpp"

#include <cctype>
#include <limits>

#include "gpade/error.hpp"

namespace gpade {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view t = trim(text);
  if (!is_decimal_integer(t)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (t.front() == '+') t.remove_prefix(1);
  return Integer(std::string(t), 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t));
  Integer den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(t.substr(0, slash)), den);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::InvalidArgument, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  auto e = static_cast<std::uint64_t>(exponent);
  return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

std::uint64_t to_u64(const Integer& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::InvalidArgument, "integer does not fit in 64 bits: " + to_string(z));
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

}  // namespace gpade
