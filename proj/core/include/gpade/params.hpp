#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "gpade/rational.hpp"

namespace gpade {

/// The rational parameters alpha_0, ..., alpha_m and every integer derived from them.
///
/// Per-j quantities u, v, d are defined for j = 1..m only and are accessed with the
/// same 1-based index; r and s include j = 0.
class GParams {
 public:
  int m() const noexcept { return m_; }
  const std::vector<Rational>& alphas() const noexcept { return alpha_; }
  const Rational& alpha(int j) const { return alpha_.at(static_cast<std::size_t>(j)); }

  const Integer& r(int j) const { return r_.at(static_cast<std::size_t>(j)); }
  const Integer& s(int j) const { return s_.at(static_cast<std::size_t>(j)); }
  const Integer& u(int j) const { return u_.at(index(j)); }
  const Integer& v(int j) const { return v_.at(index(j)); }
  const Integer& d(int j) const { return d_.at(index(j)); }

  const Integer& s_lcm() const noexcept { return s_lcm_; }
  const Integer& v_lcm() const noexcept { return v_lcm_; }
  const Integer& d_lcm() const noexcept { return d_lcm_; }
  /// d / gcd(d, s_0)
  const Integer& dtilde() const noexcept { return dtilde_; }
  const Integer& R() const noexcept { return R_; }
  const Integer& S() const noexcept { return S_; }
  const Integer& U() const noexcept { return U_; }
  const Integer& V() const noexcept { return V_; }

  friend GParams derive_params(const std::vector<Rational>& alphas);

 private:
  static std::size_t index(int j) { return static_cast<std::size_t>(j - 1); }

  int m_ = 0;
  std::vector<Rational> alpha_;
  std::vector<Integer> r_, s_;
  std::vector<Integer> u_, v_, d_;
  Integer s_lcm_, v_lcm_, d_lcm_, dtilde_;
  Integer R_, S_, U_, V_;
};

/// Validates alphas (alpha_0 first, at least two entries) and derives GParams.
/// Throws NonPositiveAlpha, or IntegerDifference(i, j) when alpha_i - alpha_j is an
/// integer for some 1 <= i < j <= m.
GParams derive_params(const std::vector<Rational>& alphas);

struct DomainCheck {
  bool admissible = false;   // |beta|_p < 2^{-delta(2,p)} |s|_p
  int delta_2p = 0;          // 1 iff p = 2 and s is even
  int delta_p = 0;           // 1 iff p | s
};

/// p-adic convergence test for the series at beta != 0.
DomainCheck padic_domain_check(const GParams& gp, std::uint64_t p, const Rational& beta);

/// Parses the line-based parameter file:
///   m = <int>
///   alpha0 = <num>/<den>
///   ...
///   alpham = <num>/<den>
/// Blank lines and text after '#' are ignored. Throws ParseError with the line number.
std::vector<Rational> parse_param_text(std::string_view text);
std::vector<Rational> read_param_file(const std::filesystem::path& path);

}  // namespace gpade
