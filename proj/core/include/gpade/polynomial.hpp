#pragma once

#include <initializer_list>
#include <vector>

#include "gpade/rational.hpp"

namespace gpade {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^k (zero beyond the degree).
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }
  /// Smallest k with a nonzero coefficient; -1 for zero.
  int order() const noexcept;

  Rational operator()(const Rational& z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient of an exact division; throws InvalidArgument when the remainder is nonzero.
  friend Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace gpade
