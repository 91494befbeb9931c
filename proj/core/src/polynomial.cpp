#include "gpade/polynomial.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

int Polynomial::order() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  }
  std::vector<Rational> rem = num.coeffs_;
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + dd] / den.leading();
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) rem[k + t] -= c * den.coeffs_[t];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return r != 0; })) {
    throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  }
  return Polynomial(std::move(quot));
}

}  // namespace gpade
