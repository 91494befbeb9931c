#pragma once

#include <cstddef>
#include <vector>

#include "gpade/polynomial.hpp"
#include "gpade/rational.hpp"

namespace gpade {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) determinant over Z.
Integer bareiss_determinant(Matrix<Integer> a);

/// Bareiss determinant over Q[z] using exact polynomial division.
Polynomial bareiss_determinant(Matrix<Polynomial> a);

/// Cofactor (Laplace) expansion; intended for small matrices.
Polynomial cofactor_determinant(const Matrix<Polynomial>& a);

struct EliminationStats {
  std::size_t row_swaps = 0;
  bool zero_pivot_encountered = false;  // a column had no usable pivot
};

/// Solves the square system A x = b exactly. Each row is scaled to integers, then
/// reduced by fraction-free elimination with row pivoting; back substitution is done
/// over Q. Throws SingularSystem when some column has no nonzero pivot.
std::vector<Rational> solve_fraction_free(const Matrix<Rational>& a, const std::vector<Rational>& b,
                                          EliminationStats* stats = nullptr);

}  // namespace gpade
