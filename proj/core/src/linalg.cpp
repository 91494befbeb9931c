#include "gpade/linalg.hpp"

#include <utility>

#include "gpade/error.hpp"

namespace gpade {

namespace {

bool is_zero(const Integer& x) { return x == 0; }
bool is_zero(const Polynomial& x) { return x.is_zero(); }

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }

template <typename T>
void require_square(const Matrix<T>& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  }
}

// Returns the determinant; `one` is the ring's unit.
template <typename T>
T bareiss(Matrix<T> a, const T& one) {
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return T{};
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(value, prev);
      }
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? T(-det) : det;
}

Polynomial cofactor(const Matrix<Polynomial>& a, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == a.size()) return Polynomial{Rational(1)};
  Polynomial total;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t col = cols[idx];
    if (a[row][col].is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    Polynomial minor = cofactor(a, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), col);
    Polynomial term = a[row][col] * minor;
    if (idx % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

Integer bareiss_determinant(Matrix<Integer> a) { return bareiss(std::move(a), Integer(1)); }

Polynomial bareiss_determinant(Matrix<Polynomial> a) {
  return bareiss(std::move(a), Polynomial{Rational(1)});
}

Polynomial cofactor_determinant(const Matrix<Polynomial>& a) {
  require_square(a);
  std::vector<std::size_t> cols(a.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor(a, cols, 0);
}

std::vector<Rational> solve_fraction_free(const Matrix<Rational>& a, const std::vector<Rational>& b,
                                          EliminationStats* stats) {
  require_square(a);
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, "right-hand side size mismatch");

  // Augmented integer matrix, each row multiplied by the lcm of its denominators.
  Matrix<Integer> m(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& x = j < n ? a[i][j] : b[i];
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& x = j < n ? a[i][j] : b[i];
      m[i][j] = exact_div(x.get_num() * scale, x.get_den());
    }
  }

  EliminationStats local;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) {
        local.zero_pivot_encountered = true;
        if (stats) *stats = local;
        throw Error(ErrorCode::SingularSystem, "no nonzero pivot in column " + std::to_string(k));
      }
      std::swap(m[k], m[swap_row]);
      ++local.row_swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = Rational(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(m[k][j]) * x[j];
    x[k] = acc / Rational(m[k][k]);
  }
  if (stats) *stats = local;
  return x;
}

}  // namespace gpade
