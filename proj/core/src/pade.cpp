#include "gpade/pade.hpp"

#include <algorithm>
#include <numeric>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"
#include "gpade/linalg.hpp"

namespace gpade {

ApproxShape ApproxShape::standard(std::vector<int> n, int n0) {
  if (n.empty()) throw Error(ErrorCode::InvalidArgument, "shape needs at least one block degree");
  for (int nj : n) {
    if (nj < 1) throw Error(ErrorCode::InvalidArgument, "block degrees must be positive");
  }
  const int max_n = *std::max_element(n.begin(), n.end());
  if (n0 < max_n) {
    throw Error(ErrorCode::InvalidArgument,
                "n0 = " + std::to_string(n0) + " is below max n_j = " + std::to_string(max_n));
  }
  ApproxShape s;
  s.N_ = std::accumulate(n.begin(), n.end(), 0);
  s.n0_ = n0;
  for (int nj : n) s.Nj_.push_back(s.N_ + n0 - nj);
  s.n_ = std::move(n);
  return s;
}

ApproxShape ApproxShape::generic(std::vector<int> n, std::vector<int> numerator_degrees) {
  if (n.empty() || n.size() != numerator_degrees.size()) {
    throw Error(ErrorCode::InvalidArgument, "shape needs matching n_j and N_j lists");
  }
  for (int nj : n) {
    if (nj < 1) throw Error(ErrorCode::InvalidArgument, "block degrees must be positive");
  }
  ApproxShape s;
  s.N_ = std::accumulate(n.begin(), n.end(), 0);
  for (int Nj : numerator_degrees) {
    if (Nj < s.N_ - 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "N_j = " + std::to_string(Nj) + " is below N - 1 = " + std::to_string(s.N_ - 1));
    }
  }
  s.n_ = std::move(n);
  s.Nj_ = std::move(numerator_degrees);
  return s;
}

int ApproxShape::max_n() const noexcept {
  return n_.empty() ? 0 : *std::max_element(n_.begin(), n_.end());
}

int ApproxShape::n0() const {
  if (!n0_) throw Error(ErrorCode::InvalidArgument, "generic shape has no n0");
  return *n0_;
}

int ApproxShape::Ntilde() const { return N_ + n0(); }

namespace {

void check_row(const GParams& gp, const ApproxShape& shape, int i) {
  if (gp.m() != shape.m()) {
    throw Error(ErrorCode::InvalidArgument, "shape has " + std::to_string(shape.m()) +
                                                " blocks but m = " + std::to_string(gp.m()));
  }
  if (i < 0 || i > gp.m()) throw Error(ErrorCode::InvalidArgument, "row index out of range");
}

std::vector<Rational> convolve(const std::vector<Rational>& q, const std::vector<Rational>& phi,
                               int upto) {
  std::vector<Rational> out(static_cast<std::size_t>(upto) + 1, Rational(0));
  for (int mu = 0; mu <= upto; ++mu) {
    Rational acc = 0;
    const int kmax = std::min<int>(mu, static_cast<int>(q.size()) - 1);
    for (int k = 0; k <= kmax; ++k) acc += q[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(mu - k)];
    out[static_cast<std::size_t>(mu)] = acc;
  }
  return out;
}

}  // namespace

std::vector<Rational> phi_coefficients(const GParams& gp, int j, std::size_t count) {
  if (j < 1 || j > gp.m()) throw Error(ErrorCode::InvalidArgument, "series index out of range");
  std::vector<Rational> out;
  out.reserve(count);
  Rational term = 1;
  const Rational& a = gp.alpha(j);
  const Rational b = a + gp.alpha(0);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(term);
    term *= (a + static_cast<long>(n)) / (b + static_cast<long>(n));
  }
  return out;
}

std::vector<Rational> build_q(const GParams& gp, const ApproxShape& shape, int i) {
  check_row(gp, shape, i);
  const int N = shape.N();
  const int m = gp.m();
  const Rational& a0 = gp.alpha(0);

  // weight[l] collects every factor of the l-th summand that does not depend on k.
  std::vector<Rational> weight(static_cast<std::size_t>(N));
  for (int l = 0; l < N; ++l) {
    const auto rest = static_cast<std::uint64_t>(N - l - 1);
    Rational w = pochhammer(a0 + (l + 1), rest) / pochhammer(Rational(1), rest);
    for (int j = 1; j <= m; ++j) {
      const int shift = shape.Nij(i, j) - N;
      const auto nj = static_cast<std::uint64_t>(shape.n(j));
      w *= pochhammer(gp.alpha(j) + a0 + (shift + l + 1), nj) /
           pochhammer(gp.alpha(j) + (shift + 1), nj);
    }
    weight[static_cast<std::size_t>(l)] = (l % 2 == 0) ? Rational(-w) : w;
  }

  // binom[t] = (alpha0 - 1)_t / t!
  std::vector<Rational> binom(static_cast<std::size_t>(N) + 1);
  binom[0] = 1;
  for (int t = 1; t <= N; ++t) {
    binom[static_cast<std::size_t>(t)] = binom[static_cast<std::size_t>(t - 1)] * (a0 - 1 + (t - 1)) / t;
  }

  std::vector<Rational> a(static_cast<std::size_t>(N) + 1);
  a[static_cast<std::size_t>(N)] = 1;
  for (int k = 0; k < N; ++k) {
    Rational acc = 0;
    for (int l = k; l < N; ++l) {
      acc += binom[static_cast<std::size_t>(l - k)] * weight[static_cast<std::size_t>(l)];
    }
    a[static_cast<std::size_t>(N - k - 1)] = acc;
  }
  return a;
}

std::vector<Rational> build_p(const GParams& gp, const ApproxShape& shape,
                              const std::vector<Rational>& q, int i, int j) {
  check_row(gp, shape, i);
  const int deg = shape.Nij(i, j);
  return convolve(q, phi_coefficients(gp, j, static_cast<std::size_t>(deg) + 1), deg);
}

std::vector<Rational> remainder_coeffs(const GParams& gp, const std::vector<Rational>& q, int j,
                                       int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  return convolve(q, phi_coefficients(gp, j, static_cast<std::size_t>(order) + 1), order);
}

std::vector<Rational> oracle_solve(const GParams& gp, const ApproxShape& shape, int i) {
  check_row(gp, shape, i);
  const int N = shape.N();
  Matrix<Rational> a;
  std::vector<Rational> rhs;
  for (int j = 1; j <= gp.m(); ++j) {
    const int lo = shape.Nij(i, j) + 1;
    const int hi = shape.Nij(i, j) + shape.n(j);
    auto phi = phi_coefficients(gp, j, static_cast<std::size_t>(hi) + 1);
    for (int mu = lo; mu <= hi; ++mu) {
      std::vector<Rational> row(static_cast<std::size_t>(N));
      for (int k = 0; k < N; ++k) row[static_cast<std::size_t>(k)] = phi[static_cast<std::size_t>(mu - k)];
      a.push_back(std::move(row));
      rhs.push_back(-phi[static_cast<std::size_t>(mu - N)]);
    }
  }
  auto x = solve_fraction_free(a, rhs);
  x.emplace_back(1);
  return x;
}

int default_truncation(const ApproxShape& shape) {
  if (shape.is_standard()) return shape.Ntilde() + shape.max_n() + 2;
  int top = 0;
  for (int j = 1; j <= shape.m(); ++j) top = std::max(top, shape.Nj(j) + 1 + shape.n(j));
  return top + 1;
}

Polynomial PadeFamily::Q(int i) const { return Polynomial(q.at(static_cast<std::size_t>(i))); }

Polynomial PadeFamily::P(int i, int j) const {
  const auto& s = series.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j - 1));
  const auto deg = static_cast<std::size_t>(shape.Nij(i, j));
  return Polynomial(std::vector<Rational>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(deg + 1)));
}

const Rational& PadeFamily::c(int i, int j, int mu) const {
  return series.at(static_cast<std::size_t>(i))
      .at(static_cast<std::size_t>(j - 1))
      .at(static_cast<std::size_t>(mu));
}

PadeFamily build_family(const GParams& gp, const ApproxShape& shape, std::optional<int> truncation) {
  check_row(gp, shape, 0);
  PadeFamily f{gp, shape, truncation.value_or(default_truncation(shape)), {}, {}};
  int needed = 0;
  for (int j = 1; j <= shape.m(); ++j) needed = std::max(needed, shape.Nj(j) + 1 + shape.n(j));
  if (f.truncation < needed) {
    throw Error(ErrorCode::InvalidArgument,
                "truncation " + std::to_string(f.truncation) + " is below " + std::to_string(needed));
  }
  for (int i = 0; i <= gp.m(); ++i) {
    f.q.push_back(build_q(gp, shape, i));
    std::vector<std::vector<Rational>> rows;
    for (int j = 1; j <= gp.m(); ++j) rows.push_back(remainder_coeffs(gp, f.q.back(), j, f.truncation));
    f.series.push_back(std::move(rows));
  }
  return f;
}

OrderReport verify_order(const PadeFamily& family) {
  OrderReport report;
  const auto& shape = family.shape;
  for (int i = 0; i <= family.m(); ++i) {
    std::vector<bool> row;
    for (int j = 1; j <= family.m(); ++j) {
      bool ok = true;
      for (int mu = shape.Nij(i, j) + 1; mu <= shape.Nij(i, j) + shape.n(j); ++mu) {
        if (family.c(i, j, mu) != 0) {
          ok = false;
          break;
        }
      }
      row.push_back(ok);
      report.all_pass = report.all_pass && ok;
    }
    report.pass.push_back(std::move(row));
  }
  return report;
}

OmegaResult omega_det(const PadeFamily& family) {
  const int m = family.m();
  const auto& shape = family.shape;
  Matrix<Polynomial> mat;
  for (int i = 0; i <= m; ++i) {
    std::vector<Polynomial> row{family.Q(i)};
    for (int j = 1; j <= m; ++j) row.push_back(family.P(i, j));
    mat.push_back(std::move(row));
  }
  OmegaResult out;
  out.determinant = m <= 3 ? cofactor_determinant(mat) : bareiss_determinant(std::move(mat));
  out.exponent = shape.N() + m;
  out.omega = 1;
  for (int j = 1; j <= m; ++j) {
    out.exponent += shape.Nj(j);
    out.omega *= family.c(j, j, shape.Nj(j) + 1);
  }
  if (out.omega == 0) {
    throw Error(ErrorCode::NonMonomialDeterminant, "some c_{ii,N_i+1} vanishes");
  }
  const Polynomial expected = Polynomial::monomial(out.omega, static_cast<std::size_t>(out.exponent));
  if (!(out.determinant == expected)) {
    throw Error(ErrorCode::NonMonomialDeterminant,
                "determinant has degree " + std::to_string(out.determinant.degree()) + " and order " +
                    std::to_string(out.determinant.order()) + ", expected " + to_string(out.omega) +
                    " z^" + std::to_string(out.exponent));
  }
  return out;
}

}  // namespace gpade
