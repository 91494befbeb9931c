#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpade/params.hpp"
#include "gpade/polynomial.hpp"
#include "gpade/rational.hpp"

namespace gpade {

/// Block degrees n_1..n_m with the numerator degrees N_j.
///
/// The standard shape fixes N_j = Ntilde - n_j with Ntilde = N + n0 and n0 >= max n_j.
/// A generic shape takes arbitrary N_j >= N - 1 and has no n0.
class ApproxShape {
 public:
  /// Empty placeholder; use the factories for real shapes.
  ApproxShape() = default;
  static ApproxShape standard(std::vector<int> n, int n0);
  static ApproxShape generic(std::vector<int> n, std::vector<int> numerator_degrees);

  int m() const noexcept { return static_cast<int>(n_.size()); }
  /// 1-based block degree n_j.
  int n(int j) const { return n_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& block_degrees() const noexcept { return n_; }
  int max_n() const noexcept;
  bool is_standard() const noexcept { return n0_.has_value(); }
  /// Throws InvalidArgument for generic shapes.
  int n0() const;
  int Ntilde() const;
  int N() const noexcept { return N_; }
  /// 1-based N_j.
  int Nj(int j) const { return Nj_.at(static_cast<std::size_t>(j - 1)); }
  /// N_{ij} = N_j + [i == j], i = 0..m, j = 1..m.
  int Nij(int i, int j) const { return Nj(j) + (i == j ? 1 : 0); }

 private:
  std::vector<int> n_;
  std::optional<int> n0_;
  int N_ = 0;
  std::vector<int> Nj_;
};

/// Series coefficients (alpha_j)_n / (alpha_j + alpha_0)_n for n = 0..count-1.
std::vector<Rational> phi_coefficients(const GParams& gp, int j, std::size_t count);

/// Coefficients a_{i0}..a_{iN} of Q_i from the closed form; a_{iN} = 1.
std::vector<Rational> build_q(const GParams& gp, const ApproxShape& shape, int i);

/// Coefficients c_{ij mu}, mu = 0..N_{ij}, of P_{ij}.
std::vector<Rational> build_p(const GParams& gp, const ApproxShape& shape,
                              const std::vector<Rational>& q, int i, int j);

/// Series coefficients c_{ij mu} of Q_i(z) phi_j(z) for mu = 0..order.
std::vector<Rational> remainder_coeffs(const GParams& gp, const std::vector<Rational>& q, int j,
                                       int order);

/// Solves the homogeneous order conditions c_{ij mu} = 0, N_ij < mu <= N_ij + n_j, with
/// a_{iN} = 1 by exact fraction-free elimination. Independent of build_q.
/// Throws SingularSystem (never expected for valid input).
std::vector<Rational> oracle_solve(const GParams& gp, const ApproxShape& shape, int i);

/// Default series truncation for remainders: Ntilde + max n_j + 2 on standard shapes.
int default_truncation(const ApproxShape& shape);

/// The m+1 rows Q_i, P_{i1..im} together with remainder coefficients up to `truncation`.
struct PadeFamily {
  GParams params;
  ApproxShape shape;
  int truncation = 0;
  std::vector<std::vector<Rational>> q;                   // [i][k]
  std::vector<std::vector<std::vector<Rational>>> series;  // [i][j-1][mu], mu = 0..truncation

  int m() const noexcept { return params.m(); }
  Polynomial Q(int i) const;
  Polynomial P(int i, int j) const;  // degree <= N_ij
  /// c_{ij mu} for any mu <= truncation.
  const Rational& c(int i, int j, int mu) const;
};

PadeFamily build_family(const GParams& gp, const ApproxShape& shape,
                        std::optional<int> truncation = std::nullopt);

struct OrderReport {
  bool all_pass = true;
  std::vector<std::vector<bool>> pass;  // [i][j-1]
};

/// True per (i, j) iff c_{ij mu} = 0 exactly for N_ij < mu <= N_ij + n_j.
OrderReport verify_order(const PadeFamily& family);

struct OmegaResult {
  int exponent = 0;
  Rational omega;
  Polynomial determinant;
};

/// det(Q_i P_{i1} ... P_{im}) must equal omega * z^(N + sum N_j + m) with
/// omega = prod_i c_{ii, N_i + 1} != 0. Throws NonMonomialDeterminant otherwise.
OmegaResult omega_det(const PadeFamily& family);

}  // namespace gpade
