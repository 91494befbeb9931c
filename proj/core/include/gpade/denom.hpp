#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpade/check.hpp"
#include "gpade/interval.hpp"
#include "gpade/linalg.hpp"
#include "gpade/pade.hpp"
#include "gpade/params.hpp"
#include "gpade/primes.hpp"

namespace gpade {

/// A pair (theta, c(theta)) with pi(x) <= theta x / log x for every x >= c(theta).
///
/// paper: theta = 8 log 2, c = 2. sharp: theta = 1.26, c = 2, which follows from
/// pi(x) < 1.25506 x / ln x for x > 1 (Rosser and Schoenfeld, 1962). Any other pair is
/// taken on trust and flagged uncertified.
struct ThetaSpec {
  enum class Mode { Paper, Sharp, Custom };

  Mode mode = Mode::Paper;
  Interval theta;
  std::uint64_t c_theta = 2;
  bool certified = true;

  static ThetaSpec paper(long precision = kDefaultPrecision);
  static ThetaSpec sharp(long precision = kDefaultPrecision);
  static ThetaSpec custom(const Rational& theta, std::uint64_t c_theta,
                          long precision = kDefaultPrecision);
  /// "paper", "sharp" or "custom:<theta>,<c>".
  static ThetaSpec parse(std::string_view text, long precision = kDefaultPrecision);

  std::string label() const;
};

/// Certified enclosures of the size constants c_1..c_8.
struct BoundConstants {
  ThetaSpec theta;
  std::array<Interval, 8> c;

  /// 1-based: c(1) .. c(8).
  const Interval& operator()(int k) const { return c.at(static_cast<std::size_t>(k - 1)); }
};

/// Works for any theta >= 1; the size checks require a certified ThetaSpec.
BoundConstants bound_constants(const GParams& gp, const ThetaSpec& theta);

FactoredInteger compute_d1(const GParams& gp, const ApproxShape& shape);
FactoredInteger compute_d2(const GParams& gp, const ApproxShape& shape);

struct DenominatorCert {
  FactoredInteger d1;
  FactoredInteger d2;
  FactoredInteger d;  // d1 * d2
};

DenominatorCert make_certificate(const GParams& gp, const ApproxShape& shape);

struct IntegralityReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::string> first_violation;
};

/// D1 a_{ik} in Z for every i, k and D c_{ij mu} in Z for mu <= N_ij.
IntegralityReport verify_integrality(const PadeFamily& family, const DenominatorCert& cert);
/// As verify_integrality, throwing IntegralityViolation on the first failure.
void require_integrality(const PadeFamily& family, const DenominatorCert& cert);

/// Checks the explicit magnitude bounds on D(N), |a_ik|, |Q_i(z)| and |P_ij(z)| at the
/// sample points (|z| >= 2). Left sides are exact, right sides certified enclosures.
/// Returns NotApplicable entries when min(n0, N) < c(theta).
std::vector<Check> check_size_bounds(const PadeFamily& family, const DenominatorCert& cert,
                                     const BoundConstants& constants,
                                     const std::vector<Rational>& sample_points);

/// Ntilde_1 = max{(m+1) c(theta), c1 + c5, log(2 dtilde) + 4 delta(p) log|a|}.
Interval ntilde1(const GParams& gp, const BoundConstants& constants, const Rational& beta,
                 std::uint64_t p);

/// Q_i = D b^Ntilde Q_i(beta), P_ij = D b^Ntilde P_ij(beta), all integers.
struct ScaledSystem {
  Rational beta;
  Integer a;
  Integer b;
  std::vector<Integer> Q;        // [i]
  Matrix<Integer> P;             // [i][j-1]
  Integer determinant;           // of the (m+1)x(m+1) matrix (Q_i P_i1 ... P_im)
};

/// Requires |beta| >= 2 and the p-adic domain condition on a; throws DomainViolation.
/// Throws IntegralityViolation if a scaled value is not an integer and SingularSystem if
/// the determinant vanishes.
ScaledSystem scaled_integers(const PadeFamily& family, const DenominatorCert& cert,
                             const Rational& beta, std::uint64_t p);

/// Magnitude bounds on the scaled integers. NotApplicable below Ntilde_1.
std::vector<Check> check_scaled_bounds(const PadeFamily& family, const ScaledSystem& scaled,
                                       const BoundConstants& constants, std::uint64_t p);

struct RemainderPadicBound {
  int delta_p = 0;
  /// 2 dtilde |a|^{4 delta(p)} Ntilde^{delta(p)} |a|_p^{Ntilde+1}, bounds |D R_ij(beta)|_p.
  Rational valuation_bound;
  /// log of e^{2 Ntilde} |a|_p^{Ntilde+1}, bounds log |D b^Ntilde R_ij(beta)|_p.
  Interval scaled_log_bound;
  Interval ntilde1;
  bool scaled_applicable = false;  // Ntilde >= Ntilde_1
};

/// Throws DomainViolation when the p-adic domain check fails.
RemainderPadicBound remainder_padic_bound(const GParams& gp, const ApproxShape& shape,
                                          const Rational& beta, std::uint64_t p,
                                          const BoundConstants& constants);

struct RemainderValuation {
  int i = 0;
  int j = 0;
  std::optional<std::int64_t> truncated_valuation;  // of D * sum_{mu <= T} c_ij mu beta^mu
  std::int64_t min_term_valuation = 0;
  Verdict direct = Verdict::NotApplicable;  // against valuation_bound
  Verdict scaled = Verdict::NotApplicable;  // against scaled_log_bound
};

/// Exact valuations of the truncated remainders D R_ij(beta) (terms up to `truncation`)
/// against both bounds.
std::vector<RemainderValuation> check_remainder_valuations(const PadeFamily& family,
                                                           const DenominatorCert& cert,
                                                           const Rational& beta, std::uint64_t p,
                                                           const BoundConstants& constants,
                                                           int truncation);

}  // namespace gpade
