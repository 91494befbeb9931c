#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpade/check.hpp"
#include "gpade/denom.hpp"
#include "gpade/pade.hpp"
#include "gpade/params.hpp"

namespace gpade {

/// A p-adic number known modulo p^abs_precision: value = center + O(p^abs_precision).
///
/// Only nonvanishing is ever certified. When v_p(center) >= abs_precision the value is
/// "below precision": |value|_p <= p^{-abs_precision}, nothing more.
class PAdicEnclosure {
 public:
  /// Exact value (infinite precision).
  static PAdicEnclosure exact(std::uint64_t p, Rational value);
  static PAdicEnclosure approximate(std::uint64_t p, Rational center, std::int64_t abs_precision);

  std::uint64_t p() const noexcept { return p_; }
  const Rational& center() const noexcept { return center_; }
  bool is_exact() const noexcept { return !abs_precision_.has_value(); }
  /// Absolute precision; nullopt for exact values.
  const std::optional<std::int64_t>& abs_precision() const noexcept { return abs_precision_; }

  /// Certified valuation, or nullopt when below precision (or exactly zero).
  std::optional<std::int64_t> valuation() const;
  bool below_precision() const { return !valuation().has_value(); }
  /// Leading valuation when certified, else the absolute precision.
  std::int64_t valuation_offset() const;
  /// Number of known p-adic digits of the unit part (0 when below precision).
  std::int64_t relative_precision() const;
  /// (value / p^valuation) mod p^relative_precision; exact values use 64 digits.
  Integer unit_residue() const;

  PAdicEnclosure& operator+=(const PAdicEnclosure& rhs);
  PAdicEnclosure& operator*=(const Rational& c);
  friend PAdicEnclosure operator+(PAdicEnclosure a, const PAdicEnclosure& b) { return a += b; }
  friend PAdicEnclosure operator*(PAdicEnclosure a, const Rational& c) { return a *= c; }

 private:
  PAdicEnclosure(std::uint64_t p, Rational center, std::optional<std::int64_t> abs_precision);
  std::uint64_t p_ = 2;
  Rational center_;
  std::optional<std::int64_t> abs_precision_;
};

/// phi_j(beta) in Q_p with absolute precision >= k. Requires the domain check; beta = 0
/// gives the exact value 1. Throws DomainViolation.
PAdicEnclosure eval_phi_padic(const GParams& gp, int j, const Rational& beta, std::uint64_t p,
                              std::int64_t k);

struct LinearFormValue {
  bool certified_nonzero = false;
  /// Exact valuation when certified, else the precision exponent k with |L|_p <= p^{-k}.
  std::int64_t valuation = 0;
  /// |L|_p when certified, else the bound p^{-k}.
  Rational abs_value;
};

/// L = ell_0 + sum_j ell_j phi_j(beta) from enclosures of phi_1..phi_m (same prime).
LinearFormValue linear_form_valuation(const std::vector<PAdicEnclosure>& values,
                                      const std::vector<Integer>& ell);

/// Coefficient vector with its heights and the exponents tau, delta.
struct LinearFormInstance {
  std::vector<Integer> ell;  // ell_0..ell_m, not all zero
  std::vector<Integer> h;    // h_0 = max |ell_i|, h_j = max{1, |ell_j|}
  Integer Htilde;            // prod h_j
  Rational tau;
  Rational delta;
};

LinearFormInstance make_linear_form(std::vector<Integer> ell, const Rational& tau,
                                    const Rational& delta);

struct BlockSelection {
  std::vector<int> raw;       // floor(log(h_j Htilde^tau) / log|a|), j = 0..m
  ApproxShape shape;
  bool clamped = false;       // some raw n_j was 0 and raised to 1
  bool ntilde_bound = false;  // Ntilde <= (1 + (m+1) tau) log Htilde / log|a|
  bool n0_bound = false;      // n0 <= (1 + tau) log Htilde / log|a|
};

/// Requires |a| >= 2; all comparisons are exact integer powers.
BlockSelection select_block_degrees(const LinearFormInstance& instance, const Integer& a);

struct Theorem5Report {
  Rational beta;
  std::uint64_t p = 2;
  LinearFormInstance form;
  std::string theta_label;
  bool theta_certified = true;

  std::vector<Check> hypotheses;  // exponent, domain, size and height conditions
  bool hypotheses_hold = false;

  BoundConstants constants;
  Interval ntilde1;
  Interval log_H0;
  Interval log_Htilde;

  // Specialization tau = eps/(m+1), delta = eps/(8(m+1)).
  Rational epsilon;
  bool delta_matches_specialization = false;
  Interval log_ctilde;

  BlockSelection blocks;
  int witness_index = -1;
  Integer Lambda;
  std::int64_t Lambda_valuation = 0;
  LinearFormValue remainder_sum;  // sum_j R_ij ell_j = Q_i L - Lambda
  LinearFormValue L;
  std::vector<Check> chain;       // remainder comparison, explicit lower bound, final bound
  bool chain_verified = false;
  std::string verdict;
};

struct Theorem5Options {
  std::int64_t max_precision = 4096;
};

/// Checks the hypotheses, picks block degrees for ell, builds the family and verifies the
/// inequality chain at this instance. Requires |beta| >= 2 and the domain condition.
Theorem5Report theorem5_audit(const GParams& gp, const Rational& beta, std::uint64_t p,
                              const LinearFormInstance& instance, const ThetaSpec& theta,
                              const Theorem5Options& options = {});

struct Theorem3Constants {
  std::string theta_label;
  Interval c9;           // c2 + (m+1) c8 at the given theta
  Interval c9_at_one;    // c2 + (m+1) c8 at theta = 1
  Interval log_C;        // closed-form display
  bool cross_check = false;  // c9_at_one and log_C overlap
};

Theorem3Constants theorem3_constants(const GParams& gp, const ThetaSpec& theta);

struct GlobalProbeEntry {
  std::uint64_t p = 2;
  LinearFormValue value;
};

struct GlobalProbe {
  Integer a;
  std::vector<Integer> ell;
  std::vector<GlobalProbeEntry> primes;
  bool certified_nonzero = false;  // some p | a certifies L != 0
};

/// Evaluates L = ell_0 + sum ell_j phi_j(a) at precision k in Q_p for every p | a.
/// Requires |a| > 1 and gcd(a, s) = 1.
GlobalProbe probe_a_global(const GParams& gp, const Integer& a, const std::vector<Integer>& ell,
                           std::int64_t k);

}  // namespace gpade
