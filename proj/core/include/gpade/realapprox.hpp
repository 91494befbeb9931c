#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpade/check.hpp"
#include "gpade/denom.hpp"
#include "gpade/params.hpp"

namespace gpade {

/// [lower, upper] containing the value; upper - lower is the certified tail bound.
struct RealEnclosure {
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

/// Partial sum of T+1 terms of phi_j(z), |z| < 1, enclosed using the tail bound
/// |z|^{T+1} / (1 - |z|). Throws InvalidArgument for |z| >= 1.
RealEnclosure eval_phi_real(const GParams& gp, const Rational& z, int terms, int j = 1);

/// Smallest n* with (n+1)^2 <= vartheta^n for every n >= n*; vartheta > 1.
std::uint64_t c_vartheta(const Rational& vartheta);

struct Theorem4Constants {
  Interval a1;                // the most specific applicable variant
  std::string a1_variant;     // "general", "integer-alpha0" or "alpha0-one"
  Interval a1_general;
  std::optional<Interval> a1_integer_alpha0;
  std::optional<Interval> a1_alpha0_one;
  Interval a2;
  std::uint64_t c_theta = 2;
  std::uint64_t c_vartheta = 0;
  Rational vartheta;
  ThetaSpec theta;
};

/// Requires m = 1.
Theorem4Constants theorem4_constants(const GParams& gp, const ThetaSpec& theta,
                                     const Rational& vartheta);

struct RestrictedInstance {
  Integer a;        // nonzero
  Integer b;        // >= 1
  Integer B = 1;    // >= 1, B <= b^t
  Rational t = 0;   // >= 0
  long M = 0;
  std::optional<Integer> candidate_n;  // nearest integer to B b^M phi(a/b) when absent
};

/// Smallest integer b with b >= (a1 |a|)^6.
Integer smallest_admissible_b(const Theorem4Constants& constants, const Integer& a);

/// Certified enclosure of M_0. Throws HypothesisFailure when b < (a1|a|)^6 or B > b^t.
Interval compute_M0(const RestrictedInstance& instance, const Theorem4Constants& constants);

struct Theorem4Report {
  Interval a1, a2, x, M0, E1;
  long h = 0;
  int n0 = 0;
  int n1 = 0;
  FactoredInteger D1, D2;
  Integer n;           // candidate numerator actually audited
  int witness_index = -1;
  int series_terms = 0;
  RealEnclosure phi;
  std::vector<Check> checks;
  bool final_verdict = false;
};

/// End-to-end audit of the restricted approximation bound at one instance.
/// Throws HypothesisFailure when b < (a1|a|)^6 or M < M_0 and PrecisionInsufficient when a
/// certified floor cannot be resolved.
Theorem4Report theorem4_audit(const GParams& gp, const RestrictedInstance& instance,
                              const Theorem4Constants& constants);

/// If b^eps > a1^18 |a|^17, checks |phi(a/b) - n/(B b^M)| >= 1/(B b^{M(1+eps)}) on an
/// audited instance; NotApplicable otherwise.
Check epsilon_corollary(const Theorem4Report& report, const RestrictedInstance& instance,
                        const Rational& eps);

}  // namespace gpade
