#pragma once

#include <vector>

#include "riley/polynomial.hpp"

namespace riley {

/// Sturm chain of the squarefree part of a polynomial. Each element after
/// the first two is the negated remainder of the previous pair, scaled by a
/// positive rational to keep coefficients integral and coprime.
struct SturmChain {
  std::vector<UniPoly> polys;
};

struct Interval {
  Rational lo;
  Rational hi;
};

struct RootCount {
  int total_real = 0;
  /// Open intervals (lo, hi) with rational, non-root endpoints; each holds
  /// exactly one distinct real root. Empty unless isolation was requested.
  std::vector<Interval> intervals;
};

/// Thrown by count_in_interval when an endpoint is a root.
class RootOnEndpoint : public AlgebraError {
 public:
  explicit RootOnEndpoint(const Rational& endpoint);
  const Rational& endpoint() const { return endpoint_; }

 private:
  Rational endpoint_;
};

/// Throws for zero or constant input.
SturmChain sturm_chain(const UniPoly& f);

/// Sign variations of the chain at v, zeros skipped.
int sign_variations(const SturmChain& chain, const Rational& v);
int sign_variations_at_infinity(const SturmChain& chain, bool positive);

/// 1 + max |a_i / a_d|; every complex root has modulus strictly below it.
Rational cauchy_bound(const UniPoly& f);

/// Number of distinct real roots. Throws on the zero polynomial.
RootCount count_real_roots(const UniPoly& f);

/// Distinct roots in the open interval (lo, hi). Requires lo < hi and
/// f(lo), f(hi) nonzero.
int count_in_interval(const UniPoly& f, const Rational& lo, const Rational& hi);

/// Distinct roots in (a, +inf). a itself may be a root.
int count_roots_above(const UniPoly& f, const Rational& a);

inline const Rational& default_isolation_width() {
  static const Rational width(1, 64);
  return width;
}

/// Bisection from the Cauchy bound until every interval holds one root and
/// is no wider than `width`. Intervals come back sorted.
RootCount isolate_roots(const UniPoly& f, const Rational& width = default_isolation_width());

}  // namespace riley
