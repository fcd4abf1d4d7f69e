#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riley/bipoly.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

/// One knot checked against "Phi_K(2, y) = 0 has at least |sigma|/2 real
/// solutions".
struct ConjectureRecord {
  KnotId knot = KnotId::make(3, 1);
  int sigma_abs = 0;
  int parabolic_degree = 0;
  /// Distinct real roots of Phi_K(2, y), excluding y = 2.
  int real_roots = 0;
  bool holds = false;
  double timing_ms = 0.0;
  /// y = 2 was a root and was left out of real_roots.
  bool y2_root_excluded = false;
  /// The double twist family this knot belongs to, if any.
  std::optional<DoubleTwist> family;
  /// holds is false and the knot is not a double twist knot.
  bool counterexample_candidate = false;
  /// Non-empty when an internal validation failed for this knot.
  std::string error;
};

struct ScanSummary {
  int records = 0;
  int holds = 0;
  int violations = 0;
  int counterexample_candidates = 0;
  int errors = 0;
};

struct ScanResult {
  std::vector<ConjectureRecord> records;  // sorted by (p, q)
  ScanSummary summary;
};

/// Matches any presentation of k (q^{±1}, mirrors included) to a double
/// twist family member with the same p.
std::optional<DoubleTwist> double_twist_of(const KnotId& k);

/// Throws RileyValidationError (or the signature module's errors) on
/// internal inconsistency, including a parabolic degree other than (p-1)/2.
ConjectureRecord check_conjecture(const KnotId& k);

/// Canonical ids (q = min(q, q^-1 mod p)) with odd 3 <= p <= p_max, in
/// (p, q) order. Mirrors are separate entries.
std::vector<KnotId> canonical_knots(int p_max);

/// Runs check_conjecture on every canonical knot with p <= p_max using
/// `jobs` worker threads. Per-knot failures land in the record's error
/// field; the scan always completes.
ScanResult scan_conjecture(int p_max, int jobs = 1);

enum class ExpectKind { exactly, at_least };

struct Expectation {
  ExpectKind kind;
  int value;

  bool satisfied_by(int observed) const {
    return kind == ExpectKind::exactly ? observed == value : observed >= value;
  }
  /// "exact-one", "zero", "at-least(k)".
  std::string to_string() const;
};

struct TheoremRecord {
  DoubleTwist family;
  Rational x0;
  /// Hypothesis on x0 certified by exact rational comparison.
  bool in_range = false;
  Expectation expected;
  int observed_roots = 0;
  /// Observed count meets the expectation; vacuously true out of range.
  bool holds = false;
};

/// True iff 4 - 1/(mn) < x0^2 <= 4.
bool theorem1_in_range(int m, int n, const Rational& x0);

/// True iff |x0| >= 2 cos(pi / (4m + 2)). Decided exactly: the bound
/// squared minus 2 is the largest root of S_m - S_{m-1}, so the test is
/// that no root of S_m - S_{m-1} exceeds x0^2 - 2.
bool theorem2_in_range(int m, const Rational& x0);

/// (J(2m, 2n), J(2m, -2n)) at x0.
std::pair<TheoremRecord, TheoremRecord> check_theorem1(int m, int n, const Rational& x0);

/// (J(2m+1, 2n), J(2m+1, -2n)) at x0.
std::pair<TheoremRecord, TheoremRecord> check_theorem2(int m, int n, const Rational& x0);

/// Same checks with the closed-form polynomial already built.
TheoremRecord check_theorem_at(const DoubleTwist& d, const BiPoly& phi, const Rational& x0);

/// x0 values 2 and 2 - 1/(16mn).
std::vector<Rational> theorem1_default_x0(int m, int n);
/// 2, 5/2, 3.
std::vector<Rational> theorem2_default_x0();

/// All m <= mmax, n <= nmax; x0 list per (m, n) defaults as above when
/// `x0s` is empty.
std::vector<TheoremRecord> sweep_theorem1(int mmax, int nmax, const std::vector<Rational>& x0s = {});
std::vector<TheoremRecord> sweep_theorem2(int mmax, int nmax, const std::vector<Rational>& x0s = {});

struct CrossCheck {
  DoubleTwist family;
  KnotId knot = KnotId::make(3, 1);
  bool equal = false;
  /// Coefficient-level differences when not equal.
  std::string diff;
};

/// Closed form against the matrix-product construction on the family's own
/// presentation, exact BiPoly equality after normalization.
CrossCheck cross_validate(const DoubleTwist& d);

}  // namespace riley
