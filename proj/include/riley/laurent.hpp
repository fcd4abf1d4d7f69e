#pragma once

#include <map>
#include <optional>

#include "riley/bipoly.hpp"
#include "riley/polynomial.hpp"

namespace riley {

/// Laurent polynomial in s with coefficients in Q[y]: a finite map from
/// s-exponent to a nonzero polynomial in y. Zero coefficients are never
/// stored, so two equal values have identical maps.
class SymLaurent {
 public:
  using Terms = std::map<int, UniPoly>;

  SymLaurent() = default;
  explicit SymLaurent(Terms terms);

  static SymLaurent constant(const Rational& c);
  /// c(y) * s^exponent.
  static SymLaurent monomial(int exponent, const UniPoly& c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  UniPoly coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  SymLaurent& operator+=(const SymLaurent& other);
  SymLaurent& operator-=(const SymLaurent& other);

  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
  friend SymLaurent operator-(SymLaurent a);
  friend bool operator==(const SymLaurent& a, const SymLaurent& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int exponent, const UniPoly& c);

  Terms terms_;
};

/// First exponent k > 0 whose coefficient differs from that of -k, if any.
std::optional<int> asymmetric_exponent(const SymLaurent& f);

/// Raised by symmetrize_to_xy; carries the offending exponent.
class SymmetryError : public AlgebraError {
 public:
  explicit SymmetryError(int exponent);
  int exponent() const { return exponent_; }

 private:
  int exponent_;
};

/// Rewrites an s <-> 1/s invariant Laurent polynomial in x = s + 1/s.
BiPoly symmetrize_to_xy(const SymLaurent& f);

/// Substitutes s := s0 (s0 nonzero), leaving a polynomial in y.
UniPoly eval_s(const SymLaurent& f, const Rational& s0);

}  // namespace riley
