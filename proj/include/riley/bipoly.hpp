#pragma once

#include <string>
#include <vector>

#include "riley/polynomial.hpp"

namespace riley {

/// Polynomial in y whose coefficients are polynomials in x. Trimmed in y;
/// every stored coefficient is itself a trimmed UniPoly in x.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coeffs);

  static BiPoly constant(const Rational& c);
  /// Lifts a polynomial in x (y-degree 0).
  static BiPoly from_x(const UniPoly& px);
  /// Lifts a polynomial in y with constant coefficients.
  static BiPoly from_y(const UniPoly& py);
  static BiPoly x();
  static BiPoly y();

  int y_degree() const { return static_cast<int>(y_coeffs_.size()) - 1; }
  int x_degree() const;
  bool is_zero() const { return y_coeffs_.empty(); }
  UniPoly coeff_y(int k) const;
  const std::vector<UniPoly>& y_coeffs() const { return y_coeffs_; }

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.y_coeffs_ == b.y_coeffs_; }

 private:
  void trim();

  std::vector<UniPoly> y_coeffs_;
};

/// Substitutes x := x0, leaving a polynomial in y.
UniPoly eval_bi(const BiPoly& a, const Rational& x0);

/// Substitutes y := y0, leaving a polynomial in x.
UniPoly eval_y(const BiPoly& a, const Rational& y0);

/// Substitutes y := g(x), leaving a polynomial in x.
UniPoly substitute_y(const BiPoly& a, const UniPoly& g);

/// outer(inner(x, y)).
BiPoly compose(const UniPoly& outer, const BiPoly& inner);

BiPoly pow(const BiPoly& a, unsigned exponent);

}  // namespace riley
