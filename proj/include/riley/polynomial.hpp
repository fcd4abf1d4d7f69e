#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "riley/rational.hpp"

namespace riley {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The stored form is always trimmed: the leading coefficient is
/// nonzero unless the polynomial is zero, in which case nothing is stored.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// The polynomial z.
  static UniPoly variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of z^i; zero past the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b. Throws on b = 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Throws when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly derivative(const UniPoly& a);

/// a / gcd(a, a'), made monic. Throws on zero input.
UniPoly squarefree_part(const UniPoly& a);

/// Divides by the leading coefficient; zero stays zero.
UniPoly monic(const UniPoly& a);

/// Positive rational multiple of a with coprime integer coefficients.
/// The sign of every coefficient is preserved.
UniPoly primitive_part(const UniPoly& a);

Rational eval(const UniPoly& a, const Rational& v);
double eval(const UniPoly& a, double v);

/// outer(inner(z)).
UniPoly compose(const UniPoly& outer, const UniPoly& inner);

/// Power of a polynomial by repeated squaring.
UniPoly pow(const UniPoly& a, unsigned exponent);

}  // namespace riley
