#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace riley {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized; all constructors below do so.
using Rational = mpq_class;

/// Error raised for malformed input or violated preconditions anywhere in
/// the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a/b" or an integer literal ("-7", "+3"). Whitespace around the
/// value is ignored; anything else is rejected.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw AlgebraError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace riley
