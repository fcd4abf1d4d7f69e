#pragma once

#include <vector>

#include "riley/polynomial.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

/// Even continued fraction p/q = e1 - 1/(e2 - 1/(... - 1/ek)), all entries
/// even and nonzero.
struct EvenCF {
  std::vector<long> entries;
};

/// Dense symmetric integer matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int size);

  int size() const { return size_; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, const Integer& v);
  bool is_tridiagonal() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * size_ + j); }

  int size_;
  std::vector<Integer> data_;
};

struct SignatureResult {
  int sigma_abs = 0;
  /// Signed value under the convention that the continued fraction is
  /// taken for the even representative q* in {q, p - q}.
  int sigma_signed = 0;
  EvenCF cf;
  Integer det;
};

/// Table values for the double twist families: EE 2, EN 0, OE 2 - 2n, ON 2n.
int signature_family(const DoubleTwist& d);

/// Expansion of p/q* with q* the even one of q, p - q. Checks the
/// reconstruction and that the length is even; throws otherwise.
EvenCF even_cf(const KnotId& k);

/// Exact value of the continued fraction.
Rational evaluate_cf(const EvenCF& cf);

/// Tridiagonal matrix with the entries on the diagonal and 1 off it.
SymMatrix goeritz_like_matrix(const EvenCF& cf);

/// det(lambda I - M), by the three-term recurrence when M is tridiagonal
/// and by Faddeev-LeVerrier otherwise.
UniPoly characteristic_polynomial(const SymMatrix& m);
UniPoly charpoly_faddeev_leverrier(const SymMatrix& m);
UniPoly charpoly_tridiagonal(const SymMatrix& m);

Integer determinant(const SymMatrix& m);

/// (#positive - #negative eigenvalues), counted exactly with Sturm chains
/// on the characteristic polynomial. Throws on singular input.
int matrix_signature(const SymMatrix& m);

/// Signature via the even continued fraction. Throws unless |det| = p.
SignatureResult signature_two_bridge(const KnotId& k);

}  // namespace riley
