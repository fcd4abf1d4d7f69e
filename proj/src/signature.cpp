#include "riley/signature.hpp"

#include <cstdlib>

#include "riley/real_roots.hpp"

namespace riley {

SymMatrix::SymMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
  if (size < 0) throw AlgebraError("negative matrix size");
}

void SymMatrix::set(int i, int j, const Integer& v) {
  data_[index(i, j)] = v;
  data_[index(j, i)] = v;
}

bool SymMatrix::is_tridiagonal() const {
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (std::abs(i - j) > 1 && (*this)(i, j) != 0) return false;
  return true;
}

int signature_family(const DoubleTwist& d) {
  switch (d.family) {
    case Family::EE: return 2;
    case Family::EN: return 0;
    case Family::OE: return 2 - 2 * d.n;
    case Family::ON: return 2 * d.n;
  }
  throw AlgebraError("unknown family");
}

EvenCF even_cf(const KnotId& k) {
  const long q_even = k.q() % 2 == 0 ? k.q() : k.p() - k.q();
  const Rational target(k.p(), q_even);
  EvenCF cf;
  // value = num / den, den != 0; rounding never ties because num and den
  // have opposite parity at every step.
  Integer num = k.p(), den = q_even;
  for (;;) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    // entry = 2 * round(num / (2 den))
    Integer twice = 2 * den;
    Integer shifted = 2 * num + twice;  // round(a/b) = floor((2a + b) / 2b)
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_mpz_t(), Integer(2 * twice).get_mpz_t());
    const Integer entry = 2 * rounded;
    if (!entry.fits_slong_p() || entry == 0) throw AlgebraError("even continued fraction entry out of range");
    cf.entries.push_back(entry.get_si());
    const Integer r = entry * den - num;  // value' = den / r
    if (r == 0) break;
    num = den;
    den = r;
  }
  if (evaluate_cf(cf) != target) throw AlgebraError("even continued fraction does not reconstruct p/q for " + k.to_string());
  if (cf.entries.size() % 2 != 0) throw AlgebraError("even continued fraction of a knot has odd length for " + k.to_string());
  return cf;
}

Rational evaluate_cf(const EvenCF& cf) {
  if (cf.entries.empty()) throw AlgebraError("empty continued fraction");
  Rational v(cf.entries.back());
  for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) {
    if (v == 0) throw AlgebraError("continued fraction divides by zero");
    v = Rational(*it) - 1 / v;
  }
  return v;
}

SymMatrix goeritz_like_matrix(const EvenCF& cf) {
  const int k = static_cast<int>(cf.entries.size());
  SymMatrix m(k);
  for (int i = 0; i < k; ++i) {
    m.set(i, i, Integer(cf.entries[static_cast<std::size_t>(i)]));
    if (i + 1 < k) m.set(i, i + 1, 1);
  }
  return m;
}

UniPoly charpoly_tridiagonal(const SymMatrix& m) {
  if (!m.is_tridiagonal()) throw AlgebraError("matrix is not tridiagonal");
  const UniPoly lambda = UniPoly::variable();
  UniPoly prev = UniPoly::constant(1);
  if (m.size() == 0) return prev;
  UniPoly cur = lambda - UniPoly::constant(Rational(m(0, 0)));
  for (int i = 1; i < m.size(); ++i) {
    const Rational off(m(i, i - 1));
    UniPoly next = (lambda - UniPoly::constant(Rational(m(i, i)))) * cur - prev * (off * off);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly charpoly_faddeev_leverrier(const SymMatrix& m) {
  const int n = m.size();
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  std::vector<Rational> mk(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<Rational> next(mk.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational acc = 0;
        for (int l = 0; l < n; ++l) acc += Rational(m(i, l)) * mk[idx(l, j)];
        next[idx(i, j)] = acc;
      }
    for (int i = 0; i < n; ++i) next[idx(i, i)] += coeffs[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    // c_{n-k} = -tr(A M_k) / k
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += Rational(m(i, l)) * mk[idx(l, i)];
    coeffs[static_cast<std::size_t>(n - k)] = -tr / k;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly characteristic_polynomial(const SymMatrix& m) {
  return m.is_tridiagonal() ? charpoly_tridiagonal(m) : charpoly_faddeev_leverrier(m);
}

Integer determinant(const SymMatrix& m) {
  const Rational c0 = characteristic_polynomial(m).coeff(0);
  const Integer v = c0.get_num();
  return m.size() % 2 == 0 ? v : Integer(-v);
}

int matrix_signature(const SymMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw AlgebraError("matrix_signature requires a symmetric matrix");
  if (m.size() == 0) return 0;
  const UniPoly chi = characteristic_polynomial(m);
  if (chi.coeff(0) == 0) throw AlgebraError("matrix_signature: singular matrix");
  const Rational bound = cauchy_bound(chi) + 1;
  const int negative = count_in_interval(chi, -bound, Rational(0));
  return chi.degree() - 2 * negative;
}

SignatureResult signature_two_bridge(const KnotId& k) {
  SignatureResult out;
  out.cf = even_cf(k);
  const SymMatrix m = goeritz_like_matrix(out.cf);
  out.det = determinant(m);
  if (abs(out.det) != k.p())
    throw AlgebraError("|det| = " + out.det.get_str() + " differs from p for " + k.to_string());
  out.sigma_signed = matrix_signature(m);
  out.sigma_abs = std::abs(out.sigma_signed);
  return out;
}

}  // namespace riley
