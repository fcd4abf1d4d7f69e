#include "riley/polynomial.hpp"

#include <algorithm>

namespace riley {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw AlgebraError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw AlgebraError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  return a * (1 / a.leading());
}

UniPoly primitive_part(const UniPoly& a) {
  if (a.is_zero()) return a;
  Integer den_lcm = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : a.coeffs()) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return a * scale;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw AlgebraError("gcd of two zero polynomials");
  // Primitive remainder sequence: content is stripped after every step.
  UniPoly u = primitive_part(a);
  UniPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    UniPoly r = divrem(u, v).second;
    u = std::move(v);
    v = primitive_part(r);
  }
  return monic(u);
}

UniPoly derivative(const UniPoly& a) {
  if (a.degree() <= 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = a.coeffs()[static_cast<std::size_t>(i)] * i;
  return UniPoly(std::move(out));
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) throw AlgebraError("squarefree part of the zero polynomial");
  if (a.degree() == 0) return UniPoly::constant(1);
  return monic(divrem(a, gcd(a, derivative(a))).first);
}

Rational eval(const UniPoly& a, const Rational& v) {
  Rational acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * v + *it;
  return acc;
}

double eval(const UniPoly& a, double v) {
  double acc = 0.0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * v + it->get_d();
  return acc;
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
  UniPoly acc;
  for (auto it = outer.coeffs().rbegin(); it != outer.coeffs().rend(); ++it) acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly pow(const UniPoly& a, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = a;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace riley
