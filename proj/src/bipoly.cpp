#include "riley/bipoly.hpp"

#include <algorithm>

namespace riley {

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : y_coeffs_(std::move(y_coeffs)) { trim(); }

BiPoly BiPoly::constant(const Rational& c) { return from_x(UniPoly::constant(c)); }

BiPoly BiPoly::from_x(const UniPoly& px) { return BiPoly(std::vector<UniPoly>{px}); }

BiPoly BiPoly::from_y(const UniPoly& py) {
  std::vector<UniPoly> v;
  v.reserve(py.coeffs().size());
  for (const auto& c : py.coeffs()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::x() { return from_x(UniPoly::variable()); }

BiPoly BiPoly::y() { return from_y(UniPoly::variable()); }

int BiPoly::x_degree() const {
  int d = -1;
  for (const auto& c : y_coeffs_) d = std::max(d, c.degree());
  return d;
}

UniPoly BiPoly::coeff_y(int k) const {
  if (k < 0 || k > y_degree()) return {};
  return y_coeffs_[static_cast<std::size_t>(k)];
}

void BiPoly::trim() {
  while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.y_coeffs_.size() > y_coeffs_.size()) y_coeffs_.resize(other.y_coeffs_.size());
  for (std::size_t i = 0; i < other.y_coeffs_.size(); ++i) y_coeffs_[i] += other.y_coeffs_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.y_coeffs_.size() > y_coeffs_.size()) y_coeffs_.resize(other.y_coeffs_.size());
  for (std::size_t i = 0; i < other.y_coeffs_.size(); ++i) y_coeffs_[i] -= other.y_coeffs_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& p : y_coeffs_) p *= c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> out(a.y_coeffs_.size() + b.y_coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.y_coeffs_.size(); ++i) {
    if (a.y_coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.y_coeffs_.size(); ++j) out[i + j] += a.y_coeffs_[i] * b.y_coeffs_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly operator-(BiPoly a) {
  for (auto& p : a.y_coeffs_) p = -p;
  return a;
}

UniPoly eval_bi(const BiPoly& a, const Rational& x0) {
  std::vector<Rational> out;
  out.reserve(a.y_coeffs().size());
  for (const auto& c : a.y_coeffs()) out.push_back(eval(c, x0));
  return UniPoly(std::move(out));
}

UniPoly eval_y(const BiPoly& a, const Rational& y0) {
  UniPoly acc;
  for (auto it = a.y_coeffs().rbegin(); it != a.y_coeffs().rend(); ++it) acc = acc * y0 + *it;
  return acc;
}

UniPoly substitute_y(const BiPoly& a, const UniPoly& g) {
  UniPoly acc;
  for (auto it = a.y_coeffs().rbegin(); it != a.y_coeffs().rend(); ++it) acc = acc * g + *it;
  return acc;
}

BiPoly compose(const UniPoly& outer, const BiPoly& inner) {
  BiPoly acc;
  for (auto it = outer.coeffs().rbegin(); it != outer.coeffs().rend(); ++it) acc = acc * inner + BiPoly::constant(*it);
  return acc;
}

BiPoly pow(const BiPoly& a, unsigned exponent) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace riley
