#include "riley/laurent.hpp"

#include <string>

#include "riley/chebyshev.hpp"

namespace riley {

SymLaurent::SymLaurent(Terms terms) {
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

SymLaurent SymLaurent::constant(const Rational& c) { return monomial(0, UniPoly::constant(c)); }

SymLaurent SymLaurent::monomial(int exponent, const UniPoly& c) {
  SymLaurent out;
  out.add_term(exponent, c);
  return out;
}

UniPoly SymLaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? UniPoly{} : it->second;
}

int SymLaurent::min_exponent() const {
  if (terms_.empty()) throw AlgebraError("min exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int SymLaurent::max_exponent() const {
  if (terms_.empty()) throw AlgebraError("max exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void SymLaurent::add_term(int exponent, const UniPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
  SymLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

SymLaurent operator-(SymLaurent a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::optional<int> asymmetric_exponent(const SymLaurent& f) {
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    if (f.coeff(-e) != c) return e < 0 ? -e : e;
  }
  return std::nullopt;
}

SymmetryError::SymmetryError(int exponent)
    : AlgebraError("Laurent polynomial is not invariant under s -> 1/s at exponent " + std::to_string(exponent)),
      exponent_(exponent) {}

BiPoly symmetrize_to_xy(const SymLaurent& f) {
  if (auto bad = asymmetric_exponent(f)) throw SymmetryError(*bad);
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e < 0) continue;
    // s^e + s^-e = p_e(x); the constant term appears once.
    const UniPoly px = e == 0 ? UniPoly::constant(1) : trace_poly(e);
    out += BiPoly::from_x(px) * BiPoly::from_y(c);
  }
  return out;
}

UniPoly eval_s(const SymLaurent& f, const Rational& s0) {
  if (s0 == 0) throw AlgebraError("cannot evaluate a Laurent polynomial at s = 0");
  UniPoly out;
  for (const auto& [e, c] : f.terms()) {
    Rational power = 1;
    mpz_pow_ui(power.get_num_mpz_t(), s0.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(power.get_den_mpz_t(), s0.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    power.canonicalize();
    if (e < 0) power = 1 / power;
    out += c * power;
  }
  return out;
}

}  // namespace riley
