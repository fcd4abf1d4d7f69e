#include "riley/riley.hpp"

#include <random>

#include "riley/chebyshev.hpp"

namespace riley {

namespace {

const UniPoly& two_minus_y() {
  static const UniPoly v{Rational(2), Rational(-1)};
  return v;
}

SymLaurent lift(int exponent, const UniPoly& c) { return SymLaurent::monomial(exponent, c); }

SymLaurent lift(int exponent, const Rational& c) { return SymLaurent::monomial(exponent, UniPoly::constant(c)); }

Mat2Y specialize(const Mat2Sym& m, const Rational& s0) {
  return Mat2Y{{eval_s(m.e[0], s0), eval_s(m.e[1], s0), eval_s(m.e[2], s0), eval_s(m.e[3], s0)}};
}

void require_divisible(const Mat2Y& diff, const UniPoly& phi, const std::string& where) {
  if (phi.is_zero()) throw RileyValidationError("Riley candidate vanishes identically at " + where);
  for (const auto& entry : diff.e) {
    if (!divrem(entry, phi).second.is_zero())
      throw RileyValidationError("rho(wa) - rho(bw) has an entry not divisible by the Riley candidate at " + where);
  }
}

BiPoly cheb_y(int k) { return BiPoly::from_y(cheb_poly(k)); }

}  // namespace

Mat2Sym rho_generator(Generator g, int exponent) {
  const SymLaurent zero;
  if (exponent != 1 && exponent != -1) throw AlgebraError("generator exponent must be +1 or -1");
  if (g == Generator::a) {
    if (exponent == 1) return Mat2Sym{{lift(1, 1), lift(0, 1), zero, lift(-1, 1)}};
    return Mat2Sym{{lift(-1, 1), lift(0, -1), zero, lift(1, 1)}};
  }
  if (exponent == 1) return Mat2Sym{{lift(1, 1), zero, lift(0, two_minus_y()), lift(-1, 1)}};
  return Mat2Sym{{lift(-1, 1), zero, lift(0, -two_minus_y()), lift(1, 1)}};
}

Mat2Y rho_generator_parabolic(Generator g, int exponent) {
  if (exponent != 1 && exponent != -1) throw AlgebraError("generator exponent must be +1 or -1");
  const UniPoly one = UniPoly::constant(1);
  const Rational e(exponent);
  if (g == Generator::a) return Mat2Y{{one, UniPoly::constant(e), UniPoly{}, one}};
  return Mat2Y{{one, UniPoly{}, two_minus_y() * e, one}};
}

Mat2Sym word_matrix(const SchubertWord& w) {
  Mat2Sym m = Mat2Sym::identity(SymLaurent::constant(1), SymLaurent{});
  for (const auto& l : w.letters) m = m * rho_generator(l.generator, l.exponent);
  return m;
}

Mat2Y word_matrix_parabolic(const SchubertWord& w) {
  Mat2Y m = Mat2Y::identity(UniPoly::constant(1), UniPoly{});
  for (const auto& l : w.letters) m = m * rho_generator_parabolic(l.generator, l.exponent);
  return m;
}

SymLaurent riley_candidate(const Mat2Sym& w) {
  const SymLaurent inv_s_minus_s = lift(-1, 1) - lift(1, 1);
  return w(0, 0) + inv_s_minus_s * w(0, 1);
}

RileyPoly riley_general(const KnotId& k) {
  const auto word = schubert_word(k);
  const Mat2Sym w = word_matrix(word);
  const std::string label = k.to_string();

  if (determinant(w) != SymLaurent::constant(1))
    throw RileyValidationError("det rho(w) != 1 for " + label);

  const SymLaurent phi = riley_candidate(w);
  if (auto bad = asymmetric_exponent(phi)) {
    throw RileyValidationError("Riley candidate for " + label + " is not invariant under s -> 1/s (exponent " +
                               std::to_string(*bad) + ")");
  }

  const Mat2Sym diff = w * rho_generator(Generator::a, 1) - rho_generator(Generator::b, 1) * w;
  const Mat2Sym expected{{SymLaurent{}, phi, lift(0, -two_minus_y()) * phi, SymLaurent{}}};
  if (diff != expected)
    throw RileyValidationError("rho(wa) - rho(bw) is not generated by the Riley candidate for " + label);

  require_divisible(specialize(diff, 1), eval_s(phi, 1), label + ", s = 1");
  std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(k.p() * 1009 + k.q()));
  std::uniform_int_distribution<long> num_dist(1, 97);
  std::uniform_int_distribution<long> den_dist(1, 89);
  for (int i = 0; i < 20; ++i) {
    long num = num_dist(rng);
    if (rng() & 1U) num = -num;
    Rational s0(num, den_dist(rng));
    s0.canonicalize();
    require_divisible(specialize(diff, s0), eval_s(phi, s0), label + ", s = " + to_string(s0));
  }

  return RileyPoly{normalize_riley(symmetrize_to_xy(phi)), RileySource::general};
}

UniPoly riley_parabolic(const KnotId& k) {
  const Mat2Y w = word_matrix_parabolic(schubert_word(k));
  if (w(1, 0) != two_minus_y() * w(0, 1))
    throw RileyValidationError("parabolic word matrix of " + k.to_string() + " fails W21 = (2 - y) W12");
  return normalize_riley(w(0, 0));
}

ClosedFormParams closed_form_params(const DoubleTwist& d) {
  const int m = d.m;
  const BiPoly x2 = BiPoly::x() * BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly one = BiPoly::constant(1);
  const BiPoly two = BiPoly::constant(2);
  const BiPoly u = y + two - x2;  // y + 2 - x^2
  const BiPoly s_m = cheb_y(m);
  const BiPoly s_m1 = cheb_y(m - 1);
  const BiPoly s_m2 = cheb_y(m - 2);

  ClosedFormParams out{{}, {}, d};
  switch (d.family) {
    case Family::EE:
      out.t = two + (y - two) * u * s_m1 * s_m1;
      out.mu = one + u * s_m1 * (s_m - s_m1);
      break;
    case Family::EN:
      out.t = two + (y - two) * u * s_m1 * s_m1;
      out.mu = one - u * s_m1 * (s_m1 - s_m2);
      break;
    case Family::OE:
      out.t = x2 - y - (y - two) * u * s_m * s_m1;
      out.mu = one - u * s_m * (s_m - s_m1);
      break;
    case Family::ON:
      out.t = x2 - y - (y - two) * u * s_m * s_m1;
      out.mu = one + u * s_m1 * (s_m - s_m1);
      break;
  }
  return out;
}

BiPoly riley_closed_form_raw(const ClosedFormParams& params) {
  const int n = params.family.n;
  return compose(cheb_poly(n), params.t) - params.mu * compose(cheb_poly(n - 1), params.t);
}

RileyPoly riley_closed_form(const DoubleTwist& d) {
  return RileyPoly{normalize_riley(riley_closed_form_raw(closed_form_params(d))), RileySource::closed_form};
}

BiPoly normalize_riley(const BiPoly& phi) {
  if (phi.is_zero()) return phi;
  Integer den_lcm = 1;
  for (const auto& c : phi.y_coeffs())
    for (const auto& r : c.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : phi.y_coeffs()) {
    for (const auto& r : c.coeffs()) {
      Integer v = r.get_num() * (den_lcm / r.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  const UniPoly& lead = phi.y_coeffs().back();
  int s = sign(eval(lead, Rational(2)));
  if (s == 0) s = sign(lead.leading());
  if (s < 0) scale = -scale;
  return phi * scale;
}

UniPoly normalize_riley(const UniPoly& phi) {
  if (phi.is_zero()) return phi;
  UniPoly out = primitive_part(phi);
  return out.leading() < 0 ? -out : out;
}

}  // namespace riley
