#include "riley/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "riley/chebyshev.hpp"
#include "riley/real_roots.hpp"
#include "riley/riley.hpp"
#include "riley/signature.hpp"

namespace riley {

namespace {

constexpr Family kAllFamilies[] = {Family::EE, Family::EN, Family::OE, Family::ON};

bool same_knot_up_to_mirror(const KnotId& a, long p, long q) {
  if (a.p() != p) return false;
  const long inv = inverse_mod(q, p);
  for (long candidate : {q, inv, p - q, p - inv}) {
    if (candidate % p == a.q()) return true;
  }
  return false;
}

Expectation theorem_expectation(const DoubleTwist& d) {
  switch (d.family) {
    case Family::EE: return {ExpectKind::exactly, 1};
    case Family::EN: return {ExpectKind::exactly, 0};
    case Family::OE: return {ExpectKind::at_least, d.n - 1};
    case Family::ON: return {ExpectKind::at_least, d.n};
  }
  throw AlgebraError("unknown family");
}

std::string describe_x_poly(const UniPoly& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << to_string(p.coeffs()[i]);
  }
  os << ']';
  return os.str();
}

std::vector<TheoremRecord> sweep(Family even_family, Family odd_family, int mmax, int nmax,
                                 const std::vector<Rational>& x0s, bool theorem1) {
  std::vector<TheoremRecord> out;
  for (int m = 1; m <= mmax; ++m) {
    for (int n = 1; n <= nmax; ++n) {
      const auto points = !x0s.empty() ? x0s : (theorem1 ? theorem1_default_x0(m, n) : theorem2_default_x0());
      for (Family f : {even_family, odd_family}) {
        const auto d = DoubleTwist::make(f, m, n);
        const BiPoly phi = riley_closed_form(d).phi_xy;
        for (const auto& x0 : points) out.push_back(check_theorem_at(d, phi, x0));
      }
    }
  }
  return out;
}

}  // namespace

std::optional<DoubleTwist> double_twist_of(const KnotId& k) {
  for (Family f : kAllFamilies) {
    for (int m = 1; 4L * m <= k.p() + 1; ++m) {
      for (int n = 1; 4L * m * n - 1 <= k.p(); ++n) {
        const KnotId fam = family_to_pq(DoubleTwist{f, m, n});
        if (fam.p() > k.p()) break;
        if (same_knot_up_to_mirror(k, fam.p(), fam.q())) return DoubleTwist{f, m, n};
      }
    }
  }
  return std::nullopt;
}

ConjectureRecord check_conjecture(const KnotId& k) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureRecord rec;
  rec.knot = k;
  const UniPoly phi = riley_parabolic(k);
  rec.parabolic_degree = phi.degree();
  if (rec.parabolic_degree != (k.p() - 1) / 2) {
    throw RileyValidationError("parabolic Riley polynomial of " + k.to_string() + " has degree " +
                               std::to_string(rec.parabolic_degree) + ", expected " +
                               std::to_string((k.p() - 1) / 2));
  }
  rec.real_roots = count_real_roots(phi).total_real;
  if (eval(phi, Rational(2)) == 0) {
    rec.y2_root_excluded = true;
    --rec.real_roots;
  }
  rec.sigma_abs = signature_two_bridge(k).sigma_abs;
  rec.holds = 2 * rec.real_roots >= rec.sigma_abs;
  rec.family = double_twist_of(k);
  rec.counterexample_candidate = !rec.holds && !rec.family.has_value();
  rec.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<KnotId> canonical_knots(int p_max) {
  std::vector<KnotId> out;
  for (long p = 3; p <= p_max; p += 2) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto k = KnotId::make(p, q);
      if (k.is_canonical()) out.push_back(k);
    }
  }
  return out;
}

ScanResult scan_conjecture(int p_max, int jobs) {
  if (p_max < 3) throw AlgebraError("scan_conjecture requires p_max >= 3");
  const auto knots = canonical_knots(p_max);
  ScanResult result;
  result.records.resize(knots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < knots.size(); i = next++) {
      try {
        result.records[i] = check_conjecture(knots[i]);
      } catch (const std::exception& e) {
        ConjectureRecord rec;
        rec.knot = knots[i];
        rec.error = e.what();
        result.records[i] = std::move(rec);
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(knots.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& r : result.records) {
    ++result.summary.records;
    if (!r.error.empty()) {
      ++result.summary.errors;
    } else if (r.holds) {
      ++result.summary.holds;
    } else {
      ++result.summary.violations;
      if (r.counterexample_candidate) ++result.summary.counterexample_candidates;
    }
  }
  return result;
}

std::string Expectation::to_string() const {
  if (kind == ExpectKind::exactly) {
    if (value == 0) return "zero";
    if (value == 1) return "exact-one";
    return "exactly(" + std::to_string(value) + ")";
  }
  return "at-least(" + std::to_string(value) + ")";
}

bool theorem1_in_range(int m, int n, const Rational& x0) {
  const Rational sq = x0 * x0;
  const Rational lower = Rational(4) - Rational(1, static_cast<long>(m) * n);
  return sq > lower && sq <= 4;
}

bool theorem2_in_range(int m, const Rational& x0) {
  if (abs(x0) >= 2) return true;
  return count_roots_above(cheb_diff(m), x0 * x0 - 2) == 0;
}

TheoremRecord check_theorem_at(const DoubleTwist& d, const BiPoly& phi, const Rational& x0) {
  TheoremRecord rec{d, x0, false, theorem_expectation(d), 0, false};
  const bool first = d.family == Family::EE || d.family == Family::EN;
  rec.in_range = first ? theorem1_in_range(d.m, d.n, x0) : theorem2_in_range(d.m, x0);
  const UniPoly f = eval_bi(phi, x0);
  rec.observed_roots = f.is_zero() ? -1 : count_real_roots(f).total_real;
  rec.holds = !rec.in_range || rec.expected.satisfied_by(rec.observed_roots);
  return rec;
}

std::pair<TheoremRecord, TheoremRecord> check_theorem1(int m, int n, const Rational& x0) {
  const auto ee = DoubleTwist::make(Family::EE, m, n);
  const auto en = DoubleTwist::make(Family::EN, m, n);
  return {check_theorem_at(ee, riley_closed_form(ee).phi_xy, x0), check_theorem_at(en, riley_closed_form(en).phi_xy, x0)};
}

std::pair<TheoremRecord, TheoremRecord> check_theorem2(int m, int n, const Rational& x0) {
  const auto oe = DoubleTwist::make(Family::OE, m, n);
  const auto on = DoubleTwist::make(Family::ON, m, n);
  return {check_theorem_at(oe, riley_closed_form(oe).phi_xy, x0), check_theorem_at(on, riley_closed_form(on).phi_xy, x0)};
}

std::vector<Rational> theorem1_default_x0(int m, int n) {
  return {Rational(2), Rational(2) - Rational(1, 16L * m * n)};
}

std::vector<Rational> theorem2_default_x0() { return {Rational(2), Rational(5, 2), Rational(3)}; }

std::vector<TheoremRecord> sweep_theorem1(int mmax, int nmax, const std::vector<Rational>& x0s) {
  return sweep(Family::EE, Family::EN, mmax, nmax, x0s, true);
}

std::vector<TheoremRecord> sweep_theorem2(int mmax, int nmax, const std::vector<Rational>& x0s) {
  return sweep(Family::OE, Family::ON, mmax, nmax, x0s, false);
}

CrossCheck cross_validate(const DoubleTwist& d) {
  CrossCheck out{d, family_to_pq(d), false, {}};
  const BiPoly general = riley_general(out.knot).phi_xy;
  const BiPoly closed = riley_closed_form(d).phi_xy;
  out.equal = general == closed;
  if (!out.equal) {
    std::ostringstream os;
    const int top = std::max(general.y_degree(), closed.y_degree());
    for (int k = 0; k <= top; ++k) {
      if (general.coeff_y(k) == closed.coeff_y(k)) continue;
      os << "y^" << k << ": general " << describe_x_poly(general.coeff_y(k)) << " vs closed form "
         << describe_x_poly(closed.coeff_y(k)) << '\n';
    }
    out.diff = os.str();
  }
  return out;
}

}  // namespace riley
