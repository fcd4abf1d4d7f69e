#include "riley/real_roots.hpp"

#include <algorithm>

namespace riley {

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_with_chain(const SturmChain& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// A point strictly inside (lo, hi) that is not a root of f.
Rational split_point(const UniPoly& f, const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rational t(num, den);
      t.canonicalize();
      if (t.get_den() != den) continue;
      Rational mid = lo + width * t;
      if (eval(f, mid) != 0) return mid;
    }
  }
}

}  // namespace

RootOnEndpoint::RootOnEndpoint(const Rational& endpoint)
    : AlgebraError("interval endpoint " + to_string(endpoint) +
                   " is a root; nudge the rational endpoint and retry"),
      endpoint_(endpoint) {}

SturmChain sturm_chain(const UniPoly& f) {
  if (f.is_zero()) throw AlgebraError("Sturm chain of the zero polynomial");
  if (f.is_constant()) throw AlgebraError("Sturm chain of a constant polynomial");
  SturmChain chain;
  const UniPoly g = primitive_part(squarefree_part(f));
  chain.polys.push_back(g);
  chain.polys.push_back(primitive_part(derivative(g)));
  for (;;) {
    const auto& a = chain.polys[chain.polys.size() - 2];
    const auto& b = chain.polys.back();
    UniPoly r = divrem(a, b).second;
    if (r.is_zero()) break;
    chain.polys.push_back(primitive_part(-r));
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const Rational& v) {
  std::vector<int> signs;
  signs.reserve(chain.polys.size());
  for (const auto& p : chain.polys) signs.push_back(sign(eval(p, v)));
  return variations(signs);
}

int sign_variations_at_infinity(const SturmChain& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.polys.size());
  for (const auto& p : chain.polys) {
    int s = sign(p.leading());
    if (!positive && p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

Rational cauchy_bound(const UniPoly& f) {
  if (f.is_zero()) throw AlgebraError("Cauchy bound of the zero polynomial");
  Rational best = 0;
  const Rational& lead = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coeff(i) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

RootCount count_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw AlgebraError("root count of the zero polynomial");
  RootCount out;
  if (f.is_constant()) return out;
  const auto chain = sturm_chain(f);
  out.total_real = sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
  return out;
}

int count_in_interval(const UniPoly& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw AlgebraError("root count of the zero polynomial");
  if (!(lo < hi)) throw AlgebraError("count_in_interval requires lo < hi");
  if (eval(f, lo) == 0) throw RootOnEndpoint(lo);
  if (eval(f, hi) == 0) throw RootOnEndpoint(hi);
  if (f.is_constant()) return 0;
  return count_with_chain(sturm_chain(f), lo, hi);
}

int count_roots_above(const UniPoly& f, const Rational& a) {
  if (f.is_zero()) throw AlgebraError("root count of the zero polynomial");
  if (f.is_constant()) return 0;
  const auto chain = sturm_chain(f);
  // With a squarefree chain, V(a) - V(b) counts roots in (a, b] even when a
  // is a root.
  return sign_variations(chain, a) - sign_variations_at_infinity(chain, true);
}

RootCount isolate_roots(const UniPoly& f, const Rational& width) {
  if (!(width > 0)) throw AlgebraError("isolation width must be positive");
  const auto chain = sturm_chain(f);
  const UniPoly& g = chain.polys.front();
  RootCount out;
  out.total_real = sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
  const Rational bound = cauchy_bound(g);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> work{{-bound, bound, out.total_real}};
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1 && cur.hi - cur.lo <= width) {
      out.intervals.push_back({cur.lo, cur.hi});
      continue;
    }
    Rational mid = split_point(g, cur.lo, cur.hi);
    int left = count_with_chain(chain, cur.lo, mid);
    work.push_back({mid, cur.hi, cur.count - left});
    work.push_back({cur.lo, mid, left});
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace riley
