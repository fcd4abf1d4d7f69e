#include "riley/chebyshev.hpp"

#include <map>
#include <mutex>

namespace riley {

namespace {

std::mutex cheb_mutex;
std::map<int, UniPoly>& cheb_cache() {
  static std::map<int, UniPoly> cache;
  return cache;
}

UniPoly cheb_uncached(int k) {
  const UniPoly z = UniPoly::variable();
  if (k >= 0) {
    UniPoly prev;                       // S_{-1}
    UniPoly cur = UniPoly::constant(1);  // S_0
    for (int i = 0; i < k; ++i) {
      UniPoly next = z * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backward: S_{k-2} = z S_{k-1} - S_k.
  UniPoly cur;                          // S_{-1}
  UniPoly upper = UniPoly::constant(1);  // S_0
  for (int i = -1; i > k; --i) {
    UniPoly next = z * cur - upper;
    upper = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class T>
T cheb_eval_impl(int k, const T& z) {
  if (k >= 0) {
    T prev = 0;
    T cur = 1;
    for (int i = 0; i < k; ++i) {
      T next = z * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  T cur = 0;
  T upper = 1;
  for (int i = -1; i > k; --i) {
    T next = z * cur - upper;
    upper = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

UniPoly cheb_poly(int k) {
  {
    std::lock_guard lock(cheb_mutex);
    auto it = cheb_cache().find(k);
    if (it != cheb_cache().end()) return it->second;
  }
  UniPoly value = cheb_uncached(k);
  std::lock_guard lock(cheb_mutex);
  return cheb_cache().try_emplace(k, std::move(value)).first->second;
}

Rational cheb_eval(int k, const Rational& z) { return cheb_eval_impl<Rational>(k, z); }

double cheb_eval(int k, double z) { return cheb_eval_impl<double>(k, z); }

UniPoly cheb_diff(int k) {
  if (k < 1) throw AlgebraError("cheb_diff requires k >= 1");
  return cheb_poly(k) - cheb_poly(k - 1);
}

UniPoly trace_poly(int k) {
  if (k < 0) throw AlgebraError("trace_poly requires k >= 0");
  const UniPoly x = UniPoly::variable();
  UniPoly prev = UniPoly::constant(2);
  if (k == 0) return prev;
  UniPoly cur = x;
  for (int i = 1; i < k; ++i) {
    UniPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace riley
