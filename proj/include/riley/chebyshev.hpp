#pragma once

#include "riley/polynomial.hpp"

namespace riley {

/// Chebyshev polynomial of the second kind S_k(z), any integer k:
/// S_0 = 1, S_1 = z, S_k = z S_{k-1} - S_{k-2}. Negative indices follow
/// the same recurrence run backward, so S_{-1} = 0 and S_{-k-2} = -S_k.
/// Results are memoized per process; lookups are thread-safe.
UniPoly cheb_poly(int k);

/// S_k(z) by the linear recurrence, O(|k|) exact steps.
Rational cheb_eval(int k, const Rational& z);
double cheb_eval(int k, double z);

/// S_k - S_{k-1} for k >= 1.
UniPoly cheb_diff(int k);

/// p_k(x) with p_k(s + 1/s) = s^k + s^-k: p_0 = 2, p_1 = x,
/// p_k = x p_{k-1} - p_{k-2}. Equal to S_k - S_{k-2}.
UniPoly trace_poly(int k);

}  // namespace riley
