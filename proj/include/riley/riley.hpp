#pragma once

#include "riley/bipoly.hpp"
#include "riley/laurent.hpp"
#include "riley/mat2.hpp"
#include "riley/polynomial.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

/// Entries are Laurent in s with coefficients in Q[y].
using Mat2Sym = Mat2<SymLaurent>;
/// Entries in Q[y]; the s = 1 specialization of Mat2Sym.
using Mat2Y = Mat2<UniPoly>;

/// Raised when the single-equation reduction fails one of its checks for a
/// particular word. Signals a wrong reduction, never bad user input.
class RileyValidationError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// t and mu of the closed form Phi = S_n(t) - mu S_{n-1}(t).
struct ClosedFormParams {
  BiPoly t;
  BiPoly mu;
  DoubleTwist family;
};

enum class RileySource { general, closed_form };

struct RileyPoly {
  BiPoly phi_xy;  // normalized
  RileySource source;
};

/// rho(a) = [[s, 1], [0, 1/s]], rho(b) = [[s, 0], [2 - y, 1/s]]; inverses
/// by adjugate.
Mat2Sym rho_generator(Generator g, int exponent);
Mat2Y rho_generator_parabolic(Generator g, int exponent);

/// Left-to-right product of generator images; identity for the empty word.
Mat2Sym word_matrix(const SchubertWord& w);
Mat2Y word_matrix_parabolic(const SchubertWord& w);

/// W11 + (1/s - s) W12 for W = rho(w): the raw single-equation candidate,
/// before any symmetry check.
SymLaurent riley_candidate(const Mat2Sym& w);

/// Riley polynomial in (x, y) from the matrix product over the Schubert
/// word of k. Every call checks, and throws RileyValidationError otherwise:
///   - det W = 1,
///   - the candidate is invariant under s -> 1/s,
///   - rho(wa) - rho(bw) equals [[0, Phi], [(y - 2) Phi, 0]] exactly,
///   - at s = 1 and at 20 seeded random rational s, every entry of
///     rho(wa) - rho(bw) is divisible in Q[y] by the candidate.
RileyPoly riley_general(const KnotId& k);

/// Phi_K(2, y) computed with s = 1 throughout, normalized.
UniPoly riley_parabolic(const KnotId& k);

ClosedFormParams closed_form_params(const DoubleTwist& d);

/// S_n(t) - mu S_{n-1}(t), normalized.
RileyPoly riley_closed_form(const DoubleTwist& d);
/// Same, without normalization.
BiPoly riley_closed_form_raw(const ClosedFormParams& params);

/// Clears denominators, divides by the integer content and fixes the sign
/// so the leading y-coefficient is positive at x = 2 (falling back to the
/// leading x-coefficient when that value is zero).
BiPoly normalize_riley(const BiPoly& phi);
/// Integer primitive with positive leading coefficient.
UniPoly normalize_riley(const UniPoly& phi);

}  // namespace riley
