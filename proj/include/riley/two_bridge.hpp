#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riley/rational.hpp"

namespace riley {

class InvalidKnot : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Two-bridge knot b(p, q): p >= 3 odd, 0 < q < p, gcd(p, q) = 1.
///
/// A KnotId keeps the q it was built with, since the Schubert word and the
/// Riley polynomial depend on the presentation. canonical() picks the
/// representative min(q, q^-1 mod p) of the same knot. Mirrors b(p, p - q)
/// are distinct ids.
class KnotId {
 public:
  /// Reduces q into (0, p); throws InvalidKnot for even p, p < 3 or
  /// gcd(p, q) != 1.
  static KnotId make(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }

  KnotId canonical() const;
  bool is_canonical() const { return canonical().q_ == q_; }

  /// The odd representative of q mod p in (-p, p): q itself, or q - p when
  /// q is even. The Schubert word is built from this value so that its
  /// exponent sequence is a palindrome.
  long schubert_q() const { return q_ % 2 != 0 ? q_ : q_ - p_; }

  std::string to_string() const;

  friend bool operator==(const KnotId&, const KnotId&) = default;
  friend auto operator<=>(const KnotId&, const KnotId&) = default;

 private:
  KnotId(long p, long q) : p_(p), q_(q) {}

  long p_;
  long q_;
};

/// normalize(p, q) = KnotId::make(p, q).canonical().
KnotId normalize(long p, long q);

/// Modular inverse of q modulo p (gcd must be 1).
long inverse_mod(long q, long p);

enum class Family { EE, EN, OE, ON };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Double twist knot: EE = J(2m, 2n), EN = J(2m, -2n), OE = J(2m+1, 2n),
/// ON = J(2m+1, -2n), with m, n >= 1.
struct DoubleTwist {
  Family family;
  int m;
  int n;

  static DoubleTwist make(Family family, int m, int n);
  /// "J(2m+1,-2n)" with the numbers filled in.
  std::string to_string() const;

  friend bool operator==(const DoubleTwist&, const DoubleTwist&) = default;
};

enum class Generator { a, b };

struct Letter {
  Generator generator;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Relator word w = a^e1 b^e2 ... a^e_{p-2} b^e_{p-1}.
struct SchubertWord {
  std::vector<Letter> letters;

  friend bool operator==(const SchubertWord&, const SchubertWord&) = default;
};

/// (-1)^floor(j q / p) for 1 <= j <= p - 1. q may be negative; the floor is
/// taken exactly.
int epsilon(long p, long q, long j);

/// Exponent sequence of the Schubert word of k (uses k.schubert_q()).
std::vector<int> epsilon_sequence(const KnotId& k);

/// Closed-form sign pattern for the double twist family, indexed the same
/// way as epsilon() on family_to_pq(d). Throws for j outside 1..p-1.
int epsilon_fast(const DoubleTwist& d, long j);

SchubertWord schubert_word(const KnotId& k);

/// The relator word written directly from the family's bracketed form.
SchubertWord family_word(const DoubleTwist& d);

/// The (p, q) pair of the family's standard presentation, not canonicalized.
KnotId family_to_pq(const DoubleTwist& d);

/// "a b⁻¹ a⁻¹ b".
std::string render_word(const SchubertWord& w);
/// ASCII form: a, b for exponent +1 and A, B for -1, e.g. "aBAb".
std::string render_word_compact(const SchubertWord& w);
/// "+ - - +".
std::string render_epsilon(const std::vector<int>& eps);

}  // namespace riley
