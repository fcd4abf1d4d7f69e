#include "riley/two_bridge.hpp"

#include <numeric>

namespace riley {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int parity_sign(long e) { return mod(e, 2) == 0 ? 1 : -1; }

class WordBuilder {
 public:
  WordBuilder& letters(std::string_view compact) {
    for (char c : compact) {
      switch (c) {
        case 'a': word_.push_back({Generator::a, 1}); break;
        case 'A': word_.push_back({Generator::a, -1}); break;
        case 'b': word_.push_back({Generator::b, 1}); break;
        case 'B': word_.push_back({Generator::b, -1}); break;
        default: throw AlgebraError("bad letter in word template");
      }
    }
    return *this;
  }
  WordBuilder& repeat(std::string_view compact, int times) {
    for (int i = 0; i < times; ++i) letters(compact);
    return *this;
  }
  WordBuilder& append(const WordBuilder& other, int times = 1) {
    for (int i = 0; i < times; ++i) word_.insert(word_.end(), other.word_.begin(), other.word_.end());
    return *this;
  }
  SchubertWord build() const { return SchubertWord{word_}; }

 private:
  std::vector<Letter> word_;
};

}  // namespace

long inverse_mod(long q, long p) {
  long old_r = mod(q, p), r = p, old_s = 1, s = 0;
  while (r != 0) {
    long quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw InvalidKnot("q is not invertible modulo p");
  return mod(old_s, p);
}

KnotId KnotId::make(long p, long q) {
  if (p % 2 == 0) throw InvalidKnot("p must be odd (p even gives a link)");
  if (p < 3) throw InvalidKnot("p must be at least 3");
  long r = mod(q, p);
  if (std::gcd(p, r) != 1) throw InvalidKnot("gcd(p, q) must be 1");
  return KnotId(p, r);
}

KnotId KnotId::canonical() const { return KnotId(p_, std::min(q_, inverse_mod(q_, p_))); }

std::string KnotId::to_string() const { return "b(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

KnotId normalize(long p, long q) { return KnotId::make(p, q).canonical(); }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::EE: return "EE";
    case Family::EN: return "EN";
    case Family::OE: return "OE";
    case Family::ON: return "ON";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "EE") return Family::EE;
  if (name == "EN") return Family::EN;
  if (name == "OE") return Family::OE;
  if (name == "ON") return Family::ON;
  throw AlgebraError("unknown family '" + std::string(name) + "' (expected EE, EN, OE or ON)");
}

DoubleTwist DoubleTwist::make(Family family, int m, int n) {
  if (m < 1 || n < 1) throw AlgebraError("double twist parameters need m >= 1 and n >= 1");
  return DoubleTwist{family, m, n};
}

std::string DoubleTwist::to_string() const {
  const bool odd = family == Family::OE || family == Family::ON;
  const bool negative = family == Family::EN || family == Family::ON;
  return "J(" + std::to_string(odd ? 2 * m + 1 : 2 * m) + "," + (negative ? "-" : "") + std::to_string(2 * n) + ")";
}

int epsilon(long p, long q, long j) {
  if (j < 1 || j > p - 1) throw AlgebraError("epsilon index " + std::to_string(j) + " outside 1.." + std::to_string(p - 1));
  return parity_sign(floor_div(j * q, p));
}

std::vector<int> epsilon_sequence(const KnotId& k) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k.p() - 1));
  for (long j = 1; j < k.p(); ++j) out.push_back(epsilon(k.p(), k.schubert_q(), j));
  return out;
}

int epsilon_fast(const DoubleTwist& d, long j) {
  const long m = d.m;
  const long p = family_to_pq(d).p();
  if (j < 1 || j > p - 1) throw AlgebraError("epsilon index " + std::to_string(j) + " outside 1.." + std::to_string(p - 1));
  switch (d.family) {
    case Family::EE: {
      const long quo = j / (2 * m), r = j % (2 * m);
      return parity_sign(quo + r - 1);
    }
    case Family::EN: {
      const long quo = j / (2 * m), r = j % (2 * m);
      return r == 0 ? parity_sign(quo) : parity_sign(quo + r - 1);
    }
    case Family::OE: {
      const long r = j % (2 * m + 1);
      return parity_sign(r - 1);
    }
    case Family::ON: {
      const long r = j % (2 * m + 1);
      return r == 0 ? 1 : parity_sign(r - 1);
    }
  }
  throw AlgebraError("unknown family");
}

SchubertWord schubert_word(const KnotId& k) {
  SchubertWord w;
  const auto eps = epsilon_sequence(k);
  w.letters.reserve(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    w.letters.push_back({i % 2 == 0 ? Generator::a : Generator::b, eps[i]});
  }
  return w;
}

SchubertWord family_word(const DoubleTwist& d) {
  const int m = d.m, n = d.n;
  WordBuilder w;
  switch (d.family) {
    case Family::EE: {
      // a (b^-1 a)^{m-1} [ (b a^-1)^m (b^-1 a)^m ]^{n-1} (b a^-1)^{m-1} b
      WordBuilder block;
      block.repeat("bA", m).repeat("Ba", m);
      w.letters("a").repeat("Ba", m - 1).append(block, n - 1).repeat("bA", m - 1).letters("b");
      break;
    }
    case Family::EN: {
      // [ (a b^-1)^m (a^-1 b)^m ]^n
      WordBuilder block;
      block.repeat("aB", m).repeat("Ab", m);
      w.append(block, n);
      break;
    }
    case Family::OE: {
      // (a b^-1)^m [ (a^-1 b)^m a^-1 b^-1 (a b^-1)^m ]^{n-1} (a^-1 b)^m
      WordBuilder block;
      block.repeat("Ab", m).letters("AB").repeat("aB", m);
      w.repeat("aB", m).append(block, n - 1).repeat("Ab", m);
      break;
    }
    case Family::ON: {
      // [ (a b^-1)^m a b (a^-1 b)^m ]^n
      WordBuilder block;
      block.repeat("aB", m).letters("ab").repeat("Ab", m);
      w.append(block, n);
      break;
    }
  }
  return w.build();
}

KnotId family_to_pq(const DoubleTwist& d) {
  const long m = d.m, n = d.n;
  switch (d.family) {
    case Family::EE: return KnotId::make(4 * m * n - 1, 4 * m * n - 2 * n - 1);
    case Family::EN: return KnotId::make(4 * m * n + 1, 4 * m * n - 2 * n + 1);
    case Family::OE: return KnotId::make(4 * m * n + 2 * n - 1, 4 * m * n - 1);
    case Family::ON: return KnotId::make(4 * m * n + 2 * n + 1, 4 * m * n + 1);
  }
  throw AlgebraError("unknown family");
}

std::string render_word(const SchubertWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.generator == Generator::a ? 'a' : 'b';
    if (l.exponent < 0) out += "⁻¹";
  }
  return out;
}

std::string render_word_compact(const SchubertWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    const bool inv = l.exponent < 0;
    out += l.generator == Generator::a ? (inv ? 'A' : 'a') : (inv ? 'B' : 'b');
  }
  return out;
}

std::string render_epsilon(const std::vector<int>& eps) {
  std::string out;
  for (int e : eps) {
    if (!out.empty()) out += ' ';
    out += e > 0 ? '+' : '-';
  }
  return out;
}

}  // namespace riley
