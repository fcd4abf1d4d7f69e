#include "riley/render.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace riley {

namespace {

// One signed monomial c * body, appended to a running sum.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  if (c == 0) return;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += to_string(mag) + "*" + body;
  }
}

std::string power(std::string_view var, int d) {
  if (d == 0) return "";
  std::string s(var);
  if (d > 1) s += "^" + std::to_string(d);
  return s;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  UniPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    add_term(sign);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      add_term(c == '-' ? -1 : 1);
    }
    std::vector<Rational> coeffs;
    for (const auto& [d, c] : terms_) {
      if (coeffs.size() <= static_cast<std::size_t>(d)) coeffs.resize(static_cast<std::size_t>(d) + 1);
      coeffs[static_cast<std::size_t>(d)] += c;
    }
    return UniPoly(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw AlgebraError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_var() const { return text_.substr(pos_, var_.size()) == var_; }

  int var_power() {
    pos_ += var_.size();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return std::stoi(digits());
    }
    return 1;
  }

  void add_term(int sign) {
    skip_ws();
    Rational coeff = 1;
    int degree = 0;
    if (!at_end() && at_var()) {
      degree = var_power();
    } else {
      std::string num = digits();
      std::string text = num;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        text += "/" + digits();
      }
      coeff = parse_rational(text);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !at_var()) fail("expected variable after '*'");
        degree = var_power();
      }
    }
    terms_.emplace_back(degree, coeff * sign);
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, Rational>> terms_;
};

}  // namespace

std::string render_poly(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) append_term(out, p.coeff(d), power(var, d));
  return out;
}

UniPoly parse_poly(std::string_view text, std::string_view var) { return PolyParser(text, var).parse(); }

std::string render_bipoly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int dy = p.y_degree(); dy >= 0; --dy) {
    const UniPoly cx = p.coeff_y(dy);
    for (int dx = cx.degree(); dx >= 0; --dx) {
      std::string body = power("x", dx);
      const std::string ypart = power("y", dy);
      if (!ypart.empty()) body = body.empty() ? ypart : body + "*" + ypart;
      append_term(out, cx.coeff(dx), body);
    }
  }
  return out;
}

std::string render_signature(const SignatureResult& s) {
  std::ostringstream os;
  os << "|σ| = " << s.sigma_abs << " (σ = " << (s.sigma_signed > 0 ? "+" : "") << s.sigma_signed
     << " under q-even convention), CF = [";
  for (std::size_t i = 0; i < s.cf.entries.size(); ++i) os << (i ? ", " : "") << s.cf.entries[i];
  os << "], det = " << s.det.get_str();
  return os.str();
}

std::string render_record(const ConjectureRecord& rec) {
  std::ostringstream os;
  os << rec.knot.to_string();
  if (!rec.error.empty()) {
    os << "  ERROR " << rec.error;
    return os.str();
  }
  os << "  |σ| = " << rec.sigma_abs << "  degree = " << rec.parabolic_degree << "  real roots = " << rec.real_roots
     << "  " << (rec.holds ? "holds" : "VIOLATED");
  if (rec.family) os << "  [" << rec.family->to_string() << "]";
  if (rec.y2_root_excluded) os << "  (y = 2 root excluded)";
  if (rec.counterexample_candidate) os << "  counterexample-candidate";
  return os.str();
}

std::string render_record(const TheoremRecord& rec) {
  std::ostringstream os;
  os << rec.family.to_string() << "  x0 = " << to_string(rec.x0) << "  " << (rec.in_range ? "in range" : "OUT OF RANGE")
     << "  expected " << rec.expected.to_string() << "  observed " << rec.observed_roots << "  "
     << (rec.holds ? "holds" : "FAILED");
  return os.str();
}

}  // namespace riley
