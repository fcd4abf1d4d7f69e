#pragma once

#include <string>
#include <string_view>

#include "riley/bipoly.hpp"
#include "riley/polynomial.hpp"
#include "riley/signature.hpp"
#include "riley/verifier.hpp"

namespace riley {

/// Descending degree, exact coefficients: "y^3 - 3*y^2 + 2*y - 1",
/// "3/4*y - 1/2", "0" for the zero polynomial.
std::string render_poly(const UniPoly& p, std::string_view var = "y");

/// Inverse of render_poly. Grammar:
///   poly  := ['-'] term (('+' | '-') term)*
///   term  := coeff ['*' var ['^' digits]] | var ['^' digits]
///   coeff := digits ['/' digits]
/// Whitespace between tokens is ignored; repeated degrees are summed.
UniPoly parse_poly(std::string_view text, std::string_view var = "y");

/// Monomials ordered by y-degree then x-degree, both descending:
/// "y - x^2 + 1".
std::string render_bipoly(const BiPoly& p);

/// "|σ| = 2 (σ = +2 under q-even convention), CF = [4, 2], det = 7"
std::string render_signature(const SignatureResult& s);

std::string render_record(const ConjectureRecord& rec);
std::string render_record(const TheoremRecord& rec);

}  // namespace riley
