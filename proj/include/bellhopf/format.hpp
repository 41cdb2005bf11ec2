#pragma once

// Text, LaTeX and structured (JSON) forms of polynomials.
//
// Text and LaTeX list terms from the highest canonical monomial down, which
// puts d1^n first in a Bell polynomial; the structured form lists them in
// ascending canonical order.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bellhopf/algebra.hpp"

namespace bellhopf {

using json = nlohmann::json;

template <class M>
M monomial_from_factors(const std::vector<Factor>& factors);

/// "d1^2*d2", "d1^-1*d2"; the unit monomial renders as "1".
template <class M>
std::string monomial_to_text(const M& m, std::string_view symbol = "d");
/// "d_1^2 d_2"; the unit monomial renders as "1".
template <class M>
std::string monomial_to_latex(const M& m, std::string_view symbol = "d");

/// Coefficient prefix for a term: "" for 1, "-" for -1, "2*" / "1/2*" otherwise
/// (magnitude only, sign handled by the caller).
std::string coefficient_prefix(const Rational& magnitude);
std::string latex_coefficient(const Rational& magnitude);

template <class M>
std::string to_text(const Poly<M>& p, std::string_view symbol = "d");
template <class M>
std::string to_latex(const Poly<M>& p, std::string_view symbol = "d");

/// Inverse of to_text. Accepts any term order, repeated monomials and
/// whitespace. Throws std::invalid_argument on malformed input.
template <class M>
Poly<M> parse_poly(std::string_view text, std::string_view symbol = "d");

/// Structured document {algebra, terms: [{coeff, word}]}. The algebra tag
/// defaults to "nc" for words and "c" for commutative monomials.
template <class M>
json to_json(const Poly<M>& p, std::string_view algebra = {});

/// Reads a structured document. Throws std::invalid_argument on a malformed
/// document or an algebra tag that does not fit M.
template <class M>
Poly<M> poly_from_json(const json& doc);

}  // namespace bellhopf
