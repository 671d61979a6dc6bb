#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "projdel/binary_forms.hpp"
#include "projdel/multipoly.hpp"
#include "projdel/projective_line.hpp"
#include "projdel/roots.hpp"

namespace projdel::io {

using json = nlohmann::json;

// MultiPoly: {"vars": [...], "terms": [{"exps": [...], "num": "n", "den": "d"}, ...]}
// with terms in ascending lexicographic exponent order; integers as decimal strings.
json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

// BinaryForm: {"degree": d, "coeffs": [MultiPoly, ...], "var": "x2"}; "var" is optional on input.
json to_json(const BinaryForm& g);
BinaryForm binary_form_from_json(const json& j);

// Matrix2: {"a": [["a11", "a12"], ["a21", "a22"]]}
json to_json(const Matrix2& a);
Matrix2 matrix_from_json(const json& j);

// ProjPoint: {"x": "num/den", "y": "num/den"}
json to_json(const ProjPoint& p);
ProjPoint proj_point_from_json(const json& j);

/// Univariate input: a one-variable MultiPoly, or {"coeffs": ["c0", "c1", ...]}.
UniPoly unipoly_from_json(const json& j);

/// [{ "point": "r" | "interval": ["lo", "hi"], "approx": x, "multiplicity": m } ...,
///  { "infinity": true, "multiplicity": m }]
json to_json(const ProjRootSet& roots);
json to_json(const IsolatedRoot& root);

std::string rat_string(const Rat& q);
Rat rat_from_json(const json& j);

/// Parses an infix expression such as "x1*x2^2 - 3/4*x1 + (x2 - 1)^2".
/// Supports + - * / (by constants) ^ (or **) with natural exponents,
/// parentheses, integers and decimals. Unknown identifiers are an InputError.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);
/// Identifiers occurring in the expression, in natural order (x2 < x10).
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace projdel::io
