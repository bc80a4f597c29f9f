#pragma once

#include "gpforge/engine.hpp"
#include "gpforge/table_algebra.hpp"

#include <string>
#include <string_view>

namespace gpforge {

/// Model serialization: dim, op tables as nested arrays of "p/q" strings
/// (table[i][j] holds the coordinates of e_i op e_j), derivation matrices
/// (row i holds the coordinates of D(e_i)) and the certified variety names.
std::string model_to_json(const TableAlgebra& m);

/// Inverse of model_to_json. Every certified name is re-established by
/// check_axioms against the built-in variety of that name; names that are
/// not built-in are dropped. Throws ModelError when a claim does not hold,
/// ParseError on malformed input.
TableAlgebra model_from_json(std::string_view text);

/// {"target": [[coeff, term], ...], "parts": [{coeff, axiom, sigma, context, dshift}, ...]}
/// with terms in prefix syntax and variables named a, b, c, ...
std::string certificate_to_json(const Certificate& c, std::string_view derivation = "D");
Certificate certificate_from_json(std::string_view text, const OperationSignature& sig);

} // namespace gpforge
