#pragma once

#include <string>

#include "json.hpp"
#include "mcode/codes.hpp"
#include "mcode/vanishing.hpp"

namespace mcode {

// Field elements serialize as their packed integer representatives; modulus
// coefficients as integers in [0,p).

nlohmann::json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecreasingSet& set);
DecreasingSet decreasing_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Grid& grid);
// The embedded field spec must match the supplied field, which owns the
// element arithmetic for the loaded grid.
Grid grid_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json to_json(const CodeMatrix& code);
CodeMatrix code_matrix_from_json(const nlohmann::json& j, const Field& field);

// One line per row, entries comma-separated, blocks separated by '|'.
std::string code_matrix_csv(const CodeMatrix& code);
// Bracketed rows with '|' between blocks, for eyeball comparison.
std::string code_matrix_pretty(const CodeMatrix& code);

// Term-list text form, e.g. "x^2 + x" or "2*x*y^3 + 1". Variables are named
// x, y, z for up to three variables and x1, x2, ... beyond; both spellings
// parse.
std::string poly_to_string(const MultiPoly& f);
MultiPoly poly_from_string(const Field& field, int vars, const std::string& text);

// JSON term list: [{"coeff": int, "exps": [ints]}, ...].
nlohmann::json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const nlohmann::json& j, const Field& field, int vars);

}  // namespace mcode
