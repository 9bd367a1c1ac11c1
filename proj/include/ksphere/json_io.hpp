#pragma once

#include <string>

#include <json.hpp>

#include "ksphere/clifford.hpp"
#include "ksphere/exact_matrix.hpp"
#include "ksphere/sphere_pencil.hpp"

namespace ksphere {

using Json = nlohmann::ordered_json;

// {"n": n, "rows": [[[re, im], [re, im, shift], ...], ...]}; the shift is written only when nonzero.
Json matrix_to_json(const ExactMatrix& m);
// Accepts non-canonical entries and canonicalizes them. Throws ParseError on schema violations.
ExactMatrix matrix_from_json(const Json& j);

// {"meta": {"k", "n", "provenance", "phase_convention", "note"}, "generators": [...]}
Json family_to_json(const CliffordFamily& f);
CliffordFamily family_from_json(const Json& j);

// {"d", "n", "coefficients": [...], "constant": matrix | null, "meta": {...}}
Json pencil_to_json(const SpherePencil& p, const Json& meta = Json::object());
SpherePencil pencil_from_json(const Json& j);

/// Parses JSON text; syntax errors become ParseError naming the line and
/// column of the offending byte.
Json parse_json_text(const std::string& text, const std::string& source = "input");
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ksphere
