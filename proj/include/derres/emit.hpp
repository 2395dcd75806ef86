// Canonical text and JSON emission of labeled matrices, polynomials, and the
// named objects the command line exposes.

#pragma once

#include <string>

#include <json.hpp>

#include "derres/polymatrix.hpp"

namespace derres {

// Text layout:
//   rows: <label> <label> ...
//   cols: <label> <label> ...
//   <row label> | <entry> | <entry> | ...
// with entries in the canonical polynomial syntax.
std::string matrix_text(const PolyMatrix& m);

nlohmann::json matrix_json(const PolyMatrix& m);

// Objects: X | minors | jacobian | hilbert-burch | partial2 | U | bar:<r> |
// generators.  Throws std::invalid_argument on an unknown object name.
std::string emit_object(const std::string& object, int n, const std::string& format);

}  // namespace derres
