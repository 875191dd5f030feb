#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "liealg/algebra.hpp"

namespace liealg {

/// An algebra whose scalar type is chosen by the document's field.
using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<Zp>>;

/// Parses the JSON algebra document
///
///   {"name": str?, "dim": int,
///    "field": {"kind": "rational"} | {"kind": "prime", "p": int},
///    "brackets": [{"lhs": [i, j], "rhs": {"k": "scalar", ...}}, ...]}
///
/// with 1-based indices and i < j. Errors are ParseError naming a line and
/// column for malformed JSON, or a JSON pointer for invalid content.
AnyAlgebra parse_document(std::string_view text);

/// Canonical rendering: pairs in increasing order, zero coefficients omitted.
template <class S>
std::string render_document(const LieAlgebra<S>& lie);

std::string render_document(const AnyAlgebra& lie);

}  // namespace liealg
