#pragma once

#include "monointerp/objects.hpp"

#include <string>
#include <string_view>

namespace monointerp {

/// Notation close to the usual one, e.g. "I_{(x^4,x^3y,y^3)}(-5)",
/// "I_{(x^3,y^2) in 3L'}", "[O(-5)+O(-7) -> I_{(x^7,x^6y^4,y^5)}]", "O(-12)[1]".
std::string label(const MonomialObject& object);
std::string label(const LineBundle& bundle);

/// Indented tree, sub before quotient.
std::string to_text(const DecompositionTree& tree, bool approx = false);

/// Graphviz digraph; the sub is always the left child.
std::string to_dot(const DecompositionTree& tree);

/// Structured form with exact fractions as strings. Deterministic.
std::string to_json(const DecompositionTree& tree);
std::string to_json(const MonomialObject& object);

/// Inverse of to_json. Throws ParseError on malformed input and DomainError
/// when an object violates its invariants.
DecompositionTree tree_from_json(std::string_view text);
MonomialObject object_from_json(std::string_view text);

} // namespace monointerp
