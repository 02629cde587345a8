#pragma once

#include <string>
#include <variant>
#include <vector>

#include "znz/group.hpp"

namespace znz {

/// A normal-form literal "[a1,...,an] t^k" before it is bound to a
/// group (the dimension check happens at realization).
struct NormalFormLiteral {
    std::vector<Int> coords;
    Int k;
};

using ElementLiteral = std::variant<NormalFormLiteral, GroupWord>;

/// Parses either a normal form "[a1,...,an] t^k" (t-part optional,
/// bare "t" means t^1) or a free word of whitespace-separated letters
/// like "g3^-2 t^5 g1 t".  The empty string is the empty word.
ElementLiteral parse_element(const std::string& text);

/// "[a1,...,an]" as a plain integer vector.
std::vector<Int> parse_int_vector(const std::string& text);

/// Binds a literal to a group: checks the coordinate count of normal
/// forms and collects free words.
GroupElement realize(const AbcGroup& g, const ElementLiteral& lit);

/// Renders "[a1,...,an] t^k".  format/parse round-trip exactly.
std::string format_element(const GroupElement& e);

}  // namespace znz
