#ifndef NNIL_PARSER_HPP
#define NNIL_PARSER_HPP

#include <string_view>
#include <utility>

#include "nnil/formula.hpp"

namespace nnil {

// Parses the ASCII concrete syntax
//   form := imp; imp := or ("->" imp)?; or := and ("|" and)*;
//   and := neg ("&" neg)*; neg := "~" neg | atom;
//   atom := "false" | "true" | ident | "(" form ")"
// against a fixed context; identifiers not in ctx raise ParseError.
// Reported offsets are 1-based character positions.
Formula parse(std::string_view text, const VarContext& ctx);

// Same grammar, but the context is built from the identifiers in first
// occurrence order.
std::pair<Formula, VarContext> parse_auto(std::string_view text);

// Same grammar; unknown identifiers are appended to ctx so several inputs
// can share one growing context.
Formula parse_extending(std::string_view text, VarContext& ctx);

}  // namespace nnil

#endif
