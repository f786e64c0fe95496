#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rosimon/formula.hpp"

namespace rosimon {

/// Syntax error with the character position it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses the concrete formula syntax into a normalized AST:
///
///   formula := disj ("implies" formula)?            -- sugar for not a or b
///   disj    := conj ("or" conj)*
///   conj    := until ("and" until)*
///   until   := unary (("U"|"until") window? until)?
///   unary   := "not" unary
///            | ("G"|"alw"|"F"|"ev") window? unary
///            | "(" formula ")"
///            | atom
///   window  := "[" number "," number "]"            -- omitted => untimed
///   atom    := linexpr ("<"|">"|"<="|">=") number
///   linexpr := "-"? term (("+"|"-") term)*
///   term    := number "*"? ident | ident | "abs" "(" ident ")"
///
/// Comparisons are normalized to f(x) > 0; abs(v) desugars into the
/// disjunction (positive sign) or conjunction (negative sign) of the two
/// sign cases. Throws ParseError on malformed input.
Formula parse_formula(std::string_view text);

}  // namespace rosimon
