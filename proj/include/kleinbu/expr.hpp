#pragma once

// Braid expressions: products of braid literals with prefix operators.
//
//   expr    := product
//   product := unary (("*" | "mul")? unary)*
//   unary   := ("inv" | "lsigma") unary | atom
//   atom    := "(" word ";" int "," int ")" | "(" expr ")" | "sigma2" | "1"
//
// A parenthesised group is a literal exactly when it contains ';' outside any
// nested parentheses.

#include <string_view>

#include "kleinbu/braid.hpp"

namespace kleinbu {

/// Throws ParseError with a byte offset into `text`.
BraidElt eval_braid_expression(std::string_view text);

}  // namespace kleinbu
