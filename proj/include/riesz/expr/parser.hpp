#pragma once

#include <string>
#include <string_view>

#include "riesz/expr/expression.hpp"

namespace riesz::expr {

/// Parses the expression grammar:
///
///   expr  := sum
///   sum   := prod (('+' | '-') prod)*
///   prod  := unary ('*' unary)*
///   unary := '-' unary | atom
///   atom  := rational | ident | '(' expr ')' | func '(' expr (',' expr)? ')'
///   func  := abs | pos | negp | meet | join
///
/// A rational literal `c` is Scale(c, Unit); the identifier `unit` is Unit.
/// Unary minus and binary '-' negate a bare literal in place and otherwise
/// wrap the operand in Scale(-1, .). A product whose first factor is a bare
/// literal becomes Scale(c, rest). Throws ParseError with the byte offset.
Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print_expr(e)) == e for every tree.
std::string print_expr(const Expr& e);

/// Indented constructor-style dump, e.g. `Mul(Abs(Gen g1), Gen g2)`.
std::string dump_expr(const Expr& e);

}  // namespace riesz::expr
