#pragma once

#include <optional>

#include "riesz/expr/expression.hpp"

namespace riesz::expr {

/// Rewrites Pos, NegPart, Meet and Join into the core {Gen, Unit, Scale,
/// Add, Mul, Abs} using
///   a v b = (a + b + |a - b|)/2     a ^ b = (a + b - |a - b|)/2
///   a+    = (a + |a|)/2             a-    = (|a| - a)/2
/// Core input is returned unchanged (same node).
Expr desugar(const Expr& e);

bool is_core(const Expr& e);

/// Structural upper bound on the closure-ladder level of a core expression:
/// Gen, Unit -> 1; Scale, Add -> max of children; Abs(e) -> level(e) + 1;
/// Mul(a, b) -> 1 when both are level 1, otherwise unstratified (nullopt).
/// Non-core input is unstratified.
std::optional<int> ladder_level(const Expr& e);

/// Ladder form: every Mul has two level-1 operands.
inline bool is_ladder_form(const Expr& e) { return ladder_level(e).has_value(); }

/// Number of Mul nodes whose operands are not both level 1.
std::size_t unstratified_products(const Expr& e);

}  // namespace riesz::expr
