#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "riesz/expr/expression.hpp"

namespace riesz::rmul {

using expr::Expr;
using num::Rational;

/// 10 * (size(f) + size(g)) * max level, scaled by `multiplier / 10`.
std::size_t default_fuel(const Expr& f, const Expr& g, std::size_t multiplier = 10);

/// Unit, Abs, Mul(a, a), and Scale/Add/Mul built from such terms with
/// nonnegative coefficients.
bool structurally_nonnegative(const Expr& e);

/// f = sum c_i t_i with each t_i neither Add nor Scale; identical terms merged
/// and zero coefficients dropped, in first-occurrence order.
std::vector<std::pair<Rational, Expr>> flatten(const Expr& e);

/// Rewrites products of ladder expressions into ladder form. Results are
/// built in a private pool, so shared subterms are stored once, and repeated
/// (f, g) pairs are rewritten once.
class Rewriter {
 public:
  /// fuel = 0 picks default_fuel per top-level call.
  explicit Rewriter(std::size_t fuel = 0) : fuel_limit_(fuel) {}

  /// a+ b+ = (ab)+ ^ ((a + a^3)+ + (b + b^3)+), desugared. Needs level-1 a, b.
  Expr pospos(const Expr& a, const Expr& b);
  /// f g in ladder form.
  Expr product(const Expr& f, const Expr& g);
  /// f |g| in ladder form.
  Expr fabsg(const Expr& f, const Expr& g);
  /// Desugars and replaces every unstratified product, bottom-up.
  Expr ladderize(const Expr& e);

  std::size_t calls() const noexcept { return calls_; }

 private:
  using Key = std::pair<const expr::Node*, const expr::Node*>;

  void arm(const Expr& f, const Expr& g);
  void tick(const char* what, const Expr& f, const Expr& g);
  Expr product_rec(const Expr& f, const Expr& g);
  Expr fabsg_rec(const Expr& f, const Expr& g);
  Expr product_core(const Expr& f, const Expr& g);
  Expr fabsg_core(const Expr& f, const Expr& g);
  /// e = c p with p a sorted sum whose first coefficient is 1.
  std::pair<Rational, Expr> canon(const Expr& e);
  /// |e| with the scalar content pulled out.
  Expr abs_of(const Expr& e);
  Expr zero();
  Expr build_sum(std::vector<std::pair<Rational, Expr>> terms);
  Expr pospos_rec(const Expr& a, const Expr& b);
  Expr ladderize_rec(const Expr& e);
  Expr mul_base(const Expr& a, const Expr& b);
  Expr sum(const std::vector<std::pair<Rational, Expr>>& terms);
  Expr scaled(const Rational& c, const Expr& e);
  Expr pos_part(const Expr& a);
  Expr neg_part(const Expr& a);
  int level(const Expr& e);

  expr::ExprPool pool_;
  std::size_t fuel_limit_;
  std::size_t fuel_ = 0;
  std::size_t calls_ = 0;
  int depth_ = 0;
  std::map<Key, Expr> product_memo_;
  std::map<Key, Expr> fabsg_memo_;
  std::map<Key, Expr> pospos_memo_;
  std::map<const expr::Node*, Expr> ladder_memo_;
  std::map<const expr::Node*, int> level_memo_;
  std::map<const expr::Node*, std::pair<Rational, Expr>> canon_memo_;
};

Expr pospos_rewrite(const Expr& a, const Expr& b);
Expr product_rewrite(const Expr& f, const Expr& g, std::size_t fuel = 0);
Expr fabsg_rewrite(const Expr& f, const Expr& g, std::size_t fuel = 0);
Expr ladderize(const Expr& e, std::size_t fuel = 0);

}  // namespace riesz::rmul
