#include "riesz/rmul/rewrite.hpp"

#include <algorithm>
#include <unordered_map>

#include "riesz/errors.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/parser.hpp"

namespace riesz::rmul {

using expr::Op;

std::size_t default_fuel(const Expr& f, const Expr& g, std::size_t multiplier) {
  std::size_t lv = 1;
  if (auto a = expr::ladder_level(f)) lv = std::max<std::size_t>(lv, static_cast<std::size_t>(*a));
  if (auto b = expr::ladder_level(g)) lv = std::max<std::size_t>(lv, static_cast<std::size_t>(*b));
  return multiplier * (f.tree_size() + g.tree_size()) * lv;
}

bool structurally_nonnegative(const Expr& e) {
  switch (e.op()) {
    case Op::Unit:
    case Op::Abs:
      return true;
    case Op::Scale:
      return e.coeff().sign() >= 0 && structurally_nonnegative(e.lhs());
    case Op::Add:
      return structurally_nonnegative(e.lhs()) && structurally_nonnegative(e.rhs());
    case Op::Mul:
      return e.lhs() == e.rhs() || (structurally_nonnegative(e.lhs()) && structurally_nonnegative(e.rhs()));
    default:
      return false;
  }
}

namespace {

struct Collector {
  std::vector<std::pair<Rational, Expr>> out;
  std::unordered_map<Expr, std::size_t> index;

  void add(const Expr& e, const Rational& c) {
    if (e.op() == Op::Add) {
      add(e.lhs(), c);
      add(e.rhs(), c);
      return;
    }
    if (e.op() == Op::Scale) {
      add(e.lhs(), c * e.coeff());
      return;
    }
    auto [it, fresh] = index.emplace(e, out.size());
    if (fresh) out.emplace_back(c, e);
    else out[it->second].first += c;
  }
};

// Total order on expressions that does not depend on addresses.
int compare(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return 0;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Gen) return a.name().compare(b.name());
  if (a.op() == Op::Scale && a.coeff() != b.coeff()) return a.coeff() < b.coeff() ? -1 : 1;
  if (a.lhs() && b.lhs()) {
    if (int c = compare(a.lhs(), b.lhs())) return c;
  }
  if (a.rhs() && b.rhs()) return compare(a.rhs(), b.rhs());
  return 0;
}

struct DepthGuard {
  int& d;
  explicit DepthGuard(int& depth) : d(depth) { ++d; }
  ~DepthGuard() { --d; }
};

std::string excerpt(const Expr& e) {
  std::string s = expr::print_expr(e);
  if (s.size() > 200) s = s.substr(0, 200) + "...";
  return s;
}

}  // namespace

std::vector<std::pair<Rational, Expr>> flatten(const Expr& e) {
  Collector col;
  col.add(e, Rational(1));
  std::vector<std::pair<Rational, Expr>> out;
  for (auto& [c, t] : col.out) {
    if (!c.is_zero()) out.emplace_back(std::move(c), std::move(t));
  }
  return out;
}

int Rewriter::level(const Expr& e) {
  if (auto it = level_memo_.find(e.id()); it != level_memo_.end()) return it->second;
  auto lv = expr::ladder_level(e);
  if (!lv) throw DomainError("operand is not in ladder form: " + excerpt(e));
  level_memo_.emplace(e.id(), *lv);
  return *lv;
}

void Rewriter::arm(const Expr& f, const Expr& g) {
  if (depth_ == 0) fuel_ = fuel_limit_ ? fuel_limit_ : default_fuel(f, g);
}

void Rewriter::tick(const char* what, const Expr& f, const Expr& g) {
  ++calls_;
  if (fuel_ == 0) {
    throw FuelError(std::string("rewrite fuel exhausted in ") + what + "(" + excerpt(f) + ", " + excerpt(g) + ")");
  }
  --fuel_;
}

Expr Rewriter::scaled(const Rational& c, const Expr& e) {
  if (c == Rational(1)) return e;
  return pool_.scale(c, e);
}

Expr Rewriter::zero() { return pool_.scale(Rational(0), pool_.unit()); }

Expr Rewriter::build_sum(std::vector<std::pair<Rational, Expr>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return compare(x.second, y.second) < 0; });
  Expr acc;
  for (const auto& [c, t] : terms) {
    Expr s = scaled(c, pool_.intern(t));
    acc = acc ? pool_.add(acc, s) : s;
  }
  return acc ? acc : zero();
}

Expr Rewriter::sum(const std::vector<std::pair<Rational, Expr>>& terms) {
  Collector col;
  for (const auto& [c, t] : terms) {
    if (!c.is_zero()) col.add(t, c);
  }
  std::vector<std::pair<Rational, Expr>> kept;
  for (auto& [c, t] : col.out) {
    if (!c.is_zero()) kept.emplace_back(std::move(c), std::move(t));
  }
  return build_sum(std::move(kept));
}

std::pair<Rational, Expr> Rewriter::canon(const Expr& e) {
  if (auto it = canon_memo_.find(e.id()); it != canon_memo_.end()) return it->second;
  auto terms = flatten(e);
  std::pair<Rational, Expr> out{Rational(0), zero()};
  if (!terms.empty()) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return compare(x.second, y.second) < 0; });
    Rational c = terms.front().first;
    for (auto& t : terms) t.first /= c;
    out = {c, build_sum(std::move(terms))};
  }
  canon_memo_.emplace(e.id(), out);
  return out;
}

Expr Rewriter::abs_of(const Expr& e) {
  auto [c, p] = canon(e);
  if (c.is_zero()) return p;
  if (p.op() != Op::Abs && p.op() != Op::Unit) p = pool_.abs(p);
  return scaled(c.abs(), p);
}

Expr Rewriter::mul_base(const Expr& a, const Expr& b) {
  if (a.op() == Op::Unit) return b;
  if (b.op() == Op::Unit) return a;
  return pool_.mul(a, b);
}

Expr Rewriter::pos_part(const Expr& a) { return pool_.scale(Rational(1, 2), pool_.add(a, pool_.abs(a))); }

Expr Rewriter::neg_part(const Expr& a) { return pool_.scale(Rational(1, 2), pool_.add(pool_.abs(a), pool_.neg(a))); }

Expr Rewriter::pospos_rec(const Expr& a0, const Expr& b0) {
  Expr a = pool_.intern(a0);
  Expr b = pool_.intern(b0);
  if (level(a) != 1 || level(b) != 1) throw DomainError("pospos_rewrite needs level-1 operands");
  Key key{a.id(), b.id()};
  if (auto it = pospos_memo_.find(key); it != pospos_memo_.end()) return it->second;
  Expr a3 = expr::mul(a, expr::mul(a, a));
  Expr b3 = expr::mul(b, expr::mul(b, b));
#ifdef RIESZ_INJECT_POSPOS_SIGN_BUG
  Expr ab = expr::mul(a, expr::neg(b));
#else
  Expr ab = expr::mul(a, b);
#endif
  Expr sugared = expr::meet(expr::pos(ab), expr::add(expr::pos(expr::add(a, a3)), expr::pos(expr::add(b, b3))));
  Expr out = pool_.intern(expr::desugar(sugared));
  pospos_memo_.emplace(key, out);
  return out;
}

Expr Rewriter::product_rec(const Expr& f0, const Expr& g0) {
  // (c f)(d g) = cd (fg), and fg = gf.
  auto [c, f] = canon(f0);
  auto [d, g] = canon(g0);
  if (c.is_zero() || d.is_zero()) return zero();
  if (compare(g, f) < 0) std::swap(f, g);
  return scaled(c * d, product_core(f, g));
}

Expr Rewriter::product_core(const Expr& f, const Expr& g) {
  Key key{f.id(), g.id()};
  if (auto it = product_memo_.find(key); it != product_memo_.end()) return it->second;
  tick("product", f, g);
  DepthGuard guard(depth_);
  Expr out;
  if (level(f) == 1 && level(g) == 1) {
    out = mul_base(f, g);
  } else {
    // f = A + sum c|h|, g = B + sum d|k| with A, B of level 1.
    auto split = [this](const Expr& e, std::vector<std::pair<Rational, Expr>>& base,
                        std::vector<std::pair<Rational, Expr>>& abs_terms) {
      for (auto& [c, t] : flatten(e)) {
        if (t.op() == Op::Abs) abs_terms.emplace_back(c, t.lhs());
        else base.emplace_back(c, t);
      }
      (void)this;
    };
    std::vector<std::pair<Rational, Expr>> fa, fb, ga, gb;
    split(f, fa, fb);
    split(g, ga, gb);
    std::vector<std::pair<Rational, Expr>> terms;
    Expr A = fa.empty() ? Expr() : sum(fa);
    Expr B = ga.empty() ? Expr() : sum(ga);
    if (A && B) terms.emplace_back(Rational(1), mul_base(A, B));
    if (A) {
      for (const auto& [d, k] : gb) terms.emplace_back(d, fabsg_rec(A, k));
    }
    for (const auto& [c, h] : fb) {
      if (B) terms.emplace_back(c, fabsg_rec(B, h));
      for (const auto& [d, k] : gb) terms.emplace_back(c * d, abs_of(product_rec(h, k)));
    }
    out = sum(terms);
  }
  product_memo_.emplace(key, out);
  return out;
}

Expr Rewriter::fabsg_rec(const Expr& f0, const Expr& g0) {
  // (c f)|d g| = c|d| f|g|.
  auto [c, f] = canon(f0);
  auto [d, g] = canon(g0);
  if (c.is_zero() || d.is_zero()) return zero();
  return scaled(c * d.abs(), fabsg_core(f, g));
}

Expr Rewriter::fabsg_core(const Expr& f, const Expr& g) {
  Key key{f.id(), g.id()};
  if (auto it = fabsg_memo_.find(key); it != fabsg_memo_.end()) return it->second;
  tick("fabsg", f, g);
  DepthGuard guard(depth_);
  Expr out;
  if (f.op() == Op::Unit) {
    out = abs_of(g);
  } else if (f.op() == Op::Scale && f.lhs().op() == Op::Unit) {
    out = scaled(f.coeff(), abs_of(g));
  } else if (structurally_nonnegative(f)) {
    out = abs_of(product_rec(f, g));
  } else if (level(f) == 1 && level(g) == 1) {
    // f|g| = f+g+ + f+g- - f-g+ - f-g-, with x- = (-x)+.
    Expr nf = pool_.neg(f);
    Expr ng = pool_.neg(g);
    out = sum({{Rational(1), pospos_rec(f, g)},
               {Rational(1), pospos_rec(f, ng)},
               {Rational(-1), pospos_rec(nf, g)},
               {Rational(-1), pospos_rec(nf, ng)}});
  } else {
    std::vector<std::pair<Rational, Expr>> base;
    std::vector<std::pair<Rational, Expr>> terms;
    for (auto& [c, t] : flatten(f)) {
      if (t.op() == Op::Abs) terms.emplace_back(c, abs_of(product_rec(t.lhs(), g)));
      else base.emplace_back(c, t);
    }
    if (!base.empty()) {
      Expr A = sum(base);
      if (level(g) == 1) {
        terms.emplace_back(Rational(1), fabsg_rec(A, g));
      } else {
        // A|g| = A+|g| - A-|g| = |A+ g| - |A- g|.
        terms.emplace_back(Rational(1), abs_of(product_rec(pos_part(A), g)));
        terms.emplace_back(Rational(-1), abs_of(product_rec(neg_part(A), g)));
      }
    }
    out = sum(terms);
  }
  fabsg_memo_.emplace(key, out);
  return out;
}

Expr Rewriter::ladderize_rec(const Expr& e0) {
  Expr e = pool_.intern(e0);
  if (auto it = ladder_memo_.find(e.id()); it != ladder_memo_.end()) return it->second;
  Expr out;
  switch (e.op()) {
    case Op::Gen:
    case Op::Unit:
      out = e;
      break;
    case Op::Scale:
    case Op::Abs:
      out = pool_.intern(expr::with_children(e, ladderize_rec(e.lhs())));
      break;
    case Op::Add:
      out = pool_.add(ladderize_rec(e.lhs()), ladderize_rec(e.rhs()));
      break;
    case Op::Mul: {
      Expr a = ladderize_rec(e.lhs());
      Expr b = ladderize_rec(e.rhs());
      if (level(a) == 1 && level(b) == 1) {
        out = pool_.mul(a, b);
      } else {
        arm(a, b);
        out = product_rec(a, b);
      }
      break;
    }
    default:
      throw DomainError("ladderize expects a core expression");
  }
  ladder_memo_.emplace(e.id(), out);
  return out;
}

Expr Rewriter::pospos(const Expr& a, const Expr& b) { return pospos_rec(a, b); }

Expr Rewriter::product(const Expr& f, const Expr& g) {
  Expr fi = pool_.intern(f);
  Expr gi = pool_.intern(g);
  if (level(fi) == 1 && level(gi) == 1) return mul_base(fi, gi);
  arm(fi, gi);
  return product_rec(fi, gi);
}

Expr Rewriter::fabsg(const Expr& f, const Expr& g) {
  Expr fi = pool_.intern(f);
  Expr gi = pool_.intern(g);
  arm(fi, gi);
  return fabsg_rec(fi, gi);
}

Expr Rewriter::ladderize(const Expr& e) {
  Expr core = expr::desugar(e);
  return ladderize_rec(core);
}

Expr pospos_rewrite(const Expr& a, const Expr& b) { return Rewriter().pospos(a, b); }
Expr product_rewrite(const Expr& f, const Expr& g, std::size_t fuel) { return Rewriter(fuel).product(f, g); }
Expr fabsg_rewrite(const Expr& f, const Expr& g, std::size_t fuel) { return Rewriter(fuel).fabsg(f, g); }
Expr ladderize(const Expr& e, std::size_t fuel) { return Rewriter(fuel).ladderize(e); }

}  // namespace riesz::rmul
