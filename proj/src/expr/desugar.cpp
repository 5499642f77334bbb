#include "riesz/expr/desugar.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace riesz::expr {

namespace {

class Desugarer {
 public:
  Expr run(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr out = rewrite(e);
    memo_.emplace(e.id(), out);
    keep_.push_back(e);
    return out;
  }

 private:
  Expr rewrite(const Expr& e) {
    const Rational half(1, 2);
    switch (e.op()) {
      case Op::Gen:
      case Op::Unit:
        return e;
      case Op::Scale:
      case Op::Abs: {
        Expr a = run(e.lhs());
        return a.id() == e.lhs().id() ? e : with_children(e, a);
      }
      case Op::Add:
      case Op::Mul: {
        Expr a = run(e.lhs());
        Expr b = run(e.rhs());
        return a.id() == e.lhs().id() && b.id() == e.rhs().id() ? e : with_children(e, a, b);
      }
      case Op::Pos: {
        Expr f = run(e.lhs());
        return scale(half, add(f, abs(f)));
      }
      case Op::NegPart: {
        Expr f = run(e.lhs());
        return scale(half, add(abs(f), neg(f)));
      }
      case Op::Meet: {
        Expr f = run(e.lhs());
        Expr g = run(e.rhs());
        return scale(half, add(add(f, g), neg(abs(add(f, neg(g))))));
      }
      case Op::Join: {
        Expr f = run(e.lhs());
        Expr g = run(e.rhs());
        return scale(half, add(add(f, g), abs(add(f, neg(g)))));
      }
    }
    return e;
  }

  std::unordered_map<const Node*, Expr> memo_;
  std::vector<Expr> keep_;
};

using LevelMemo = std::unordered_map<const Node*, std::optional<int>>;

std::optional<int> level(const Expr& e, LevelMemo& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  std::optional<int> r;
  switch (e.op()) {
    case Op::Gen:
    case Op::Unit:
      r = 1;
      break;
    case Op::Scale:
      r = level(e.lhs(), memo);
      break;
    case Op::Add: {
      auto a = level(e.lhs(), memo);
      auto b = level(e.rhs(), memo);
      if (a && b) r = std::max(*a, *b);
      break;
    }
    case Op::Abs:
      if (auto a = level(e.lhs(), memo)) r = *a + 1;
      break;
    case Op::Mul: {
      auto a = level(e.lhs(), memo);
      auto b = level(e.rhs(), memo);
      if (a == 1 && b == 1) r = 1;
      break;
    }
    default:
      break;
  }
  memo.emplace(e.id(), r);
  return r;
}

}  // namespace

Expr desugar(const Expr& e) { return Desugarer().run(e); }

bool is_core(const Expr& e) {
  std::unordered_map<const Node*, bool> memo;
  std::function<bool(const Expr&)> walk = [&](const Expr& x) -> bool {
    if (!x) return true;
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    bool ok = x.op() != Op::Pos && x.op() != Op::NegPart && x.op() != Op::Meet && x.op() != Op::Join &&
              walk(x.lhs()) && walk(x.rhs());
    memo.emplace(x.id(), ok);
    return ok;
  };
  return walk(e);
}

std::optional<int> ladder_level(const Expr& e) {
  LevelMemo memo;
  return level(e, memo);
}

std::size_t unstratified_products(const Expr& e) {
  LevelMemo memo;
  std::unordered_map<const Node*, bool> seen;
  std::size_t count = 0;
  std::vector<Expr> stack{e};
  while (!stack.empty()) {
    Expr x = stack.back();
    stack.pop_back();
    if (!x || seen.count(x.id())) continue;
    seen.emplace(x.id(), true);
    if (x.op() == Op::Mul && !(level(x.lhs(), memo) == 1 && level(x.rhs(), memo) == 1)) ++count;
    stack.push_back(x.lhs());
    stack.push_back(x.rhs());
  }
  return count;
}

}  // namespace riesz::expr
