#include "riesz/expr/expression.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

#include "riesz/errors.hpp"

namespace riesz::expr {

namespace {

constexpr std::size_t kSizeCap = std::numeric_limits<std::size_t>::max() / 4;

std::size_t combine(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

Expr build(Op op, std::string name, Rational coeff, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->coeff = std::move(coeff);
  std::size_t h = static_cast<std::size_t>(op) * 0x100000001b3ULL;
  if (op == Op::Gen) h = combine(h, std::hash<std::string>{}(n->name));
  if (op == Op::Scale) h = combine(h, n->coeff.hash());
  if (a) {
    h = combine(h, a.hash());
    n->size = std::min(kSizeCap, n->size + a.tree_size());
    n->depth = 1 + a.depth();
  }
  if (b) {
    h = combine(h, b.hash());
    n->size = std::min(kSizeCap, n->size + b.tree_size());
    n->depth = std::max(n->depth, 1 + b.depth());
  }
  n->hash = h;
  n->a = std::move(a);
  n->b = std::move(b);
  return Expr(std::move(n));
}

bool is_binary_op(Op op) { return op == Op::Add || op == Op::Mul || op == Op::Meet || op == Op::Join; }
bool is_unary_op(Op op) { return op == Op::Scale || op == Op::Abs || op == Op::Pos || op == Op::NegPart; }

}  // namespace

const char* op_name(Op op) {
  switch (op) {
    case Op::Gen: return "Gen";
    case Op::Unit: return "Unit";
    case Op::Scale: return "Scale";
    case Op::Add: return "Add";
    case Op::Mul: return "Mul";
    case Op::Abs: return "Abs";
    case Op::Pos: return "Pos";
    case Op::NegPart: return "NegPart";
    case Op::Meet: return "Meet";
    case Op::Join: return "Join";
  }
  return "?";
}

Op Expr::op() const { return n_->op; }
const std::string& Expr::name() const { return n_->name; }
const Rational& Expr::coeff() const { return n_->coeff; }
const Expr& Expr::lhs() const { return n_->a; }
const Expr& Expr::rhs() const { return n_->b; }
std::size_t Expr::hash() const { return n_ ? n_->hash : 0; }
std::size_t Expr::tree_size() const { return n_ ? n_->size : 0; }
std::size_t Expr::depth() const { return n_ ? n_->depth : 0; }
bool Expr::is_binary() const { return is_binary_op(op()); }
bool Expr::is_unary() const { return is_unary_op(op()); }

bool operator==(const Expr& x, const Expr& y) {
  if (x.id() == y.id()) return true;
  if (!x || !y) return false;
  if (x.hash() != y.hash() || x.op() != y.op()) return false;
  switch (x.op()) {
    case Op::Gen: return x.name() == y.name();
    case Op::Unit: return true;
    case Op::Scale: return x.coeff() == y.coeff() && x.lhs() == y.lhs();
    default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

Expr gen(std::string name) {
  if (name.empty()) throw Error("generator name must be nonempty");
  return build(Op::Gen, std::move(name), Rational(0), {}, {});
}
Expr unit() { return build(Op::Unit, {}, Rational(0), {}, {}); }
Expr scale(const Rational& c, Expr e) { return build(Op::Scale, {}, c, std::move(e), {}); }
Expr constant(const Rational& c) { return scale(c, unit()); }
Expr add(Expr a, Expr b) { return build(Op::Add, {}, Rational(0), std::move(a), std::move(b)); }
Expr mul(Expr a, Expr b) { return build(Op::Mul, {}, Rational(0), std::move(a), std::move(b)); }
Expr abs(Expr e) { return build(Op::Abs, {}, Rational(0), std::move(e), {}); }
Expr pos(Expr e) { return build(Op::Pos, {}, Rational(0), std::move(e), {}); }
Expr negp(Expr e) { return build(Op::NegPart, {}, Rational(0), std::move(e), {}); }
Expr meet(Expr a, Expr b) { return build(Op::Meet, {}, Rational(0), std::move(a), std::move(b)); }
Expr join(Expr a, Expr b) { return build(Op::Join, {}, Rational(0), std::move(a), std::move(b)); }
Expr sub(Expr a, Expr b) { return add(std::move(a), neg(std::move(b))); }
Expr neg(Expr e) { return scale(Rational(-1), std::move(e)); }

Expr with_children(const Expr& e, Expr a, Expr b) {
  return build(e.op(), e.name(), e.coeff(), std::move(a), std::move(b));
}

std::vector<std::string> generators(const Expr& e) {
  std::vector<std::string> out;
  std::unordered_set<const Node*> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (!x || !seen.insert(x.id()).second) return;
    if (x.op() == Op::Gen) {
      if (std::find(out.begin(), out.end(), x.name()) == out.end()) out.push_back(x.name());
      return;
    }
    walk(x.lhs());
    walk(x.rhs());
  };
  walk(e);
  return out;
}

std::size_t dag_size(const Expr& e) {
  std::unordered_set<const Node*> seen;
  std::vector<const Expr*> stack{&e};
  while (!stack.empty()) {
    const Expr* x = stack.back();
    stack.pop_back();
    if (!*x || !seen.insert(x->id()).second) continue;
    stack.push_back(&x->lhs());
    stack.push_back(&x->rhs());
  }
  return seen.size();
}

std::size_t ExprPool::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.op);
  h = combine(h, std::hash<std::string>{}(k.name));
  h = combine(h, k.coeff.hash());
  h = combine(h, std::hash<const Node*>{}(k.a));
  h = combine(h, std::hash<const Node*>{}(k.b));
  return h;
}

Expr ExprPool::make(Op op, std::string name, Rational coeff, Expr a, Expr b) {
  Key key{op, name, coeff, a.id(), b.id()};
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  Expr e = build(op, std::move(name), std::move(coeff), std::move(a), std::move(b));
  interned_.emplace(e.id(), std::make_pair(e, e));
  table_.emplace(std::move(key), e);
  return e;
}

Expr ExprPool::intern(const Expr& e) {
  if (!e) return e;
  if (auto it = interned_.find(e.id()); it != interned_.end()) return it->second.second;
  Expr a = intern(e.lhs());
  Expr b = intern(e.rhs());
  Expr out = make(e.op(), e.name(), e.coeff(), std::move(a), std::move(b));
  interned_.emplace(e.id(), std::make_pair(e, out));
  return out;
}

}  // namespace riesz::expr
