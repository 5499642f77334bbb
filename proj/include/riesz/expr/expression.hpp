#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "riesz/numeric/rational.hpp"

namespace riesz::expr {

using num::Rational;

enum class Op : std::uint8_t { Gen, Unit, Scale, Add, Mul, Abs, Pos, NegPart, Meet, Join };

const char* op_name(Op op);

struct Node;

/// Immutable handle to an expression tree. Subtrees may be shared, so the
/// handle is really a DAG node; equality is structural.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  explicit operator bool() const noexcept { return static_cast<bool>(n_); }
  const Node& node() const { return *n_; }
  const Node* id() const noexcept { return n_.get(); }

  Op op() const;
  const std::string& name() const;
  const Rational& coeff() const;
  const Expr& lhs() const;
  const Expr& rhs() const;
  /// Structural hash, computed once at construction.
  std::size_t hash() const;
  /// Node count of the fully expanded tree (saturates).
  std::size_t tree_size() const;
  /// Longest root-to-leaf path, counting nodes.
  std::size_t depth() const;

  bool is_binary() const;
  bool is_unary() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const Node> n_;
};

struct Node {
  Op op;
  std::string name;  // Gen
  Rational coeff;    // Scale
  Expr a;            // first child
  Expr b;            // second child (binary ops)
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
};

Expr gen(std::string name);
Expr unit();
Expr scale(const Rational& c, Expr e);
/// Scale(c, Unit)
Expr constant(const Rational& c);
Expr add(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr abs(Expr e);
Expr pos(Expr e);
Expr negp(Expr e);
Expr meet(Expr a, Expr b);
Expr join(Expr a, Expr b);
/// a + (-1)b
Expr sub(Expr a, Expr b);
/// (-1)e
Expr neg(Expr e);

/// Rebuilds `e` with the given children (same op, name and coefficient).
Expr with_children(const Expr& e, Expr a, Expr b = {});

/// Generator names in first-occurrence order.
std::vector<std::string> generators(const Expr& e);

/// Distinct nodes in the DAG.
std::size_t dag_size(const Expr& e);

/// Hash-consing table: structurally equal nodes built through one pool are
/// the same object, so repeated subterms are stored once.
class ExprPool {
 public:
  Expr intern(const Expr& e);

  Expr gen(std::string name) { return make(Op::Gen, std::move(name), Rational(0), {}, {}); }
  Expr unit() { return make(Op::Unit, {}, Rational(0), {}, {}); }
  Expr scale(const Rational& c, const Expr& e) { return make(Op::Scale, {}, c, intern(e), {}); }
  Expr add(const Expr& a, const Expr& b) { return make(Op::Add, {}, Rational(0), intern(a), intern(b)); }
  Expr mul(const Expr& a, const Expr& b) { return make(Op::Mul, {}, Rational(0), intern(a), intern(b)); }
  Expr abs(const Expr& e) { return make(Op::Abs, {}, Rational(0), intern(e), {}); }
  Expr sub(const Expr& a, const Expr& b) { return add(a, scale(Rational(-1), b)); }
  Expr neg(const Expr& e) { return scale(Rational(-1), e); }

  std::size_t size() const { return table_.size(); }

 private:
  struct Key {
    Op op;
    std::string name;
    Rational coeff;
    const Node* a;
    const Node* b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Expr make(Op op, std::string name, Rational coeff, Expr a, Expr b);

  std::unordered_map<Key, Expr, KeyHash> table_;
  // original node -> (original, canonical); holding the original keeps its
  // address from being reused.
  std::unordered_map<const Node*, std::pair<Expr, Expr>> interned_;
};

}  // namespace riesz::expr

template <>
struct std::hash<riesz::expr::Expr> {
  std::size_t operator()(const riesz::expr::Expr& e) const noexcept { return e.hash(); }
};
