#pragma once

#include <concepts>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/expr/expression.hpp"
#include "riesz/pwfun/piecewise.hpp"

namespace riesz::expr {

/// An f-algebra model: elements plus the Riesz and algebra operations.
template <class M>
concept Model = requires(const M& m, const typename M::Element& x, const Rational& c, const std::string& n) {
  { m.generator(n) } -> std::convertible_to<typename M::Element>;
  { m.unit() } -> std::convertible_to<typename M::Element>;
  { m.unital() } -> std::convertible_to<bool>;
  { m.add(x, x) } -> std::convertible_to<typename M::Element>;
  { m.scale(c, x) } -> std::convertible_to<typename M::Element>;
  { m.mul(x, x) } -> std::convertible_to<typename M::Element>;
  { m.abs(x) } -> std::convertible_to<typename M::Element>;
  { m.pos(x) } -> std::convertible_to<typename M::Element>;
  { m.negp(x) } -> std::convertible_to<typename M::Element>;
  { m.meet(x, x) } -> std::convertible_to<typename M::Element>;
  { m.join(x, x) } -> std::convertible_to<typename M::Element>;
  { m.equal(x, x) } -> std::convertible_to<bool>;
};

using QVector = std::vector<Rational>;

std::string format_vector(const QVector& v);

/// Q^d with componentwise operations.
class VectorModel {
 public:
  using Element = QVector;

  explicit VectorModel(std::size_t dim, bool unital = true) : dim_(dim), unital_(unital) {}

  void bind(const std::string& name, QVector v);
  std::size_t dim() const noexcept { return dim_; }
  const std::map<std::string, QVector>& bindings() const noexcept { return gens_; }

  QVector generator(const std::string& name) const;
  QVector unit() const;
  bool unital() const noexcept { return unital_; }
  QVector add(const QVector& a, const QVector& b) const;
  QVector scale(const Rational& c, const QVector& a) const;
  QVector mul(const QVector& a, const QVector& b) const;
  QVector abs(const QVector& a) const;
  QVector pos(const QVector& a) const;
  QVector negp(const QVector& a) const;
  QVector meet(const QVector& a, const QVector& b) const;
  QVector join(const QVector& a, const QVector& b) const;
  bool equal(const QVector& a, const QVector& b) const { return a == b; }
  bool leq(const QVector& a, const QVector& b) const;
  std::string format(const QVector& a) const { return format_vector(a); }

 private:
  void check(const QVector& a) const;

  std::size_t dim_;
  bool unital_;
  std::map<std::string, QVector> gens_;
};

/// Piecewise-polynomial functions on [a, b].
class PwModel {
 public:
  using Element = pw::PiecewiseFunction;

  PwModel(Rational a, Rational b, pw::Budget budget = {});

  void bind(const std::string& name, Element f);
  const Rational& domain_lo() const noexcept { return a_; }
  const Rational& domain_hi() const noexcept { return b_; }
  const pw::Budget& budget() const noexcept { return budget_; }
  const std::map<std::string, Element>& bindings() const noexcept { return gens_; }

  Element generator(const std::string& name) const;
  Element unit() const;
  bool unital() const noexcept { return true; }
  Element add(const Element& f, const Element& g) const;
  Element scale(const Rational& c, const Element& f) const;
  Element mul(const Element& f, const Element& g) const;
  Element abs(const Element& f) const;
  Element pos(const Element& f) const;
  Element negp(const Element& f) const;
  Element meet(const Element& f, const Element& g) const;
  Element join(const Element& f, const Element& g) const;
  bool equal(const Element& f, const Element& g) const;
  bool leq(const Element& f, const Element& g) const;
  std::string format(const Element& f) const;

 private:
  void check(const Element& f) const;

  Rational a_;
  Rational b_;
  pw::Budget budget_;
  std::map<std::string, Element> gens_;
};

/// Evaluates `e` in `m`, once per distinct node.
template <Model M>
typename M::Element evaluate(const Expr& e, const M& m) {
  using E = typename M::Element;
  std::unordered_map<const Node*, E> memo;
  struct Walker {
    const M& m;
    std::unordered_map<const Node*, E>& memo;

    E run(const Expr& x) {
      if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
      E v = step(x);
      memo.emplace(x.id(), v);
      return v;
    }

    E step(const Expr& x) {
      switch (x.op()) {
        case Op::Gen: return m.generator(x.name());
        case Op::Unit:
          if (!m.unital()) throw BindingError("Unit used in a non-unital model");
          return m.unit();
        case Op::Scale: return m.scale(x.coeff(), run(x.lhs()));
        case Op::Add: return m.add(run(x.lhs()), run(x.rhs()));
        case Op::Mul: return m.mul(run(x.lhs()), run(x.rhs()));
        case Op::Abs: return m.abs(run(x.lhs()));
        case Op::Pos: return m.pos(run(x.lhs()));
        case Op::NegPart: return m.negp(run(x.lhs()));
        case Op::Meet: return m.meet(run(x.lhs()), run(x.rhs()));
        case Op::Join: return m.join(run(x.lhs()), run(x.rhs()));
      }
      throw Error("unknown expression node");
    }
  };
  return Walker{m, memo}.run(e);
}

}  // namespace riesz::expr
