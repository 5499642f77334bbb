#pragma once

#include <map>
#include <string>
#include <vector>

#include "riesz/numeric/rational.hpp"

namespace riesz::tensor {

using num::Rational;

/// Values of a function of two variables on the nodes xs x ys, row-major in x.
/// Componentwise operations make this a finite product of copies of Q.
struct GridFunction {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  std::vector<Rational> values;

  const Rational& at(std::size_t i, std::size_t j) const { return values[i * ys.size() + j]; }
  Rational& at(std::size_t i, std::size_t j) { return values[i * ys.size() + j]; }
  bool same_grid(const GridFunction& o) const { return xs == o.xs && ys == o.ys; }
  friend bool operator==(const GridFunction&, const GridFunction&) = default;
};

/// nx x ny equispaced nodes including the endpoints of both domains.
struct GridSpec {
  std::size_t nx = 16;
  std::size_t ny = 16;
  Rational x0 = Rational(0), x1 = Rational(1);
  Rational y0 = Rational(0), y1 = Rational(1);

  std::vector<Rational> x_nodes() const;
  std::vector<Rational> y_nodes() const;
};

class GridModel {
 public:
  using Element = GridFunction;

  GridModel(std::vector<Rational> xs, std::vector<Rational> ys);
  explicit GridModel(const GridSpec& spec) : GridModel(spec.x_nodes(), spec.y_nodes()) {}

  void bind(const std::string& name, GridFunction f);
  const std::vector<Rational>& xs() const noexcept { return xs_; }
  const std::vector<Rational>& ys() const noexcept { return ys_; }

  GridFunction filled(const Rational& c) const;
  GridFunction generator(const std::string& name) const;
  GridFunction unit() const { return filled(Rational(1)); }
  bool unital() const noexcept { return true; }
  GridFunction add(const GridFunction& a, const GridFunction& b) const;
  GridFunction scale(const Rational& c, const GridFunction& a) const;
  GridFunction mul(const GridFunction& a, const GridFunction& b) const;
  GridFunction abs(const GridFunction& a) const;
  GridFunction pos(const GridFunction& a) const;
  GridFunction negp(const GridFunction& a) const;
  GridFunction meet(const GridFunction& a, const GridFunction& b) const;
  GridFunction join(const GridFunction& a, const GridFunction& b) const;
  bool equal(const GridFunction& a, const GridFunction& b) const;
  std::string format(const GridFunction& a) const;

 private:
  void check(const GridFunction& a) const;
  template <class F>
  GridFunction map2(const GridFunction& a, const GridFunction& b, F f) const;
  template <class F>
  GridFunction map1(const GridFunction& a, F f) const;

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  std::map<std::string, GridFunction> gens_;
};

}  // namespace riesz::tensor
