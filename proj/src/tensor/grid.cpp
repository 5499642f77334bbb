#include "riesz/tensor/grid.hpp"

#include "riesz/errors.hpp"

namespace riesz::tensor {

namespace {

std::vector<Rational> equispaced(std::size_t n, const Rational& a, const Rational& b) {
  if (n == 0) throw DomainError("grid needs at least one node per axis");
  if (n == 1) return {a};
  std::vector<Rational> out;
  out.reserve(n);
  Rational step = (b - a) / Rational(static_cast<long>(n - 1));
  for (std::size_t i = 0; i < n; ++i) out.push_back(a + step * Rational(static_cast<long>(i)));
  return out;
}

}  // namespace

std::vector<Rational> GridSpec::x_nodes() const { return equispaced(nx, x0, x1); }
std::vector<Rational> GridSpec::y_nodes() const { return equispaced(ny, y0, y1); }

GridModel::GridModel(std::vector<Rational> xs, std::vector<Rational> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || ys_.empty()) throw DomainError("empty grid");
}

void GridModel::check(const GridFunction& a) const {
  if (a.xs != xs_ || a.ys != ys_ || a.values.size() != xs_.size() * ys_.size()) {
    throw BindingError("carrier mismatch: grid differs");
  }
}

void GridModel::bind(const std::string& name, GridFunction f) {
  check(f);
  gens_.insert_or_assign(name, std::move(f));
}

GridFunction GridModel::filled(const Rational& c) const {
  return GridFunction{xs_, ys_, std::vector<Rational>(xs_.size() * ys_.size(), c)};
}

GridFunction GridModel::generator(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw BindingError("unbound generator " + name);
  return it->second;
}

template <class F>
GridFunction GridModel::map2(const GridFunction& a, const GridFunction& b, F f) const {
  check(a);
  check(b);
  GridFunction r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = f(a.values[i], b.values[i]);
  return r;
}

template <class F>
GridFunction GridModel::map1(const GridFunction& a, F f) const {
  check(a);
  GridFunction r = a;
  for (auto& v : r.values) v = f(v);
  return r;
}

GridFunction GridModel::add(const GridFunction& a, const GridFunction& b) const {
  return map2(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}
GridFunction GridModel::scale(const Rational& c, const GridFunction& a) const {
  return map1(a, [&](const Rational& x) { return c * x; });
}
GridFunction GridModel::mul(const GridFunction& a, const GridFunction& b) const {
  return map2(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}
GridFunction GridModel::abs(const GridFunction& a) const {
  return map1(a, [](const Rational& x) { return x.abs(); });
}
GridFunction GridModel::pos(const GridFunction& a) const {
  return map1(a, [](const Rational& x) { return num::max(x, Rational(0)); });
}
GridFunction GridModel::negp(const GridFunction& a) const {
  return map1(a, [](const Rational& x) { return num::max(-x, Rational(0)); });
}
GridFunction GridModel::meet(const GridFunction& a, const GridFunction& b) const {
  return map2(a, b, [](const Rational& x, const Rational& y) { return num::min(x, y); });
}
GridFunction GridModel::join(const GridFunction& a, const GridFunction& b) const {
  return map2(a, b, [](const Rational& x, const Rational& y) { return num::max(x, y); });
}

bool GridModel::equal(const GridFunction& a, const GridFunction& b) const {
  check(a);
  check(b);
  return a.values == b.values;
}

std::string GridModel::format(const GridFunction& a) const {
  std::string s = "grid[";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (j) s += ", ";
      s += a.at(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace riesz::tensor
