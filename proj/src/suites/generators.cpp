#include "riesz/suites/generators.hpp"

#include <set>

namespace riesz::suites {

using expr::Expr;

pw::PiecewiseFunction random_pl(const Rational& a, const Rational& b, const PlShape& shape, Rng& rng) {
  std::set<Rational> inner;
  std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(shape.max_breaks)));
  for (std::size_t i = 0; i < n; ++i) {
    long d = rng.uniform(2, 24);
    Rational x = a + (b - a) * Rational(rng.uniform(1, d - 1), d);
    inner.insert(x);
  }
  std::vector<Rational> xs{a};
  xs.insert(xs.end(), inner.begin(), inner.end());
  xs.push_back(b);
  std::vector<Rational> ys;
  for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(rng.rational(shape.num, shape.den));
  return pw::PiecewiseFunction::linear_interpolant(xs, ys);
}

std::vector<Rational> random_vector(std::size_t dim, long num, long den, Rng& rng) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(rng.rational(num, den));
  return v;
}

std::vector<Rational> random_nonneg_vector(std::size_t dim, long num, long den, Rng& rng) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(rng.nonneg_rational(num, den));
  return v;
}

namespace {

Expr leaf(const std::vector<std::string>& names, long const_percent, long num, long den, Rng& rng) {
  if (rng.chance(const_percent, 100)) return expr::constant(rng.rational(num, den));
  return expr::gen(names[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(names.size()) - 1))]);
}

Rational nonzero_coeff(long num, long den, Rng& rng) {
  for (;;) {
    Rational c = rng.rational(num, den);
    if (!c.is_zero()) return c;
  }
}

}  // namespace

Expr random_expr(const ExprShape& s, Rng& rng) {
  if (s.depth <= 1 || rng.chance(1, 5)) return leaf(s.generators, s.const_percent, s.coeff_num, s.coeff_den, rng);
  ExprShape sub = s;
  sub.depth = s.depth - 1;
  auto kid = [&] { return random_expr(sub, rng); };
  if (rng.chance(s.mul_percent, 100)) return expr::mul(kid(), kid());
  long pick = rng.uniform(0, s.sugar ? 7 : 3);
  switch (pick) {
    case 0: return expr::add(kid(), kid());
    case 1: return expr::scale(nonzero_coeff(s.coeff_num, s.coeff_den, rng), kid());
    case 2: return expr::abs(kid());
    case 3: return expr::sub(kid(), kid());
    case 4: return expr::pos(kid());
    case 5: return expr::negp(kid());
    case 6: return expr::meet(kid(), kid());
    default: return expr::join(kid(), kid());
  }
}

Expr random_level1(std::size_t depth, const std::vector<std::string>& names, Rng& rng) {
  if (depth <= 1 || rng.chance(1, 3)) return leaf(names, 15, 4, 3, rng);
  switch (rng.uniform(0, 2)) {
    case 0: return expr::add(random_level1(depth - 1, names, rng), random_level1(depth - 1, names, rng));
    case 1: return expr::scale(nonzero_coeff(4, 3, rng), random_level1(depth - 1, names, rng));
    default: return expr::mul(random_level1(depth - 1, names, rng), random_level1(depth - 1, names, rng));
  }
}

tensor::SeparableTensor random_separable(std::size_t terms, const PlShape& shape, Rng& rng) {
  tensor::SeparableTensor t(Rational(0), Rational(1), Rational(0), Rational(1));
  for (std::size_t i = 0; i < terms; ++i) {
    t.push(random_pl(Rational(0), Rational(1), shape, rng), random_pl(Rational(0), Rational(1), shape, rng));
  }
  return t;
}

num::Polynomial random_int_poly(int max_degree, long bound, Rng& rng) {
  for (;;) {
    int d = static_cast<int>(rng.uniform(1, max_degree));
    std::vector<Rational> cs;
    for (int i = 0; i <= d; ++i) cs.emplace_back(rng.uniform(-bound, bound));
    num::Polynomial p(std::move(cs));
    if (p.degree() >= 1) return p;
  }
}

}  // namespace riesz::suites
