#pragma once

#include <string>
#include <vector>

#include "riesz/expr/expression.hpp"
#include "riesz/numeric/polynomial.hpp"
#include "riesz/pwfun/piecewise.hpp"
#include "riesz/tensor/separable.hpp"
#include "riesz/util/rng.hpp"

namespace riesz::suites {

using num::Rational;

struct PlShape {
  std::size_t max_breaks = 5;
  long num = 1000;
  long den = 1000;
};

/// Continuous piecewise-linear function on [a, b] with up to max_breaks
/// interior breakpoints and values p/q, |p| <= num, q <= den.
pw::PiecewiseFunction random_pl(const Rational& a, const Rational& b, const PlShape& shape, Rng& rng);

std::vector<Rational> random_vector(std::size_t dim, long num, long den, Rng& rng);
std::vector<Rational> random_nonneg_vector(std::size_t dim, long num, long den, Rng& rng);

struct ExprShape {
  std::size_t depth = 4;
  std::vector<std::string> generators{"g1", "g2", "g3"};
  bool sugar = true;
  /// Chance (percent) that an inner node is a product.
  long mul_percent = 15;
  long const_percent = 15;
  long coeff_num = 5;
  long coeff_den = 3;
};

/// Random expression tree of depth at most shape.depth.
expr::Expr random_expr(const ExprShape& shape, Rng& rng);

/// Random polynomial-in-the-generators expression (level 1): sums, scalings
/// and products of generators and constants.
expr::Expr random_level1(std::size_t depth, const std::vector<std::string>& names, Rng& rng);

/// Random separable tensor with `terms` simple terms of PL factors.
tensor::SeparableTensor random_separable(std::size_t terms, const PlShape& shape, Rng& rng);

/// Random integer polynomial of degree <= max_degree with |coeff| <= bound.
num::Polynomial random_int_poly(int max_degree, long bound, Rng& rng);

}  // namespace riesz::suites
