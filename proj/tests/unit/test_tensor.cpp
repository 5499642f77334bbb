#include <doctest.h>

#include "riesz/errors.hpp"
#include "riesz/expr/binding.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/suites/generators.hpp"
#include "riesz/tensor/tensor_check.hpp"

using namespace riesz;
using namespace riesz::tensor;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

PiecewiseFunction poly01(std::vector<Rational> c) {
  return PiecewiseFunction::polynomial(q(0), q(1), num::Polynomial(std::move(c)));
}
PiecewiseFunction x() { return poly01({q(0), q(1)}); }
PiecewiseFunction one() { return poly01({q(1)}); }

std::vector<Rational> pts() { return {q(0), q(1, 3), q(1, 2), q(5, 7), q(1)}; }

TensorBinding binding_xy() {
  TensorBinding b;
  b.generators.emplace("t1", SeparableTensor::simple(x(), one()));
  b.generators.emplace("t2", SeparableTensor::simple(one(), x()));
  return b;
}

}  // namespace

TEST_CASE("construction and evaluation") {
  auto xy = SeparableTensor::simple(x(), x());
  auto twice = tensor_add(xy, xy);
  auto scaled = SeparableTensor::simple(pw::pw_scale(q(2), x()), x());
  for (auto a : pts()) {
    for (auto b : pts()) CHECK(tensor_eval(twice, a, b) == tensor_eval(scaled, a, b));
  }
  CHECK(tensor_scale(q(0), xy).is_zero());

  auto sum = tensor_add(SeparableTensor::simple(x(), one()), SeparableTensor::simple(one(), x()));
  CHECK(tensor_eval(sum, q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(tensor_eval(xy, q(1, 2), q(1, 3)) == q(1, 6));
  SeparableTensor zero(q(0), q(1), q(0), q(1));
  CHECK(tensor_eval(zero, q(1, 5), q(2, 3)) == q(0));
  auto x1 = tensor_add(SeparableTensor::simple(x(), one()), SeparableTensor::one(q(0), q(1), q(0), q(1)));
  for (auto b : pts()) CHECK(tensor_eval(x1, q(1, 4), b) == q(5, 4));
  CHECK_THROWS_AS(tensor_eval(xy, q(2), q(0)), DomainError);
}

TEST_CASE("multiplication rule") {
  auto xy = SeparableTensor::simple(x(), x());
  auto prod = tensor_mul(xy, SeparableTensor::simple(x(), one()));
  REQUIRE(prod.term_count() == 1);
  CHECK(pw::pw_equal(prod.terms()[0].first, poly01({q(0), q(0), q(1)})));
  CHECK(pw::pw_equal(prod.terms()[0].second, x()));

  auto u = tensor_add(SeparableTensor::simple(x(), one()), SeparableTensor::simple(one(), x()));
  auto v = tensor_add(SeparableTensor::simple(x(), one()), SeparableTensor::simple(one(), pw::pw_scale(q(-1), x())));
  auto uv = tensor_mul(u, v);
  // (x + y)(x - y) = x^2 - y^2
  for (auto a : pts()) {
    for (auto b : pts()) CHECK(tensor_eval(uv, a, b) == a * a - b * b);
  }
  CHECK(tensor_mul(u, SeparableTensor(q(0), q(1), q(0), q(1))).is_zero());
  CHECK_THROWS_AS(tensor_mul(u, SeparableTensor::one(q(0), q(2), q(0), q(1))), DomainError);
}

TEST_CASE("term cap") {
  Rng rng = Rng::stream(59, "cap");
  auto u = suites::random_separable(30, {2, 50, 7}, rng);
  auto v = suites::random_separable(30, {2, 50, 7}, rng);
  REQUIRE(u.term_count() * v.term_count() > kTermCap);
  CHECK_THROWS_AS(tensor_mul(u, v), BudgetError);
}

TEST_CASE("tensor check") {
  GridSpec grid{8, 8};
  auto c = riesz_tensor_check("abs(t1 - t2)", "t1", binding_xy(), grid);
  CHECK(c.passed());
  REQUIRE(c.models.size() == 3);
  CHECK(c.models[1].kind == "grid");
  CHECK(c.models[2].kind == "offgrid");

  auto sq = riesz_tensor_check("t1", "t1", binding_xy(), grid);
  CHECK(sq.passed());
  CHECK(sq.rhs == expr::mul(expr::gen("t1"), expr::gen("t1")));
  auto sep = eval_separable(sq.rhs, binding_xy());
  for (auto a : pts()) {
    for (auto b : pts()) CHECK(tensor_eval(sep, a, b) == a * a);
  }
  CHECK_THROWS_AS(riesz_tensor_check("t9", "t1", binding_xy(), grid), BindingError);
}

TEST_CASE("weak unit probe") {
  GridSpec grid{5, 4};
  TensorBinding b = binding_xy();
  b.generators.emplace("z", SeparableTensor(q(0), q(1), q(0), q(1)));
  auto zero = weak_unit_probe("z", b, grid);
  CHECK(zero.consistent);
  CHECK(zero.v_zeros.size() == 20);

  auto col = weak_unit_probe("t1", b, grid);
  CHECK(col.consistent);
  REQUIRE(col.v_zeros.size() == 4);
  for (const auto& [i, j] : col.v_zeros) CHECK(i == 0);

  auto ones = weak_unit_probe("unit", b, grid);
  CHECK(ones.consistent);
  CHECK(ones.v_zeros.empty());
}

TEST_CASE("binding files") {
  const std::string x = "\"pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[0,1]]}\"";
  const std::string one = "\"pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[1]]}\"";
  auto j = nlohmann::json::parse(R"({"t1": {"x": )" + x + R"(, "y": )" + one + R"(}, "t2": [{"x": )" + one +
                                 R"(, "y": )" + x + R"(}, {"x": )" + one + R"(, "y": )" + one + "}]}");
  auto b = expr::load_tensor_binding(j);
  CHECK(tensor_eval(b.at("t2"), q(1, 2), q(1, 3)) == q(4, 3));
  auto spec = expr::load_grid_spec(nlohmann::json::parse(R"({"nx": 3, "ny": 2})"), &b);
  CHECK(spec.x_nodes() == std::vector<Rational>{q(0), q(1, 2), q(1)});
  CHECK(spec.y_nodes() == std::vector<Rational>{q(0), q(1)});
}

TEST_CASE("property: grid of a product is the product of grids") {
  Rng rng = Rng::stream(61, "mulgrid");
  GridSpec g{6, 5};
  auto xs = g.x_nodes(), ys = g.y_nodes();
  GridModel m(xs, ys);
  for (int t = 0; t < 20; ++t) {
    auto u = suites::random_separable(static_cast<std::size_t>(rng.uniform(1, 3)), {3, 20, 5}, rng);
    auto v = suites::random_separable(static_cast<std::size_t>(rng.uniform(1, 3)), {3, 20, 5}, rng);
    CHECK(to_grid(tensor_mul(u, v), xs, ys) == m.mul(to_grid(u, xs, ys), to_grid(v, xs, ys)));
  }
}

TEST_CASE("property: grid evaluation agrees with sampled generators") {
  Rng rng = Rng::stream(67, "gridhom");
  suites::ExprShape shape;
  shape.depth = 3;
  shape.generators = {"t1", "t2"};
  GridSpec g{5, 5};
  for (int t = 0; t < 20; ++t) {
    TensorBinding b;
    b.generators.emplace("t1", suites::random_separable(1, {2, 9, 3}, rng));
    b.generators.emplace("t2", suites::random_separable(2, {2, 9, 3}, rng));
    expr::Expr e = suites::random_expr(shape, rng);
    CHECK(eval_on_grid(e, b, g.x_nodes(), g.y_nodes()) == expr::evaluate(e, b.grid_model(g)));
  }
}

TEST_CASE("property: certificates hold off the grid") {
  Rng rng = Rng::stream(71, "offgrid");
  suites::ExprShape shape;
  shape.depth = 3;
  shape.generators = {"t1", "t2", "t3"};
  GridSpec g{16, 16};
  for (int t = 0; t < 8; ++t) {
    TensorBinding b;
    for (const char* n : {"t1", "t2", "t3"}) b.generators.emplace(n, suites::random_separable(1, {2, 9, 3}, rng));
    auto f = expr::print_expr(suites::random_expr(shape, rng));
    auto gg = expr::print_expr(suites::random_expr(shape, rng));
    TensorCheckOptions o;
    o.seed = rng.next();
    auto c = riesz_tensor_check(f, gg, b, g, o);
    CHECK_MESSAGE(c.passed(), (f + " * " + gg));
    CHECK(c.models.back().params["rational_breaks"] == true);
  }
}
