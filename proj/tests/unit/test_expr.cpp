#include <doctest.h>

#include <algorithm>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/expr/binding.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/models.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/suites/generators.hpp"

using namespace riesz;
using namespace riesz::expr;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Coordinatewise evaluation straight from the definitions, for one
// coordinate of a vector binding.
Rational eval_at(const Expr& e, const VectorModel& m, std::size_t i) {
  switch (e.op()) {
    case Op::Gen: return m.bindings().at(e.name())[i];
    case Op::Unit: return q(1);
    case Op::Scale: return e.coeff() * eval_at(e.lhs(), m, i);
    case Op::Add: return eval_at(e.lhs(), m, i) + eval_at(e.rhs(), m, i);
    case Op::Mul: return eval_at(e.lhs(), m, i) * eval_at(e.rhs(), m, i);
    case Op::Abs: return eval_at(e.lhs(), m, i).abs();
    case Op::Pos: return num::max(eval_at(e.lhs(), m, i), q(0));
    case Op::NegPart: return num::max(-eval_at(e.lhs(), m, i), q(0));
    case Op::Meet: return num::min(eval_at(e.lhs(), m, i), eval_at(e.rhs(), m, i));
    case Op::Join: return num::max(eval_at(e.lhs(), m, i), eval_at(e.rhs(), m, i));
  }
  return q(0);
}

VectorModel random_model(std::size_t dim, Rng& rng) {
  VectorModel m(dim);
  for (const char* g : {"g1", "g2", "g3"}) m.bind(g, suites::random_vector(dim, 12, 5, rng));
  return m;
}

}  // namespace

TEST_CASE("parser") {
  CHECK(dump_expr(parse_expr("abs(g1 - 1/2)*g1")) == "Mul(Abs(Add(Gen g1, Scale(-1/2, Unit))), Gen g1)");
  CHECK(dump_expr(parse_expr("meet(g1, join(g2, 0))")) == "Meet(Gen g1, Join(Gen g2, Scale(0, Unit)))");
  CHECK(parse_expr("unit") == unit());
  CHECK(parse_expr("-g1") == neg(gen("g1")));
  CHECK(parse_expr("2*g1*g2") == scale(q(2), mul(gen("g1"), gen("g2"))));
  try {
    parse_expr("g1 +");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_expr("abs(g1"), ParseError);
  CHECK_THROWS_AS(parse_expr("meet(g1)"), ParseError);
}

TEST_CASE("desugar") {
  Expr f = gen("f"), g = gen("g");
  CHECK(desugar(pos(f)) == scale(q(1, 2), add(f, abs(f))));
  CHECK(desugar(meet(f, g)) == scale(q(1, 2), add(add(f, g), scale(q(-1), abs(add(f, scale(q(-1), g)))))));
  Expr core = mul(abs(f), add(g, unit()));
  CHECK(desugar(core).id() == core.id());
  CHECK(is_core(desugar(join(f, negp(g)))));
}

TEST_CASE("ladder levels") {
  CHECK(ladder_level(gen("g1")) == 1);
  CHECK(ladder_level(abs(add(abs(gen("g1")), gen("g2")))) == 3);
  CHECK_FALSE(ladder_level(mul(abs(gen("g1")), gen("g2"))).has_value());
  CHECK(ladder_level(mul(gen("g1"), add(gen("g2"), unit()))) == 1);
  CHECK(unstratified_products(mul(abs(gen("g1")), mul(abs(gen("g2")), gen("g1")))) == 2);
}

TEST_CASE("evaluation in the models") {
  VectorModel v(2);
  v.bind("g1", {q(1), q(-2)});
  CHECK(evaluate(abs(gen("g1")), v) == QVector{q(1), q(2)});

  VectorModel w(2);
  w.bind("g1", {q(3), q(1, 2)});
  CHECK(evaluate(meet(gen("g1"), unit()), w) == QVector{q(1), q(1, 2)});

  PwModel p(q(0), q(1));
  p.bind("g1", pw::PiecewiseFunction::polynomial(q(0), q(1), num::Polynomial::identity()));
  auto sq = evaluate(mul(gen("g1"), gen("g1")), p);
  CHECK(pw::pw_equal(sq, pw::PiecewiseFunction::polynomial(q(0), q(1), num::Polynomial({q(0), q(0), q(1)}))));
  CHECK(pw::pw_eval(evaluate(parse_expr("abs(g1 - 1/2)"), p), q(1, 4)) == q(1, 4));

  VectorModel nonunital(2, false);
  nonunital.bind("g1", {q(1), q(2)});
  CHECK_THROWS_AS(evaluate(unit(), nonunital), BindingError);
  CHECK_THROWS_AS(evaluate(gen("g9"), v), BindingError);
}

TEST_CASE("bindings") {
  auto m = load_binding(nlohmann::json::parse(R"({"model": "vector", "generators": {"g1": ["1", "-2/3"], "g2": [0, 4]}})"));
  REQUIRE(std::holds_alternative<VectorModel>(m));
  CHECK(std::get<VectorModel>(m).generator("g1") == QVector{q(1), q(-2, 3)});
  auto pm = load_binding(nlohmann::json::parse(R"({"model": "pw", "domain": ["0", "1"], "generators": {"g1": "poly[0, 1]"}})"));
  REQUIRE(std::holds_alternative<PwModel>(pm));
  CHECK_THROWS_AS(load_binding(nlohmann::json::parse(R"({"model": "vector", "generators": {"g1": [1], "g2": [1, 2]}})")),
                  BindingError);
  CHECK_THROWS_AS(load_binding(nlohmann::json::parse(R"({"model": "matrix"})")), BindingError);
}

TEST_CASE("property: parse of print is the identity") {
  Rng rng = Rng::stream(17, "print");
  suites::ExprShape shape;
  shape.depth = 5;
  for (int t = 0; t < 500; ++t) {
    Expr e = suites::random_expr(shape, rng);
    std::string text = print_expr(e);
    Expr back = parse_expr(text);
    CHECK_MESSAGE(back == e, text);
  }
}

TEST_CASE("property: desugar preserves value") {
  Rng rng = Rng::stream(19, "desugar");
  suites::ExprShape shape;
  for (int t = 0; t < 500; ++t) {
    Expr e = suites::random_expr(shape, rng);
    VectorModel m = random_model(static_cast<std::size_t>(rng.uniform(1, 5)), rng);
    Expr d = desugar(e);
    CHECK(is_core(d));
    CHECK(evaluate(e, m) == evaluate(d, m));
  }
}

TEST_CASE("property: vector evaluation is coordinatewise") {
  Rng rng = Rng::stream(23, "coords");
  suites::ExprShape shape;
  for (int t = 0; t < 200; ++t) {
    Expr e = suites::random_expr(shape, rng);
    VectorModel m = random_model(4, rng);
    QVector v = evaluate(e, m);
    for (std::size_t i = 0; i < 4; ++i) CHECK(v[i] == eval_at(e, m, i));
  }
}

TEST_CASE("property: Abs raises the level by one") {
  Rng rng = Rng::stream(29, "levels");
  suites::ExprShape shape;
  shape.sugar = false;
  for (int t = 0; t < 300; ++t) {
    Expr e = suites::random_expr(shape, rng);
    auto l = ladder_level(e);
    if (l) CHECK(ladder_level(abs(e)) == *l + 1);
  }
}
