#include <doctest.h>

#include "riesz/errors.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/rmul/certificate.hpp"
#include "riesz/rmul/rewrite.hpp"
#include "riesz/rmul/transport.hpp"
#include "riesz/suites/generators.hpp"

using namespace riesz;
using namespace riesz::rmul;
using expr::QVector;
using pw::PiecewiseFunction;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

expr::VectorModel vec(std::initializer_list<std::pair<const char*, QVector>> gens) {
  expr::VectorModel m(gens.begin()->second.size());
  for (const auto& [n, v] : gens) m.bind(n, v);
  return m;
}

// (a+)(b+) computed coordinate by coordinate.
QVector pospos_oracle(const QVector& a, const QVector& b) {
  QVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(num::max(a[i], q(0)) * num::max(b[i], q(0)));
  return out;
}

PiecewiseFunction x01() { return PiecewiseFunction::polynomial(q(0), q(1), num::Polynomial::identity()); }

expr::PwModel pw_x(const char* name = "g1") {
  expr::PwModel m(q(0), q(1));
  m.bind(name, x01());
  return m;
}

}  // namespace

TEST_CASE("pospos rewrite") {
  Expr g1 = expr::gen("g1"), g2 = expr::gen("g2");
  Expr r = pospos_rewrite(g1, g1);
  CHECK(expr::is_ladder_form(r));
  CHECK(expr::evaluate(r, vec({{"g1", {q(2)}}})) == QVector{q(4)});
  CHECK(expr::evaluate(pospos_rewrite(g1, g2), vec({{"g1", {q(-1)}}, {"g2", {q(5)}}})) == QVector{q(0)});
  Expr zero = expr::constant(q(0));
  CHECK(expr::evaluate(pospos_rewrite(zero, zero), vec({{"g1", {q(3)}}})) == QVector{q(0)});
  CHECK_THROWS_AS(pospos_rewrite(expr::abs(g1), g2), Error);
}

TEST_CASE("product rewrite") {
  Expr g1 = expr::gen("g1"), g2 = expr::gen("g2");
  CHECK(product_rewrite(g1, g2) == expr::mul(g1, g2));
  CHECK(product_rewrite(expr::abs(g1), expr::abs(g1)) == expr::abs(expr::mul(g1, g1)));
  CHECK(expr::evaluate(product_rewrite(expr::abs(g1), expr::abs(g1)), vec({{"g1", {q(1), q(-2)}}})) ==
        QVector{q(1), q(4)});

  // |g1 - g2| g1 at g1 = (1, -2), g2 = (0, 3): |(1, -5)| (1, -2) = (1, -10).
  Expr f = expr::abs(expr::sub(g1, g2));
  Expr r = product_rewrite(f, g1);
  CHECK(expr::is_ladder_form(r));
  CHECK(expr::evaluate(r, vec({{"g1", {q(1), q(-2)}}, {"g2", {q(0), q(3)}}})) == QVector{q(1), q(-10)});
}

TEST_CASE("f|g| rewrite") {
  Expr g1 = expr::gen("g1"), g2 = expr::gen("g2");
  CHECK(expr::evaluate(fabsg_rewrite(g1, g1), vec({{"g1", {q(2), q(-3)}}})) == QVector{q(4), q(-9)});
  CHECK(fabsg_rewrite(expr::unit(), g2) == expr::abs(g2));

  expr::PwModel m(q(0), q(1));
  m.bind("g1", x01());
  m.bind("g2", PiecewiseFunction::polynomial(q(0), q(1), num::Polynomial({q(-1, 2), q(1)})));
  auto want = pw::pw_mul(x01(), pw::pw_abs(m.generator("g2")));
  CHECK(pw::pw_equal(expr::evaluate(fabsg_rewrite(g1, g2), m), want));
}

TEST_CASE("fuel") {
  Expr f = expr::parse_expr("abs(abs(g1 - g2) - abs(g3))");
  Expr g = expr::parse_expr("abs(g2 - abs(g1))");
  CHECK_THROWS_AS(product_rewrite(f, g, 2), FuelError);
  CHECK_NOTHROW(product_rewrite(f, g));
}

TEST_CASE("certificates") {
  CertifyOptions opts;
  auto c = make_certificate(expr::parse_expr("abs(g1)"), expr::parse_expr("abs(g1)"), opts);
  CHECK(c.passed());
  CHECK(expr::print_expr(c.rhs) == expr::print_expr(expr::abs(expr::mul(expr::gen("g1"), expr::gen("g1")))));

  auto d = make_certificate(expr::parse_expr("abs(g1 - g2)"), expr::parse_expr("g1 + g2"), opts);
  CHECK(d.passed());
  REQUIRE(d.models.size() >= 2);
  CHECK(d.models[0].kind == "structure");
  CHECK(d.models[1].kind == "vector");
  CHECK(d.models[1].params["dim"] == 6);
  CHECK(d.models[1].params["trials"] == 20);

  // Same inputs, same bytes.
  auto again = make_certificate(expr::parse_expr("abs(g1 - g2)"), expr::parse_expr("g1 + g2"), opts);
  CHECK(again.to_json().dump() == d.to_json().dump());

  auto back = Certificate::from_json(d.to_json());
  CHECK(back.rhs == d.rhs);
  CHECK(recheck_certificate(back, opts).passed());

  // A tampered rhs is caught.
  Certificate bad = d;
  bad.rhs = expr::add(bad.rhs, expr::constant(q(1, 1000)));
  auto rechecked = recheck_certificate(bad, opts);
  CHECK_FALSE(rechecked.passed());
  CHECK_FALSE(rechecked.models.back().counterexample.is_null());
}

TEST_CASE("certificate with a pw binding") {
  Rng rng = Rng::stream(43, "pwcert");
  suites::ExprShape shape;
  shape.depth = 4;
  expr::PwModel m(q(0), q(1));
  for (const char* n : {"g1", "g2", "g3"}) m.bind(n, suites::random_pl(q(0), q(1), {3, 8, 4}, rng));
  CertifyOptions opts;
  opts.bindings.push_back(m);
  Expr f = expr::parse_expr("meet(g1, abs(g2 - g3))");
  Expr g = expr::parse_expr("join(g3, 1/2) - abs(g1)");
  auto c = make_certificate(f, g, opts);
  CHECK(c.passed());
  REQUIRE(c.models.back().kind == "pw");
  CHECK(c.models.back().params.contains("rhs_pieces"));
}

TEST_CASE("degree cap surfaces as a budget error") {
  expr::PwModel m(q(0), q(1), pw::Budget{2, 4096});
  m.bind("g1", x01());
  CertifyOptions opts;
  opts.bindings.push_back(m);
  CHECK_THROWS_AS(make_certificate(expr::parse_expr("g1*g1"), expr::parse_expr("g1"), opts), BudgetError);
}

TEST_CASE("transport") {
  CertifyOptions opts;
  Expr f = expr::parse_expr("abs(g1 - 1/3)");
  Expr g = expr::parse_expr("g1");
  auto c = make_certificate(f, g, opts);
  REQUIRE(c.passed());
  expr::ModelBinding pm = pw_x();
  CHECK(transport_check(c, pm, RieszHom::point_eval(q(1, 3))));
  CHECK(transport_check(c, pm, RieszHom::point_eval(q(5, 7))));
  expr::ModelBinding vm = vec({{"g1", {q(1), q(-2), q(1, 3)}}});
  CHECK(transport_check(c, vm, RieszHom::projection(1)));
  auto phi = PiecewiseFunction::linear_interpolant(std::vector<Rational>{q(0), q(1, 3), q(1)},
                                                   std::vector<Rational>{q(0), q(1, 2), q(1)});
  CHECK(transport_check(c, pm, RieszHom::precompose(phi)));
  CHECK_THROWS_AS(transport_check(c, vm, RieszHom::point_eval(q(1, 2))), BindingError);

  Rng rng = Rng::stream(47, "maps");
  for (int i = 0; i < 5; ++i) {
    auto m = random_pl_map(q(0), q(1), 3, rng);
    CHECK(pw::pw_eval(m, q(0)) == q(0));
    CHECK(pw::pw_eval(m, q(1)) == q(1));
    CHECK(transport_check(c, pm, RieszHom::precompose(m)));
  }
}

TEST_CASE("property: pospos identity and rewriter soundness in the vector model") {
  Rng rng = Rng::stream(53, "sound");
  for (int t = 0; t < 200; ++t) {
    Expr a = suites::random_level1(3, {"g1", "g2"}, rng);
    Expr b = suites::random_level1(3, {"g1", "g2"}, rng);
    expr::VectorModel m(4);
    m.bind("g1", suites::random_vector(4, 7, 3, rng));
    m.bind("g2", suites::random_vector(4, 7, 3, rng));
    CHECK(expr::evaluate(pospos_rewrite(a, b), m) == pospos_oracle(expr::evaluate(a, m), expr::evaluate(b, m)));
  }
  suites::ExprShape shape;
  shape.depth = 3;
  for (int t = 0; t < 60; ++t) {
    Expr f = suites::random_expr(shape, rng);
    Expr g = suites::random_expr(shape, rng);
    Expr r = ladderize(expr::mul(f, g));
    CHECK(expr::is_ladder_form(r));
    expr::VectorModel m(3);
    for (const char* n : {"g1", "g2", "g3"}) m.bind(n, suites::random_vector(3, 9, 4, rng));
    QVector fv = expr::evaluate(f, m), gv = expr::evaluate(g, m), rv = expr::evaluate(r, m);
    for (std::size_t i = 0; i < 3; ++i) CHECK(rv[i] == fv[i] * gv[i]);
  }
}
