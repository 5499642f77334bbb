#include <doctest.h>

#include <vector>

#include "riesz/errors.hpp"
#include "riesz/pwfun/literal.hpp"
#include "riesz/pwfun/piecewise.hpp"
#include "riesz/suites/generators.hpp"

using namespace riesz;
using namespace riesz::pw;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

PiecewiseFunction poly_on(long a, long b, std::vector<Rational> c) {
  return PiecewiseFunction::polynomial(q(a), q(b), Polynomial(std::move(c)));
}

const PiecewiseFunction kX = poly_on(0, 1, {q(0), q(1)});

// |x - 1/2| on [0, 1] given as two pieces.
PiecewiseFunction vee() {
  return PiecewiseFunction::from_parts({AlgebraicReal(q(0)), AlgebraicReal(q(1, 2)), AlgebraicReal(q(1))},
                                       {Polynomial({q(1, 2), q(-1)}), Polynomial({q(-1, 2), q(1)})});
}

std::vector<Rational> probe_points(Rng& rng, std::size_t n) {
  std::vector<Rational> xs{q(0), q(1)};
  while (xs.size() < n) xs.push_back(rng.nonneg_rational(97, 97));
  for (auto& x : xs) {
    if (x > q(1)) x = q(1) / x;
  }
  return xs;
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK(pw_equal(pw_mul(kX, kX), poly_on(0, 1, {q(0), q(0), q(1)})));
  CHECK(pw_equal(pw_add(kX, poly_on(0, 1, {q(1), q(-1)})), PiecewiseFunction::constant(q(0), q(1), q(1))));

  auto prod = pw_mul(vee(), kX);
  REQUIRE(prod.piece_count() == 2);
  CHECK(prod.breaks()[1] == AlgebraicReal(q(1, 2)));
  CHECK(prod.pieces()[0] == Polynomial({q(0), q(1, 2), q(-1)}));
  CHECK(prod.pieces()[1] == Polynomial({q(0), q(-1, 2), q(1)}));

  CHECK_THROWS_AS(pw_add(kX, poly_on(0, 2, {q(1)})), DomainError);
  Budget tight{2, 4096};
  CHECK_THROWS_AS(pw_mul(pw_mul(kX, kX), kX, tight), BudgetError);
}

TEST_CASE("lattice operations") {
  auto a = pw_abs(poly_on(0, 1, {q(-1, 2), q(1)}));
  CHECK(pw_equal(a, vee()));

  auto sq = poly_on(0, 1, {q(0), q(0), q(1)});
  CHECK(pw_equal(pw_abs(sq), sq));

  auto b = pw_abs(poly_on(0, 2, {q(-2), q(0), q(1)}));
  REQUIRE(b.piece_count() == 2);
  const AlgebraicReal& cut = b.breaks()[1];
  CHECK_FALSE(cut.is_rational());
  CHECK(cut.lower() * cut.lower() < q(2));
  CHECK(cut.upper() * cut.upper() > q(2));
  CHECK(b.pieces()[0] == Polynomial({q(2), q(0), q(-1)}));
  CHECK(b.pieces()[1] == Polynomial({q(-2), q(0), q(1)}));

  auto m = pw_meet(kX, poly_on(0, 1, {q(1), q(-1)}));
  REQUIRE(m.piece_count() == 2);
  CHECK(m.breaks()[1] == AlgebraicReal(q(1, 2)));
  CHECK(m.pieces()[0] == Polynomial({q(0), q(1)}));
  CHECK(m.pieces()[1] == Polynomial({q(1), q(-1)}));

  CHECK(pw_pos(PiecewiseFunction::constant(q(0), q(1), q(-3))).is_zero());

  Rng rng = Rng::stream(3, "join");
  for (int i = 0; i < 10; ++i) {
    auto f = suites::random_pl(q(0), q(1), {}, rng);
    CHECK(pw_equal(pw_join(f, f), f));
  }
}

TEST_CASE("evaluation") {
  CHECK(pw_eval(vee(), q(1, 4)) == q(1, 4));
  CHECK(pw_eval(UnitFunction::on(q(0), q(1)).f, q(3, 7)) == q(1));
  CHECK(pw_eval(poly_on(0, 1, {q(0), q(0), q(1)}), q(2, 3)) == q(4, 9));
  CHECK_THROWS_AS(pw_eval(kX, q(2)), DomainError);
}

TEST_CASE("order") {
  auto x3 = poly_on(0, 3, {q(0), q(1)});
  CHECK(pw_leq(pw_mul(x3, x3), pw_add(x3, pw_mul(x3, pw_mul(x3, x3)))));

  auto x = poly_on(-1, 1, {q(0), q(1)});
  CHECK(pw_equal(pw_abs(x), pw_join(x, pw_scale(q(-1), x))));

  auto sq = poly_on(0, 1, {q(0), q(0), q(1)});
  CHECK_FALSE(pw_leq(kX, sq));
  auto w = pw_leq_witness(kX, sq);
  REQUIRE(w);
  CHECK(*w > q(0));
  CHECK(*w < q(1));
  CHECK(*w - *w * *w > q(0));
}

TEST_CASE("unit truncation") {
  auto unit = UnitFunction::on(q(0), q(1));
  CHECK(pw_truncate_converges(kX, unit) == 1);
  CHECK(pw_truncate_converges(PiecewiseFunction::constant(q(0), q(1), q(0)), unit) == 0);
  long n = pw_truncate_converges(poly_on(0, 3, {q(0), q(0), q(1)}), UnitFunction::on(q(0), q(3)));
  CHECK(n >= 9);
  CHECK(n == 9);
  CHECK_THROWS_AS(pw_truncate_converges(poly_on(0, 1, {q(-1), q(1)}), unit), DomainError);
}

TEST_CASE("literal round trip") {
  auto b = pw_abs(poly_on(0, 2, {q(-2), q(0), q(1)}));
  CHECK(pw_equal(parse_pw(format_pw(b)), b));
  CHECK(pw_equal(parse_pw("pw{domain=[0,1]; breaks=[0,1/2,1]; pieces=[poly[1/2,-1], poly[-1/2,1]]}"), vee()));
  CHECK_THROWS_AS(parse_pw("pw{domain=[0,1]; breaks=[0,1/2,1]; pieces=[poly[1], poly[2]]}"), Error);
}

TEST_CASE("precomposition with a monotone map") {
  auto phi = PiecewiseFunction::linear_interpolant(std::vector<Rational>{q(0), q(1, 2), q(1)},
                                                   std::vector<Rational>{q(0), q(1, 4), q(1)});
  auto f = pw_compose_pl(vee(), phi);
  for (auto t : {q(0), q(1, 5), q(1, 2), q(3, 4), q(1)}) CHECK(pw_eval(f, t) == pw_eval(vee(), pw_eval(phi, t)));
}

TEST_CASE("property: f-algebra laws on piecewise-linear inputs") {
  Rng rng = Rng::stream(5, "laws");
  const suites::PlShape shape{5, 1000, 1000};
  for (int t = 0; t < 15; ++t) {
    auto f = suites::random_pl(q(0), q(1), shape, rng);
    auto g = suites::random_pl(q(0), q(1), shape, rng);
    auto h = suites::random_pl(q(0), q(1), shape, rng);
    CHECK(pw_equal(pw_add(pw_add(f, g), h), pw_add(f, pw_add(g, h))));
    CHECK(pw_equal(pw_add(f, g), pw_add(g, f)));
    CHECK(pw_equal(pw_mul(pw_mul(f, g), h), pw_mul(f, pw_mul(g, h))));
    CHECK(pw_equal(pw_mul(f, g), pw_mul(g, f)));
    CHECK(pw_equal(pw_mul(f, pw_add(g, h)), pw_add(pw_mul(f, g), pw_mul(f, h))));
    CHECK(pw_equal(pw_add(pw_meet(f, g), pw_join(f, g)), pw_add(f, g)));
    auto fp = pw_pos(f), fn = pw_neg(f);
    CHECK(pw_equal(pw_abs(f), pw_add(fp, fn)));
    CHECK(pw_equal(f, pw_sub(fp, fn)));
    CHECK(pw_meet(fp, fn).is_zero());
    CHECK(pw_mul(fp, fn).is_zero());
    CHECK(pw_equal(pw_abs(pw_mul(f, g)), pw_mul(pw_abs(f), pw_abs(g))));

    // Positive cone closed under products, squares positive.
    CHECK(pw_leq(PiecewiseFunction::constant(q(0), q(1), q(0)), pw_mul(fp, pw_abs(g))));
    CHECK(pw_leq(PiecewiseFunction::constant(q(0), q(1), q(0)), pw_mul(f, f)));

    // Evaluation commutes with every operation.
    for (const auto& x : probe_points(rng, 20)) {
      Rational fx = pw_eval(f, x), gx = pw_eval(g, x);
      CHECK(pw_eval(pw_add(f, g), x) == fx + gx);
      CHECK(pw_eval(pw_mul(f, g), x) == fx * gx);
      CHECK(pw_eval(pw_abs(f), x) == fx.abs());
      CHECK(pw_eval(pw_meet(f, g), x) == num::min(fx, gx));
      CHECK(pw_eval(pw_join(f, g), x) == num::max(fx, gx));
      CHECK(pw_eval(pw_scale(q(-7, 3), f), x) == q(-7, 3) * fx);
    }
  }
}
