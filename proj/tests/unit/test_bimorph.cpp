#include <doctest.h>

#include "riesz/bimorph/bimorph.hpp"
#include "riesz/errors.hpp"
#include "riesz/suites/generators.hpp"

using namespace riesz;
using namespace riesz::bimorph;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

BilinearForm diag(std::initializer_list<long> d) {
  BilinearForm f = BilinearForm::zero(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    f.entries[i][i] = q(v);
    ++i;
  }
  return f;
}

BilinearForm scaled(const Rational& c, BilinearForm f) {
  for (auto& row : f.entries) {
    for (auto& v : row) v *= c;
  }
  return f;
}

// x^T M y written out.
Rational form_oracle(const BilinearForm& f, const QVector& x, const QVector& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * f.entries[i][j] * y[j];
  }
  return s;
}

}  // namespace

TEST_CASE("bilinear forms") {
  BilinearForm id = BilinearForm::identity(2);
  CHECK(id.apply({q(1), q(2)}, {q(3), q(4)}) == q(11));
  CHECK(id.is_positive());
  CHECK(BilinearForm::zero(2, 3).is_zero());
  CHECK_FALSE(diag({1, -1}).is_positive());
}

TEST_CASE("proportionality") {
  auto p = proportionality(BilinearForm::identity(2), diag({2, 2}), 1);
  REQUIRE(p.kind == Proportionality::Kind::Lambda);
  CHECK(p.lambda == q(2));

  auto w = proportionality(BilinearForm::identity(2), diag({1, 2}), 1);
  REQUIRE(w.kind == Proportionality::Kind::Witness);
  CHECK(form_oracle(BilinearForm::identity(2), w.x, w.y) == q(0));
  CHECK_FALSE(form_oracle(diag({1, 2}), w.x, w.y).is_zero());

  auto z = proportionality(BilinearForm::zero(2, 2), BilinearForm::zero(2, 2), 1);
  REQUIRE(z.kind == Proportionality::Kind::Lambda);
  CHECK(z.lambda == q(0));

  auto zw = proportionality(BilinearForm::zero(2, 2), BilinearForm::identity(2), 1);
  REQUIRE(zw.kind == Proportionality::Kind::Witness);
  CHECK_FALSE(form_oracle(BilinearForm::identity(2), zw.x, zw.y).is_zero());
}

TEST_CASE("bimorphism checks") {
  auto t = AtomBimorphism::single_atoms(1, 1, {Atom{0, 0, q(1)}});
  CHECK(t.apply({q(3)}, {q(-2)}) == QVector{q(-6)});
  CHECK(check_bimorphism(t, 20, 1).result);
  CHECK(check_multiplicative(t, 20, 1).result);

  AtomBimorphism tampered;
  tampered.m = 2;
  tampered.n = 2;
  tampered.coords = {{Atom{0, 0, q(1)}, Atom{1, 1, q(1)}}};
  auto r = check_bimorphism(tampered, 50, 3);
  CHECK_FALSE(r.result);
  CHECK_FALSE(r.witness.is_null());

  auto doubled = AtomBimorphism::single_atoms(2, 2, {Atom{0, 1, q(1)}, Atom{1, 0, q(2)}});
  CHECK_FALSE(doubled.preserves_unit());
  CHECK_THROWS_AS(check_multiplicative(doubled, 10, 1), HypothesisError);

  auto lab = check_multiplicative(AtomBimorphism::single_atoms(3, 2, {Atom{2, 1, q(1)}, Atom{0, 0, q(1)}}), 30, 9);
  CHECK(lab.result);
  auto j = lab.to_json();
  CHECK(j["check"].is_string());
  CHECK(j.contains("dims"));
  CHECK(j["seed"] == 9);
  CHECK(j["trials"] == 30);
}

TEST_CASE("exhaustive small lattice") { CHECK(exhaustive_multiplicative(2).result); }

TEST_CASE("convergence bound") {
  auto t = AtomBimorphism::single_atoms(1, 1, {Atom{0, 0, q(1)}});
  ConvergencePair one{{q(1)}, {q(1)}, {q(1)}, {q(1)}};
  CHECK(convergence_bound_check(t, one, 64).result);
  // The bound reduces to 2/n + 1/n^2 <= 3/n.
  for (long n = 1; n <= 64; ++n) CHECK(q(2, n) + q(1, n * n) <= q(3, n));

  ConvergencePair zero{{q(2)}, {q(-3)}, {q(0)}, {q(0)}};
  CHECK(convergence_bound_check(t, zero, 64).result);

  CHECK_THROWS_AS(convergence_bound_check(diag({1, -1}), ConvergencePair{{q(1), q(1)}, {q(1), q(1)}, {q(1), q(1)}, {q(1), q(1)}}, 4),
                  DomainError);
  CHECK_THROWS_AS(convergence_bound_check(t, ConvergencePair{{q(1)}, {q(1)}, {q(-1)}, {q(1)}}, 4), DomainError);
}

TEST_CASE("property: random atoms are lattice bimorphisms and Kar holds") {
  Rng rng = Rng::stream(73, "kar");
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    std::size_t k = static_cast<std::size_t>(rng.uniform(1, 6));
    auto any = random_atoms(m, n, k, false, rng);
    CHECK(any.is_positive());
    CHECK(check_bimorphism(any, 10, rng.next()).result);
    auto unit = random_atoms(m, n, k, true, rng);
    CHECK(unit.preserves_unit());
    CHECK(check_multiplicative(unit, 10, rng.next()).result);
  }
}

TEST_CASE("property: proportionality answers verify") {
  Rng rng = Rng::stream(79, "az");
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    BilinearForm phi = BilinearForm::zero(m, n);
    for (auto& row : phi.entries) {
      for (auto& v : row) v = rng.rational(5, 3);
    }
    if (phi.is_zero()) continue;
    Rational lambda = rng.rational(7, 4);
    auto prop = proportionality(phi, scaled(lambda, phi), rng.next());
    REQUIRE(prop.kind == Proportionality::Kind::Lambda);
    CHECK(prop.lambda == lambda);

    BilinearForm psi = scaled(lambda, phi);
    psi.entries[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1))][0] += q(1);
    auto w = proportionality(phi, psi, rng.next());
    CHECK(w.kind != Proportionality::Kind::Inconclusive);
    if (w.kind == Proportionality::Kind::Witness) {
      CHECK(form_oracle(phi, w.x, w.y) == q(0));
      CHECK_FALSE(form_oracle(psi, w.x, w.y).is_zero());
    } else if (w.kind == Proportionality::Kind::Lambda) {
      // The perturbation may leave psi proportional to phi with another ratio.
      CHECK(scaled(w.lambda, phi).entries == psi.entries);
    }
  }
}
