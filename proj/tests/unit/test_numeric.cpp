#include <doctest.h>

#include <algorithm>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/numeric/algebraic.hpp"
#include "riesz/numeric/sturm.hpp"
#include "riesz/util/rng.hpp"

using namespace riesz;
using namespace riesz::num;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Plain Sturm chain with exact long division, kept apart from the library's
// scaled chain.
std::vector<std::vector<mpq_class>> naive_chain(const Polynomial& p) {
  auto to_vec = [](const Polynomial& x) {
    std::vector<mpq_class> v;
    for (const auto& c : x.coefficients()) v.push_back(c.raw());
    return v;
  };
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto rem = [&](std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    while (a.size() >= b.size() && !a.empty()) {
      mpq_class f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
    }
    return a;
  };
  std::vector<std::vector<mpq_class>> chain{to_vec(p), to_vec(p.derivative())};
  while (!chain.back().empty()) {
    auto r = rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(r);
  }
  return chain;
}

int naive_variations(const std::vector<std::vector<mpq_class>>& chain, const Rational& x) {
  int last = 0, v = 0;
  for (const auto& p : chain) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x.raw() + *it;
    int s = sgn(acc);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int naive_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  auto c = naive_chain(p);
  return naive_variations(c, lo) - naive_variations(c, hi);
}

const Polynomial kX2m2{q(-2), q(0), q(1)};
const Polynomial kX2m3{q(-3), q(0), q(1)};

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

AlgebraicReal sqrt2() { return isolate_roots(kX2m2, q(1), q(2)).at(0); }

}  // namespace

TEST_CASE("polynomial evaluation") {
  CHECK(kX2m2(q(3, 2)) == q(1, 4));
  CHECK(Polynomial{}(q(7)) == q(0));
  CHECK(Polynomial({q(0), q(-1), q(0), q(1)})(q(2)) == q(6));
}

TEST_CASE("polynomial arithmetic and gcd") {
  Polynomial a{q(-1), q(1)};
  Polynomial b{q(1), q(1)};
  CHECK(a * b == Polynomial({q(-1), q(0), q(1)}));
  CHECK(gcd(a * a * b, a * b * b) == a * b);
  auto [quot, r] = divmod(Polynomial({q(1), q(0), q(0), q(1)}), b);
  CHECK(r.is_zero());
  CHECK(quot == Polynomial({q(1), q(-1), q(1)}));
  CHECK(Polynomial::parse("poly[1, -2/3, 0]") == Polynomial({q(1), q(-2, 3)}));
}

TEST_CASE("squarefree") {
  CHECK(squarefree(Polynomial({q(1), q(-2), q(1)})) == Polynomial({q(-1), q(1)}));
  CHECK(squarefree(kX2m2) == kX2m2);
  // x^3 - x^2 = x^2 (x - 1): the square-free part is x (x - 1).
  CHECK(squarefree(Polynomial({q(0), q(0), q(-1), q(1)})) == Polynomial({q(0), q(-1), q(1)}));
  CHECK_THROWS_AS(squarefree(Polynomial{}), DomainError);
}

TEST_CASE("isolate_roots") {
  auto r = isolate_roots(kX2m2, q(0), q(2));
  REQUIRE(r.size() == 1);
  CHECK(naive_count(kX2m2, r[0].lower(), r[0].upper()) == 1);
  CHECK(r[0].lower() * r[0].lower() < q(2));
  CHECK(r[0].upper() * r[0].upper() > q(2));

  CHECK(isolate_roots(Polynomial({q(1), q(0), q(1)}), q(-10), q(10)).empty());

  // x (x - 1/2) (x - 1)
  Polynomial p = Polynomial::identity() * Polynomial({q(-1, 2), q(1)}) * Polynomial({q(-1), q(1)});
  auto rs = isolate_real_roots(p);
  REQUIRE(rs.size() == 3);
  for (const auto& a : rs) CHECK(a.is_rational());
  CHECK(rs[0].rational_value() == q(0));
  CHECK(rs[1].rational_value() == q(1, 2));
  CHECK(rs[2].rational_value() == q(1));

  CHECK_THROWS_AS(isolate_roots(Polynomial{}, q(0), q(1)), DomainError);
}

TEST_CASE("alg_compare") {
  CHECK(alg_compare(sqrt2(), AlgebraicReal(q(3, 2))) < 0);
  CHECK(alg_compare(AlgebraicReal(q(1, 2)), AlgebraicReal(q(1, 2))) == 0);
  auto s3 = isolate_roots(kX2m3, q(1), q(2)).at(0);
  CHECK(alg_compare(sqrt2(), s3) < 0);
  CHECK(alg_compare(s3, sqrt2()) > 0);
  // Different defining polynomials, same value.
  auto other = isolate_roots(kX2m2 * Polynomial({q(-5), q(1)}), q(1), q(2)).at(0);
  CHECK(alg_compare(other, sqrt2()) == 0);
}

TEST_CASE("alg_sign_at") {
  CHECK(alg_sign_at(kX2m2, sqrt2()) == 0);
  CHECK(alg_sign_at(Polynomial::identity(), sqrt2()) == 1);
  CHECK(alg_sign_at(Polynomial({q(0), q(-1), q(0), q(1)}), sqrt2()) == 1);
}

TEST_CASE("refinement") {
  auto r = sqrt2().refined(q(1, 100));
  CHECK(r.width() <= q(1, 100));
  CHECK(r.lower() >= q(140, 100));
  CHECK(r.upper() <= q(143, 100));
  CHECK(r.lower() * r.lower() < q(2));
  CHECK(r.upper() * r.upper() > q(2));

  AlgebraicReal third(q(1, 3));
  auto t = third.refined(q(1, 1000));
  CHECK(t.is_rational());
  CHECK(t.rational_value() == q(1, 3));

  auto wide = sqrt2().refined(q(2));
  CHECK(wide.width() <= sqrt2().width());
}

TEST_CASE("descartes bound") {
  CHECK(descartes_variations(kX2m2, q(0), q(1)) == 0);
  CHECK(descartes_variations(kX2m2, q(1), q(2)) == 1);
}

TEST_CASE("property: roots of factored products") {
  Rng rng = Rng::stream(7, "factored");
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> rat_roots;
    Polynomial p = Polynomial::constant(q(1));
    int deg = 0;
    while (deg < 12 && (deg < 2 || rng.coin())) {
      if (deg > 10 || rng.coin()) {
        Rational r = rng.rational(20, 6);
        if (std::find(rat_roots.begin(), rat_roots.end(), r) != rat_roots.end()) continue;
        rat_roots.push_back(r);
        p = p * Polynomial({-r, q(1)});
        deg += 1;
      } else {
        // x^2 - k for a non-square k contributes +-sqrt(k); primes keep the
        // factors coprime.
        static const long primes[] = {2, 3, 5, 7, 11, 13};
        long k = primes[rng.uniform(0, 5)];
        Polynomial f{q(-k), q(0), q(1)};
        if (!gcd(p, f).is_constant()) continue;
        p = p * f;
        deg += 2;
      }
    }
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == deg);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    for (const auto& a : roots) CHECK(alg_sign_at(p, a) == 0);
    for (const auto& r : rat_roots) {
      CHECK(std::count_if(roots.begin(), roots.end(), [&](const AlgebraicReal& a) {
              return alg_compare(a, AlgebraicReal(r)) == 0;
            }) == 1);
    }
  }
}

TEST_CASE("property: root count matches an independent Sturm count") {
  Rng rng = Rng::stream(11, "sturm");
  for (int t = 0; t < 100; ++t) {
    Polynomial p;
    while (p.degree() < 1) {
      std::vector<Rational> c;
      long d = rng.uniform(1, 10);
      for (long i = 0; i <= d; ++i) c.push_back(Rational(rng.uniform(-1000, 1000)));
      p = Polynomial(c);
    }
    Polynomial sf = squarefree(p);
    Rational lo = Rational(rng.uniform(-20, 0)), hi = Rational(rng.uniform(1, 20));
    auto roots = isolate_roots(p, lo, hi);
    CHECK(static_cast<int>(roots.size()) == naive_count(sf, lo, hi));
    for (const auto& a : roots) CHECK(alg_sign_at(p, a) == 0);
  }
}

TEST_CASE("property: comparison is a consistent total order") {
  Rng rng = Rng::stream(13, "order");
  std::vector<AlgebraicReal> pool;
  for (long k : {2, 3, 5, 6, 8, 12}) {
    for (const auto& a : isolate_real_roots(Polynomial({q(-k), q(0), q(1)}))) pool.push_back(a);
  }
  for (int i = 0; i < 6; ++i) pool.emplace_back(rng.rational(30, 7));
  for (int t = 0; t < 200; ++t) {
    const auto& a = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    const auto& b = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    const auto& c = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    auto ab = alg_compare(a, b);
    CHECK(sign_of(alg_compare(b, a)) == -sign_of(ab));
    if (ab <= 0 && alg_compare(b, c) <= 0) CHECK(alg_compare(a, c) <= 0);
    CHECK(alg_compare(a.refined(q(1, 1 << 20)), b) == ab);
    CHECK(alg_compare(a, b.bisected()) == ab);
  }
}
