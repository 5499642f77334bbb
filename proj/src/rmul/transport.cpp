#include "riesz/rmul/transport.hpp"

#include <algorithm>
#include <set>

#include "riesz/errors.hpp"
#include "riesz/pwfun/literal.hpp"

namespace riesz::rmul {

std::string RieszHom::describe() const {
  switch (kind) {
    case Kind::PointEval: return "eval@" + point.str();
    case Kind::Projection: return "proj[" + std::to_string(coord) + "]";
    case Kind::PlPrecompose: return "precompose " + pw::format_pw(*phi);
  }
  return "?";
}

namespace {

bool point_transport(const Certificate& cert, const expr::PwModel& m, const Rational& x) {
  auto fv = expr::evaluate(cert.f, m);
  auto gv = expr::evaluate(cert.g, m);
  auto rv = expr::evaluate(cert.rhs, m);
  Rational hr = pw::pw_eval(rv, x);
  Rational hfg = pw::pw_eval(fv, x) * pw::pw_eval(gv, x);
  expr::VectorModel q(1);
  for (const auto& [name, f] : m.bindings()) q.bind(name, {pw::pw_eval(f, x)});
  Rational transported = expr::evaluate(cert.rhs, q)[0];
  return hr == hfg && transported == hfg;
}

bool projection_transport(const Certificate& cert, const expr::VectorModel& m, std::size_t i) {
  if (i >= m.dim()) throw BindingError("projection coordinate out of range");
  auto fv = expr::evaluate(cert.f, m);
  auto gv = expr::evaluate(cert.g, m);
  auto rv = expr::evaluate(cert.rhs, m);
  expr::VectorModel q(1);
  for (const auto& [name, v] : m.bindings()) q.bind(name, {v[i]});
  Rational hfg = fv[i] * gv[i];
  return rv[i] == hfg && expr::evaluate(cert.rhs, q)[0] == hfg;
}

bool precompose_transport(const Certificate& cert, const expr::PwModel& m, const pw::PiecewiseFunction& phi) {
  const auto& budget = m.budget();
  auto fv = expr::evaluate(cert.f, m);
  auto gv = expr::evaluate(cert.g, m);
  auto rv = expr::evaluate(cert.rhs, m);
  auto hr = pw::pw_compose_pl(rv, phi, budget);
  auto hfg = pw::pw_mul(pw::pw_compose_pl(fv, phi, budget), pw::pw_compose_pl(gv, phi, budget), budget);
  expr::PwModel q(phi.domain_lo(), phi.domain_hi(), budget);
  for (const auto& [name, f] : m.bindings()) q.bind(name, pw::pw_compose_pl(f, phi, budget));
  auto transported = expr::evaluate(cert.rhs, q);
  return pw::pw_equal(hr, hfg) && pw::pw_equal(transported, hfg);
}

}  // namespace

bool transport_check(const Certificate& cert, const expr::ModelBinding& model, const RieszHom& h) {
  switch (h.kind) {
    case RieszHom::Kind::Projection: {
      const auto* m = std::get_if<expr::VectorModel>(&model);
      if (!m) throw BindingError("carrier mismatch: projection needs a vector model");
      return projection_transport(cert, *m, h.coord);
    }
    case RieszHom::Kind::PointEval: {
      const auto* m = std::get_if<expr::PwModel>(&model);
      if (!m) throw BindingError("carrier mismatch: point evaluation needs a pw model");
      if (h.point < m->domain_lo() || h.point > m->domain_hi()) throw BindingError("evaluation point outside the domain");
      return point_transport(cert, *m, h.point);
    }
    case RieszHom::Kind::PlPrecompose: {
      const auto* m = std::get_if<expr::PwModel>(&model);
      if (!m) throw BindingError("carrier mismatch: precomposition needs a pw model");
      return precompose_transport(cert, *m, *h.phi);
    }
  }
  return false;
}

Rational random_point(const Rational& a, const Rational& b, long den, Rng& rng) {
  long d = rng.uniform(1, den);
  long k = rng.uniform(0, d);
  return a + (b - a) * Rational(k, d);
}

pw::PiecewiseFunction random_pl_map(const Rational& a, const Rational& b, std::size_t max_breaks, Rng& rng) {
  std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_breaks)));
  std::set<Rational> xs_set;
  std::set<Rational> ys_set;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = random_point(a, b, 12, rng);
    Rational y = random_point(a, b, 12, rng);
    if (x != a && x != b) xs_set.insert(x);
    if (y != a && y != b) ys_set.insert(y);
  }
  std::size_t k = std::min(xs_set.size(), ys_set.size());
  std::vector<Rational> xs{a};
  std::vector<Rational> ys{a};
  auto xi = xs_set.begin();
  auto yi = ys_set.begin();
  for (std::size_t i = 0; i < k; ++i, ++xi, ++yi) {
    xs.push_back(*xi);
    ys.push_back(*yi);
  }
  xs.push_back(b);
  ys.push_back(b);
  return pw::PiecewiseFunction::linear_interpolant(xs, ys);
}

}  // namespace riesz::rmul
