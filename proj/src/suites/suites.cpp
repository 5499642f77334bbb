#include "riesz/suites/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "riesz/bimorph/bimorph.hpp"
#include "riesz/closure/ladder_basis.hpp"
#include "riesz/errors.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/models.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/numeric/algebraic.hpp"
#include "riesz/numeric/sturm.hpp"
#include "riesz/pwfun/literal.hpp"
#include "riesz/rmul/certificate.hpp"
#include "riesz/rmul/rewrite.hpp"
#include "riesz/rmul/transport.hpp"
#include "riesz/suites/generators.hpp"
#include "riesz/tensor/tensor_check.hpp"

namespace riesz::suites {

using expr::Expr;
using expr::QVector;
using nlohmann::json;
using num::Rational;

bool SuiteResult::ok() const {
  if (passed != cases) return false;
  return std::all_of(parts.begin(), parts.end(), [](const SuiteResult& p) { return p.ok(); });
}

std::size_t SuiteResult::total_cases() const {
  std::size_t n = cases;
  for (const auto& p : parts) n += p.total_cases();
  return n;
}

std::size_t SuiteResult::total_passed() const {
  std::size_t n = passed;
  for (const auto& p : parts) n += p.total_passed();
  return n;
}

json SuiteResult::to_json() const {
  json j = {{"suite", name}, {"cases", total_cases()}, {"passed", total_passed()}, {"ok", ok()}};
  if (!counterexample.is_null()) j["counterexample"] = counterexample;
  if (!parts.empty()) {
    json ps = json::array();
    for (const auto& p : parts) ps.push_back(p.to_json());
    j["parts"] = ps;
  }
  return j;
}

namespace {

using Outcome = std::optional<json>;

std::size_t count_or(const SuiteConfig& cfg, std::size_t dflt) { return cfg.trials ? cfg.trials : dflt; }

template <class F>
void run_case(SuiteResult& r, F&& body) {
  std::size_t index = r.cases++;
  try {
    Outcome ce = body();
    if (!ce) {
      ++r.passed;
      return;
    }
    if (r.counterexample.is_null()) {
      r.counterexample = std::move(*ce);
      r.counterexample["case"] = index;
    }
  } catch (const Error& e) {
    if (r.counterexample.is_null()) r.counterexample = {{"case", index}, {"error", e.what()}};
  }
}

Rng part_rng(const SuiteConfig& cfg, const char* name) { return Rng::stream(cfg.seed, name); }

expr::VectorModel vector_model(const std::vector<std::string>& names, std::size_t dim, long num, long den, Rng& rng) {
  expr::VectorModel m(dim);
  for (const auto& n : names) m.bind(n, random_vector(dim, num, den, rng));
  return m;
}

expr::PwModel pw_model(const std::vector<std::string>& names, const PlShape& shape, const num::Budget& budget,
                       Rng& rng) {
  expr::PwModel m(Rational(0), Rational(1), budget);
  for (const auto& n : names) m.bind(n, random_pl(Rational(0), Rational(1), shape, rng));
  return m;
}

json vec_json(const QVector& v) { return expr::format_vector(v); }

SuiteResult timed(SuiteResult (*part)(const SuiteConfig&), const SuiteConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r = part(cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

SuiteResult part_l1_bound(const SuiteConfig& cfg) {
  SuiteResult r("l1-bound");
  Rng rng = part_rng(cfg, "l1-bound");
  const Expr sq = expr::parse_expr("a*a");
  const Expr cubic = expr::parse_expr("a + a*(a*a)");
  for (std::size_t t = 0; t < count_or(cfg, 1000); ++t) {
    run_case(r, [&]() -> Outcome {
      std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 8));
      expr::VectorModel m(dim);
      m.bind("a", random_nonneg_vector(dim, 1000, 1000, rng));
      QVector a2 = expr::evaluate(sq, m);
      QVector rhs = expr::evaluate(cubic, m);
      if (m.leq(QVector(dim, Rational(0)), a2) && m.leq(a2, rhs)) return std::nullopt;
      return json{{"a", vec_json(m.generator("a"))}, {"a2", vec_json(a2)}, {"a+a3", vec_json(rhs)}};
    });
  }
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      auto f = random_pl(Rational(0), Rational(1), PlShape{5, 1000, 1000}, rng);
      expr::PwModel m(Rational(0), Rational(1), cfg.budget);
      m.bind("a", pw::pw_mul(f, f, cfg.budget));
      auto a2 = expr::evaluate(sq, m);
      auto rhs = expr::evaluate(cubic, m);
      if (pw::pw_leq(m.scale(Rational(0), a2), a2) && pw::pw_leq(a2, rhs)) return std::nullopt;
      return json{{"f", pw::format_pw(f)}};
    });
  }
  return r;
}

SuiteResult part_l1_pospos(const SuiteConfig& cfg) {
  SuiteResult r("l1-pospos");
  Rng rng = part_rng(cfg, "l1-pospos");
  const std::vector<std::string> names{"g1", "g2"};
  for (std::size_t t = 0; t < count_or(cfg, 1000); ++t) {
    run_case(r, [&]() -> Outcome {
      Expr a = random_level1(2, names, rng);
      Expr b = random_level1(2, names, rng);
      std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 8));
      expr::VectorModel m = vector_model(names, dim, 1000, 1000, rng);
      Expr rhs = rmul::pospos_rewrite(a, b);
      QVector want = m.mul(m.pos(expr::evaluate(a, m)), m.pos(expr::evaluate(b, m)));
      QVector got = expr::evaluate(rhs, m);
      if (want == got && expr::is_ladder_form(rhs)) return std::nullopt;
      // Minimize to the first disagreeing coordinate.
      std::size_t i = 0;
      while (i < dim && want[i] == got[i]) ++i;
      if (i == dim) i = 0;
      json assignment = json::object();
      for (const auto& n : names) assignment[n] = m.generator(n)[i].str();
      return json{{"a", expr::print_expr(a)},
                  {"b", expr::print_expr(b)},
                  {"assignment", assignment},
                  {"a+b+", want[i].str()},
                  {"rewrite", got[i].str()}};
    });
  }
  for (std::size_t t = 0; t < count_or(cfg, 50); ++t) {
    run_case(r, [&]() -> Outcome {
      Expr a = random_level1(2, names, rng);
      Expr b = random_level1(2, names, rng);
      expr::PwModel m = pw_model(names, PlShape{5, 1000, 1000}, cfg.budget, rng);
      Expr rhs = rmul::pospos_rewrite(a, b);
      auto want = m.mul(m.pos(expr::evaluate(a, m)), m.pos(expr::evaluate(b, m)));
      auto got = expr::evaluate(rhs, m);
      if (pw::pw_equal(want, got)) return std::nullopt;
      json assignment = json::object();
      for (const auto& [n, f] : m.bindings()) assignment[n] = pw::format_pw(f);
      return json{{"a", expr::print_expr(a)}, {"b", expr::print_expr(b)}, {"assignment", assignment}};
    });
  }
  return r;
}

namespace {

const std::vector<std::string> kGens{"g1", "g2", "g3"};
const PlShape kSmallPl{3, 8, 4};

struct Pair {
  Expr f;
  Expr g;
};

Pair random_pair(Rng& rng, long max_depth = 4) {
  ExprShape shape;
  shape.depth = static_cast<std::size_t>(rng.uniform(2, max_depth));
  std::size_t ng = static_cast<std::size_t>(rng.uniform(1, 3));
  shape.generators.assign(kGens.begin(), kGens.begin() + static_cast<long>(ng));
  Expr f = random_expr(shape, rng);
  Expr g = random_expr(shape, rng);
  return {f, g};
}

rmul::CertifyOptions certify_options(const SuiteConfig& cfg, Rng& rng, std::uint64_t seed) {
  rmul::CertifyOptions o;
  o.seed = seed;
  o.trials = 20;
  o.vector_dim = 6;
  o.fuel = cfg.fuel;
  o.bindings.push_back(pw_model(kGens, kSmallPl, cfg.budget, rng));
  return o;
}

// Greedily replaces f or g by one of its children while the pair still fails.
Pair shrink(Pair p, const std::function<bool(const Pair&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<Pair> candidates;
    for (const Expr* c : {&p.f.lhs(), &p.f.rhs()}) {
      if (*c) candidates.push_back({*c, p.g});
    }
    for (const Expr* c : {&p.g.lhs(), &p.g.rhs()}) {
      if (*c) candidates.push_back({p.f, *c});
    }
    for (const auto& c : candidates) {
      if (fails(c)) {
        p = c;
        progress = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace

SuiteResult part_rewriter(const SuiteConfig& cfg) {
  SuiteResult r("rewriter");
  Rng rng = part_rng(cfg, "rewriter");
  for (std::size_t t = 0; t < count_or(cfg, 200); ++t) {
    run_case(r, [&]() -> Outcome {
      Pair p = random_pair(rng);
      std::uint64_t seed = rng.next();
      auto opts = certify_options(cfg, rng, seed);
      auto cert = rmul::make_certificate(p.f, p.g, opts);
      if (cert.passed()) return std::nullopt;
      Pair small = shrink(p, [&](const Pair& q) {
        try {
          return !rmul::make_certificate(q.f, q.g, opts).passed();
        } catch (const Error&) {
          return false;
        }
      });
      return json{{"f", expr::print_expr(small.f)},
                  {"g", expr::print_expr(small.g)},
                  {"certificate", rmul::make_certificate(small.f, small.g, opts).to_json()}};
    });
  }
  return r;
}

SuiteResult part_transport(const SuiteConfig& cfg) {
  SuiteResult r("transport");
  Rng rng = part_rng(cfg, "transport");
  std::size_t certs = count_or(cfg, 100);
  for (std::size_t made = 0, guard = 0; made < certs && guard < 4 * certs; ++guard) {
    Pair p = random_pair(rng, 3);
    std::uint64_t seed = rng.next();
    auto opts = certify_options(cfg, rng, seed);
    expr::VectorModel vm = vector_model(kGens, 6, 12, 4, rng);
    opts.bindings.push_back(vm);
    rmul::Certificate cert;
    try {
      cert = rmul::make_certificate(p.f, p.g, opts);
    } catch (const Error&) {
      continue;
    }
    if (!cert.passed()) continue;
    ++made;
    const expr::ModelBinding& pwb = opts.bindings[0];
    const expr::ModelBinding vb = vm;
    std::vector<std::pair<rmul::RieszHom, const expr::ModelBinding*>> homs;
    for (int k = 0; k < 4; ++k) homs.emplace_back(rmul::RieszHom::point_eval(rmul::random_point(Rational(0), Rational(1), 30, rng)), &pwb);
    for (int k = 0; k < 3; ++k) homs.emplace_back(rmul::RieszHom::projection(static_cast<std::size_t>(rng.uniform(0, 5))), &vb);
    for (int k = 0; k < 3; ++k) {
      homs.emplace_back(rmul::RieszHom::precompose(rmul::random_pl_map(Rational(0), Rational(1), 3, rng)), &pwb);
    }
    for (const auto& [h, model] : homs) {
      run_case(r, [&]() -> Outcome {
        if (rmul::transport_check(cert, *model, h)) return std::nullopt;
        return json{{"hom", h.describe()}, {"certificate", cert.to_json()}};
      });
    }
  }
  if (r.cases < certs * 10) {
    run_case(r, [&]() -> Outcome { return json{{"error", "too few passing certificates to transport"}}; });
  }
  return r;
}

SuiteResult part_tensor_closure(const SuiteConfig& cfg) {
  SuiteResult r("tensor-closure");
  Rng rng = part_rng(cfg, "tensor-closure");
  const std::vector<std::string> names{"t1", "t2", "t3"};
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      tensor::TensorBinding b;
      std::size_t ng = static_cast<std::size_t>(rng.uniform(1, 3));
      for (std::size_t i = 0; i < ng; ++i) {
        b.generators.emplace(names[i], random_separable(1, kSmallPl, rng));
      }
      ExprShape shape;
      shape.depth = 3;
      shape.generators.assign(names.begin(), names.begin() + static_cast<long>(ng));
      Expr f = random_expr(shape, rng);
      Expr g = random_expr(shape, rng);
      tensor::TensorCheckOptions o;
      o.seed = rng.next();
      o.spot_checks = 10;
      o.fuel = cfg.fuel;
      o.budget = cfg.budget;
      auto cert = tensor::riesz_tensor_check(expr::print_expr(f), expr::print_expr(g), b, cfg.grid, o);
      if (cert.passed()) return std::nullopt;
      return cert.to_json();
    });
  }
  return r;
}

SuiteResult part_tensor_mul(const SuiteConfig& cfg) {
  SuiteResult r("tensor-mul");
  Rng rng = part_rng(cfg, "tensor-mul");
  auto xs = cfg.grid.x_nodes();
  auto ys = cfg.grid.y_nodes();
  tensor::GridModel gm(xs, ys);
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      auto u = random_separable(static_cast<std::size_t>(rng.uniform(1, 3)), PlShape{4, 50, 10}, rng);
      auto v = random_separable(static_cast<std::size_t>(rng.uniform(1, 3)), PlShape{4, 50, 10}, rng);
      auto lhs = tensor::to_grid(tensor::tensor_mul(u, v, cfg.budget), xs, ys);
      auto rhs = gm.mul(tensor::to_grid(u, xs, ys), tensor::to_grid(v, xs, ys));
      if (lhs == rhs) return std::nullopt;
      return json{{"terms_u", u.term_count()}, {"terms_v", v.term_count()}};
    });
  }
  return r;
}

SuiteResult part_weak_unit(const SuiteConfig& cfg) {
  SuiteResult r("weak-unit");
  Rng rng = part_rng(cfg, "weak-unit");
  const std::vector<std::string> names{"t1", "t2"};
  for (std::size_t t = 0; t < count_or(cfg, 20); ++t) {
    run_case(r, [&]() -> Outcome {
      tensor::TensorBinding b;
      for (const auto& n : names) b.generators.emplace(n, random_separable(1, PlShape{3, 4, 2}, rng));
      ExprShape shape;
      shape.depth = 3;
      shape.generators = names;
      std::string u = expr::print_expr(random_expr(shape, rng));
      auto rep = tensor::weak_unit_probe(u, b, cfg.grid);
      if (rep.consistent) return std::nullopt;
      return json{{"u", u}, {"report", rep.to_json()}};
    });
  }
  return r;
}

SuiteResult part_kar(const SuiteConfig& cfg) {
  SuiteResult r("kar");
  Rng rng = part_rng(cfg, "kar");
  for (std::size_t t = 0; t < count_or(cfg, 500); ++t) {
    run_case(r, [&]() -> Outcome {
      auto m = static_cast<std::size_t>(rng.uniform(1, 6));
      auto n = static_cast<std::size_t>(rng.uniform(1, 6));
      auto k = static_cast<std::size_t>(rng.uniform(1, 6));
      auto T = bimorph::random_atoms(m, n, k, true, rng);
      auto res = bimorph::check_multiplicative(T, 20, rng.next());
      if (res.result) return std::nullopt;
      return res.to_json();
    });
  }
  return r;
}

SuiteResult part_kar_exhaustive(const SuiteConfig&) {
  SuiteResult r("kar-exhaustive");
  run_case(r, [&]() -> Outcome {
    auto res = bimorph::exhaustive_multiplicative(3);
    if (res.result) return std::nullopt;
    return res.to_json();
  });
  return r;
}

namespace {

bimorph::BilinearForm random_form(std::size_t m, std::size_t n, Rng& rng) {
  bimorph::BilinearForm f = bimorph::BilinearForm::zero(m, n);
  for (auto& row : f.entries) {
    for (auto& e : row) e = rng.rational(9, 4);
  }
  return f;
}

json form_json(const bimorph::BilinearForm& f) {
  json j = json::array();
  for (const auto& row : f.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.str());
    j.push_back(r);
  }
  return j;
}

}  // namespace

SuiteResult part_az(const SuiteConfig& cfg) {
  SuiteResult r("az");
  Rng rng = part_rng(cfg, "az");
  const std::size_t n_each = count_or(cfg, 200);
  for (std::size_t t = 0; t < n_each; ++t) {
    run_case(r, [&]() -> Outcome {
      auto m = static_cast<std::size_t>(rng.uniform(1, 5));
      auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      auto phi = random_form(m, n, rng);
      if (phi.is_zero()) phi.entries[0][0] = Rational(1);
      Rational lambda = rng.rational(20, 7);
      bimorph::BilinearForm psi = phi;
      for (auto& row : psi.entries) {
        for (auto& e : row) e = lambda * e;
      }
      auto res = bimorph::proportionality(phi, psi, rng.next());
      if (res.kind == bimorph::Proportionality::Kind::Lambda && res.lambda == lambda) return std::nullopt;
      return json{{"expected_lambda", lambda.str()}, {"kind", static_cast<int>(res.kind)}};
    });
  }
  for (std::size_t t = 0; t < n_each; ++t) {
    run_case(r, [&]() -> Outcome {
      auto m = static_cast<std::size_t>(rng.uniform(1, 5));
      auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      bimorph::BilinearForm phi = bimorph::BilinearForm::zero(m, n);
      bimorph::BilinearForm psi = bimorph::BilinearForm::zero(m, n);
      long shape = rng.uniform(0, 4);
      if (shape == 0) {
        // phi = 0, psi != 0
        psi = random_form(m, n, rng);
        psi.entries[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1))][0] = Rational(3);
      } else if (shape == 1 && m > 1) {
        // rank one: phi = u v^T, psi = w v^T with w not parallel to u
        QVector u = random_vector(m, 5, 2, rng), v = random_vector(n, 5, 2, rng), w = u;
        u[0] = Rational(1);
        u[1] = Rational(1);
        v[0] = Rational(1);
        w[0] = u[0] + Rational(1);
        w[1] = u[1];
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            phi.entries[i][j] = u[i] * v[j];
            psi.entries[i][j] = w[i] * v[j];
          }
        }
      } else {
        phi = random_form(m, n, rng);
        psi = phi;
        if (phi.is_zero()) phi.entries[0][0] = Rational(1);
        Rational lambda = rng.rational(5, 3);
        for (auto& row : psi.entries) {
          for (auto& e : row) e = lambda * e;
        }
        auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        // A second nonzero entry of phi rules out phi being a multiple of e_ij.
        std::size_t k = (i * n + j + 1) % (m * n);
        if (phi.entries[k / n][k % n].is_zero()) phi.entries[k / n][k % n] = Rational(1);
        psi = phi;
        for (auto& row : psi.entries) {
          for (auto& e : row) e = lambda * e;
        }
        psi.entries[i][j] += Rational(1);
        if (m * n == 1) {
          // Every pair of 1x1 forms with phi != 0 is proportional; use a
          // zero phi instead.
          phi.entries[0][0] = Rational(0);
          psi.entries[0][0] = Rational(2);
        }
      }
      auto res = bimorph::proportionality(phi, psi, rng.next());
      if (res.kind == bimorph::Proportionality::Kind::Witness && phi.apply(res.x, res.y).is_zero() &&
          !psi.apply(res.x, res.y).is_zero()) {
        return std::nullopt;
      }
      return json{{"kind", static_cast<int>(res.kind)}, {"phi", form_json(phi)}, {"psi", form_json(psi)}};
    });
  }
  return r;
}

SuiteResult part_bimorphism(const SuiteConfig& cfg) {
  SuiteResult r("bimorphism");
  Rng rng = part_rng(cfg, "bimorphism");
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      auto m = static_cast<std::size_t>(rng.uniform(1, 5));
      auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      auto T = bimorph::random_atoms(m, n, static_cast<std::size_t>(rng.uniform(1, 5)), false, rng);
      auto res = bimorph::check_bimorphism(T, 20, rng.next());
      if (res.result) return std::nullopt;
      return res.to_json();
    });
  }
  // The sum of two atoms in one coordinate is bilinear and positive but not a
  // lattice bimorphism; the check must reject it.
  run_case(r, [&]() -> Outcome {
    bimorph::AtomBimorphism T{2, 2, {{{0, 0, Rational(1)}, {1, 1, Rational(1)}}}};
    auto res = bimorph::check_bimorphism(T, 50, rng.next());
    if (!res.result && !res.witness.is_null()) return std::nullopt;
    return json{{"error", "tampered form accepted"}};
  });
  return r;
}

SuiteResult part_convergence(const SuiteConfig& cfg) {
  SuiteResult r("convergence");
  Rng rng = part_rng(cfg, "convergence");
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      auto d = static_cast<std::size_t>(rng.uniform(1, 4));
      bimorph::ConvergencePair p{random_vector(d, 20, 5, rng), random_vector(d, 20, 5, rng),
                                 random_nonneg_vector(d, 20, 5, rng), random_nonneg_vector(d, 20, 5, rng)};
      bimorph::LabResult res;
      if (t % 2 == 0) {
        auto phi = bimorph::random_atoms(d, d, static_cast<std::size_t>(rng.uniform(1, 4)), false, rng);
        res = bimorph::convergence_bound_check(phi, p, 64);
      } else {
        auto phi = bimorph::BilinearForm::zero(d, d);
        for (auto& row : phi.entries) {
          for (auto& e : row) e = rng.nonneg_rational(9, 4);
        }
        res = bimorph::convergence_bound_check(phi, p, 64);
      }
      if (res.result) return std::nullopt;
      return res.to_json();
    });
  }
  return r;
}

SuiteResult part_span(const SuiteConfig& cfg) {
  SuiteResult r("span");
  Rng rng = part_rng(cfg, "span");
  const std::size_t n_each = count_or(cfg, 100);
  for (std::size_t t = 0; t < 2 * n_each; ++t) {
    const bool want_in = t < n_each;
    run_case(r, [&]() -> Outcome {
      const bool pw_case = t % 2 == 1;
      closure::Carrier carrier = pw_case ? closure::Carrier::pw(Rational(0), Rational(1), cfg.budget)
                                         : closure::Carrier::vector(static_cast<std::size_t>(rng.uniform(3, 8)));
      closure::SpanBasis basis(carrier, rng.next());
      std::size_t want = static_cast<std::size_t>(rng.uniform(1, pw_case ? 5 : static_cast<long>(carrier.dim()) - 1));
      for (std::size_t guard = 0; basis.dimension() < want && guard < 50; ++guard) {
        closure::Element e = pw_case ? closure::Element(random_pl(Rational(0), Rational(1), PlShape{3, 9, 3}, rng))
                                     : closure::Element(random_vector(carrier.dim(), 9, 3, rng));
        basis.add(std::move(e));
      }
      closure::Element target;
      closure::Row coeffs;
      if (want_in) {
        for (std::size_t i = 0; i < basis.dimension(); ++i) coeffs.push_back(rng.rational(9, 4));
        target = carrier.combine(coeffs, basis.elements());
      } else if (pw_case) {
        // A quadratic is never a combination of piecewise-linear functions.
        auto q = pw::PiecewiseFunction::polynomial(Rational(0), Rational(1), num::Polynomial{Rational(0), Rational(0), Rational(1)});
        target = pw::pw_add(q, std::get<pw::PiecewiseFunction>(basis.elements()[0]), cfg.budget);
      } else {
        // The basis spans fewer than dim directions; push along a coordinate
        // outside the span.
        for (std::size_t i = 0;; ++i) {
          QVector e(carrier.dim(), Rational(0));
          e[i] = Rational(1);
          if (!closure::span_membership(e, basis).in_span) {
            target = carrier.combine(std::vector<Rational>{Rational(1), Rational(2)},
                                     std::vector<closure::Element>{e, basis.elements()[0]});
            break;
          }
        }
      }
      auto res = closure::span_membership(target, basis);
      if (res.in_span != want_in) return json{{"expected_in_span", want_in}};
      if (want_in) {
        if (!carrier.equal(carrier.combine(res.coefficients, basis.elements()), target)) {
          return json{{"error", "coefficients fail exact equality"}};
        }
        if (res.coefficients != coeffs) return json{{"error", "coefficients differ from construction"}};
        return std::nullopt;
      }
      closure::Matrix a;
      closure::Row b;
      for (const auto& s : res.witness_samples) {
        closure::Row row;
        for (const auto& e : basis.elements()) row.push_back(carrier.value(e, s));
        a.push_back(std::move(row));
        b.push_back(carrier.value(target, s));
      }
      if (closure::solve(a, b)) return json{{"error", "witness samples admit a solution"}};
      return std::nullopt;
    });
  }
  return r;
}

SuiteResult part_ladder(const SuiteConfig& cfg) {
  SuiteResult r("ladder");
  Rng rng = part_rng(cfg, "ladder");
  for (std::size_t t = 0; t < count_or(cfg, 50); ++t) {
    run_case(r, [&]() -> Outcome {
      std::uint64_t seed = rng.next();
      closure::LadderBudget lb{16, 256};
      if (t % 2 == 0) {
        closure::LadderBasis lad(closure::Carrier::pw(Rational(0), Rational(1), cfg.budget), seed, lb);
        lad.seed_element(pw::PiecewiseFunction::constant(Rational(0), Rational(1), Rational(1)), expr::unit());
        lad.seed_element(random_pl(Rational(0), Rational(1), PlShape{2, 6, 3}, rng), expr::gen("g1"));
        for (int l = 0; l < 2; ++l) closure::ladder_extend(lad, 4, seed);
        auto d = lad.dimensions();
        if (std::is_sorted(d.begin(), d.end())) return std::nullopt;
        return json{{"dimensions", d}};
      }
      std::size_t dim = static_cast<std::size_t>(rng.uniform(2, 6));
      closure::LadderBasis lad(closure::Carrier::vector(dim), seed, lb);
      lad.seed_element(random_vector(dim, 5, 2, rng), expr::gen("g1"));
      lad.seed_element(random_vector(dim, 5, 2, rng), expr::gen("g2"));
      for (int l = 0; l < 3; ++l) closure::ladder_extend(lad, 4, seed);
      auto d = lad.dimensions();
      if (std::is_sorted(d.begin(), d.end())) return std::nullopt;
      return json{{"dimensions", d}};
    });
  }
  return r;
}

SuiteResult part_roots(const SuiteConfig& cfg) {
  SuiteResult r("roots");
  Rng rng = part_rng(cfg, "roots");
  for (std::size_t t = 0; t < count_or(cfg, 100); ++t) {
    run_case(r, [&]() -> Outcome {
      num::Polynomial p = random_int_poly(12, 1000000, rng);
      auto roots = num::isolate_real_roots(p, cfg.budget);
      Rational b = num::cauchy_bound(p);
      num::SturmSequence s(num::squarefree(p));
      if (static_cast<int>(roots.size()) != s.count(-b, b)) return json{{"p", p.str()}, {"error", "count mismatch"}};
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (num::alg_sign_at(roots[i].defining(), roots[i]) != 0) return json{{"p", p.str()}, {"error", "not a root"}};
        if (i && !(roots[i - 1] < roots[i])) return json{{"p", p.str()}, {"error", "not ascending"}};
      }
      return std::nullopt;
    });
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"l1", "rewriter", "tensor", "bimorph", "convergence", "closure", "kernel", "all"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg) {
  using Part = SuiteResult (*)(const SuiteConfig&);
  auto group = [&](std::string n, std::initializer_list<Part> parts) {
    SuiteResult r(std::move(n));
    for (Part p : parts) r.parts.push_back(timed(p, cfg));
    for (const auto& p : r.parts) r.seconds += p.seconds;
    return r;
  };
  if (name == "l1") return group("l1", {part_l1_bound, part_l1_pospos});
  if (name == "rewriter") return group("rewriter", {part_rewriter, part_transport});
  if (name == "tensor") return group("tensor", {part_tensor_closure, part_tensor_mul, part_weak_unit});
  if (name == "bimorph") return group("bimorph", {part_kar, part_kar_exhaustive, part_az, part_bimorphism});
  if (name == "convergence") return group("convergence", {part_convergence});
  if (name == "closure") return group("closure", {part_span, part_ladder});
  if (name == "kernel") return group("kernel", {part_roots});
  if (name == "all") {
    SuiteResult r("all");
    for (const auto& n : suite_names()) {
      if (n != "all") r.parts.push_back(run_suite(n, cfg));
    }
    for (const auto& p : r.parts) r.seconds += p.seconds;
    return r;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace riesz::suites
