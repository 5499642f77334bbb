#include "riesz/rmul/certificate.hpp"

#include "riesz/errors.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/rmul/rewrite.hpp"
#include "riesz/util/rng.hpp"

namespace riesz::rmul {

using nlohmann::json;

bool Certificate::passed() const {
  for (const auto& m : models) {
    if (!m.passed) return false;
  }
  return !models.empty();
}

json Certificate::to_json() const {
  json ms = json::array();
  for (const auto& m : models) {
    json r = {{"kind", m.kind}, {"params", m.params}, {"passed", m.passed}};
    if (!m.counterexample.is_null()) r["counterexample"] = m.counterexample;
    ms.push_back(std::move(r));
  }
  return {{"b_generators", b_generators},
          {"lhs_text", expr::print_expr(lhs())},
          {"rhs_text", expr::print_expr(rhs)},
          {"seed", seed},
          {"trials", trials},
          {"models", ms}};
}

Certificate Certificate::from_json(const json& j) {
  try {
    Certificate c;
    c.b_generators = j.at("b_generators").get<std::vector<std::string>>();
    Expr lhs = expr::parse_expr(j.at("lhs_text").get<std::string>());
    if (lhs.op() != expr::Op::Mul) throw ParseError("lhs_text is not a product", 0);
    c.f = lhs.lhs();
    c.g = lhs.rhs();
    c.rhs = expr::parse_expr(j.at("rhs_text").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.trials = j.at("trials").get<std::size_t>();
    for (const auto& m : j.at("models")) {
      c.models.push_back({m.at("kind").get<std::string>(), m.at("params"), m.at("passed").get<bool>(),
                          m.value("counterexample", json())});
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

namespace {

template <class M>
ModelCheck check_with(const Certificate& cert, const M& m, const std::string& kind, json params) {
  auto lhs = m.mul(expr::evaluate(cert.f, m), expr::evaluate(cert.g, m));
  auto rhs = expr::evaluate(cert.rhs, m);
  ModelCheck out{kind, std::move(params), m.equal(lhs, rhs), json()};
  if (!out.passed) out.counterexample = {{"lhs_value", m.format(lhs)}, {"rhs_value", m.format(rhs)}};
  return out;
}

ModelCheck structure_check(const Certificate& cert) {
  std::size_t bad = expr::unstratified_products(cert.rhs);
  bool core = expr::is_core(cert.rhs);
  ModelCheck out{"structure",
                 {{"unstratified_products", bad}, {"core", core}, {"dag_nodes", expr::dag_size(cert.rhs)}},
                 bad == 0 && core && expr::is_ladder_form(cert.rhs),
                 json()};
  if (!out.passed) out.counterexample = {{"rhs_text", expr::print_expr(cert.rhs)}};
  return out;
}

ModelCheck vector_trials(const Certificate& cert, const CertifyOptions& opts) {
  Rng rng = Rng::stream(opts.seed, "certify-vector");
  for (std::size_t t = 0; t < opts.trials; ++t) {
    expr::VectorModel m(opts.vector_dim);
    json assignment = json::object();
    for (const auto& name : cert.b_generators) {
      expr::QVector v;
      for (std::size_t i = 0; i < opts.vector_dim; ++i) v.push_back(rng.rational(opts.value_num, opts.value_den));
      assignment[name] = expr::format_vector(v);
      m.bind(name, std::move(v));
    }
    ModelCheck c = check_with(cert, m, "vector", json());
    if (!c.passed) {
      c.params = {{"dim", opts.vector_dim}, {"trials", opts.trials}, {"failed_trial", t}};
      c.counterexample["assignment"] = assignment;
      return c;
    }
  }
  return {"vector", {{"dim", opts.vector_dim}, {"trials", opts.trials}}, true, json()};
}

}  // namespace

ModelCheck check_in_model(const Certificate& cert, const expr::ModelBinding& model) {
  return std::visit(
      [&](const auto& m) -> ModelCheck {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, expr::VectorModel>) {
          return check_with(cert, m, "vector", {{"dim", m.dim()}, {"source", "binding"}});
        } else if constexpr (std::is_same_v<T, expr::PwModel>) {
          auto lhs = m.mul(expr::evaluate(cert.f, m), expr::evaluate(cert.g, m));
          auto rhs = expr::evaluate(cert.rhs, m);
          ModelCheck out{"pw",
                         {{"domain", {m.domain_lo().str(), m.domain_hi().str()}},
                          {"lhs_pieces", lhs.piece_count()},
                          {"rhs_pieces", rhs.piece_count()}},
                         m.equal(lhs, rhs),
                         json()};
          if (!out.passed) out.counterexample = {{"lhs_value", m.format(lhs)}, {"rhs_value", m.format(rhs)}};
          return out;
        } else {
          return check_with(cert, m, "grid", {{"nx", m.xs().size()}, {"ny", m.ys().size()}});
        }
      },
      model);
}

Certificate recheck_certificate(const Certificate& cert, const CertifyOptions& opts) {
  Certificate out = cert;
  out.seed = opts.seed;
  out.trials = opts.trials;
  out.models.clear();
  out.models.push_back(structure_check(out));
  if (!out.models.back().passed) return out;
  if (opts.trials > 0) {
    out.models.push_back(vector_trials(out, opts));
    if (!out.models.back().passed) return out;
  }
  for (const auto& b : opts.bindings) {
    out.models.push_back(check_in_model(out, b));
    if (!out.models.back().passed) return out;
  }
  return out;
}

Certificate make_certificate(const Expr& f, const Expr& g, const CertifyOptions& opts) {
  Certificate cert;
  for (const auto& n : expr::generators(expr::mul(f, g))) cert.b_generators.push_back(n);
  cert.f = f;
  cert.g = g;
  Rewriter rw(opts.fuel);
  Expr fl = rw.ladderize(f);
  Expr gl = rw.ladderize(g);
  cert.rhs = rw.product(fl, gl);
  return recheck_certificate(cert, opts);
}

}  // namespace riesz::rmul
