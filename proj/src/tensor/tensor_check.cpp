#include "riesz/tensor/tensor_check.hpp"

#include <unordered_map>

#include "riesz/errors.hpp"
#include "riesz/expr/desugar.hpp"
#include "riesz/expr/parser.hpp"
#include "riesz/rmul/rewrite.hpp"
#include "riesz/rmul/transport.hpp"

namespace riesz::tensor {

using expr::Expr;
using expr::Op;
using nlohmann::json;

SeparableTensor eval_separable(const Expr& e, const TensorBinding& binding, const pw::Budget& budget) {
  std::unordered_map<const expr::Node*, SeparableTensor> memo;
  const SeparableTensor& ref = binding.any();
  auto rec = [&](auto& self, const Expr& x) -> SeparableTensor {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    SeparableTensor out(ref.x_lo(), ref.x_hi(), ref.y_lo(), ref.y_hi());
    switch (x.op()) {
      case Op::Gen: out = binding.at(x.name()); break;
      case Op::Unit: out = SeparableTensor::one(ref.x_lo(), ref.x_hi(), ref.y_lo(), ref.y_hi()); break;
      case Op::Scale: out = tensor_scale(x.coeff(), self(self, x.lhs())); break;
      case Op::Add: out = tensor_add(self(self, x.lhs()), self(self, x.rhs())); break;
      case Op::Mul: out = tensor_mul(self(self, x.lhs()), self(self, x.rhs()), budget); break;
      default: throw DomainError("not a level-1 expression");
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return rec(rec, e);
}

GridFunction eval_on_grid(const Expr& e, const TensorBinding& binding, const std::vector<Rational>& xs,
                          const std::vector<Rational>& ys, const pw::Budget& budget) {
  GridModel m = binding.grid_model(xs, ys);
  std::unordered_map<const expr::Node*, GridFunction> memo;
  auto rec = [&](auto& self, const Expr& x) -> GridFunction {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    GridFunction out;
    if (expr::ladder_level(x) == 1) {
      out = to_grid(eval_separable(x, binding, budget), xs, ys);
    } else {
      switch (x.op()) {
        case Op::Scale: out = m.scale(x.coeff(), self(self, x.lhs())); break;
        case Op::Add: out = m.add(self(self, x.lhs()), self(self, x.rhs())); break;
        case Op::Mul: out = m.mul(self(self, x.lhs()), self(self, x.rhs())); break;
        case Op::Abs: out = m.abs(self(self, x.lhs())); break;
        case Op::Pos: out = m.pos(self(self, x.lhs())); break;
        case Op::NegPart: out = m.negp(self(self, x.lhs())); break;
        case Op::Meet: out = m.meet(self(self, x.lhs()), self(self, x.rhs())); break;
        case Op::Join: out = m.join(self(self, x.lhs()), self(self, x.rhs())); break;
        default: throw Error("unexpected leaf above level 1");
      }
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return rec(rec, e);
}

rmul::Certificate riesz_tensor_check(std::string_view f_text, std::string_view g_text, const TensorBinding& binding,
                                     const GridSpec& grid, const TensorCheckOptions& opts) {
  Expr f = expr::parse_expr(f_text);
  Expr g = expr::parse_expr(g_text);
  rmul::Certificate cert;
  for (const auto& n : expr::generators(expr::mul(f, g))) {
    binding.at(n);
    cert.b_generators.push_back(n);
  }
  cert.f = f;
  cert.g = g;
  cert.seed = opts.seed;
  cert.trials = opts.spot_checks;
  rmul::Rewriter rw(opts.fuel);
  cert.rhs = rw.product(rw.ladderize(f), rw.ladderize(g));

  std::size_t bad = expr::unstratified_products(cert.rhs);
  cert.models.push_back({"structure", {{"unstratified_products", bad}}, bad == 0, json()});
  if (bad != 0) return cert;

  auto xs = grid.x_nodes();
  auto ys = grid.y_nodes();
  GridModel gm(xs, ys);
  GridFunction lhs = gm.mul(eval_on_grid(f, binding, xs, ys, opts.budget), eval_on_grid(g, binding, xs, ys, opts.budget));
  GridFunction rhs = eval_on_grid(cert.rhs, binding, xs, ys, opts.budget);
  rmul::ModelCheck gc{"grid", {{"nx", xs.size()}, {"ny", ys.size()}}, lhs == rhs, json()};
  if (!gc.passed) {
    for (std::size_t i = 0; i < xs.size() && gc.counterexample.is_null(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (lhs.at(i, j) != rhs.at(i, j)) {
          gc.counterexample = {{"x", xs[i].str()}, {"y", ys[j].str()}, {"lhs", lhs.at(i, j).str()},
                               {"rhs", rhs.at(i, j).str()}};
          break;
        }
      }
    }
  }
  cert.models.push_back(gc);
  if (!gc.passed) return cert;

  // Point evaluation at (x, y) is a multiplicative Riesz homomorphism, so the
  // generators' exact values there determine both sides.
  const SeparableTensor& ref = binding.any();
  Rng rng = Rng::stream(opts.seed, "tensor-offgrid");
  rmul::ModelCheck sc{"offgrid",
                      {{"points", opts.spot_checks}, {"rational_breaks", [&] {
                          for (const auto& [n, t] : binding.generators) {
                            if (!t.all_breaks_rational()) return false;
                          }
                          return true;
                        }()}},
                      true,
                      json()};
  for (std::size_t k = 0; k < opts.spot_checks; ++k) {
    Rational x = rmul::random_point(ref.x_lo(), ref.x_hi(), 97, rng);
    Rational y = rmul::random_point(ref.y_lo(), ref.y_hi(), 97, rng);
    expr::VectorModel pt(1);
    for (const auto& [n, t] : binding.generators) pt.bind(n, {tensor_eval(t, x, y)});
    Rational l = expr::evaluate(f, pt)[0] * expr::evaluate(g, pt)[0];
    Rational r = expr::evaluate(cert.rhs, pt)[0];
    if (l != r) {
      sc.passed = false;
      sc.counterexample = {{"x", x.str()}, {"y", y.str()}, {"lhs", l.str()}, {"rhs", r.str()}};
      break;
    }
  }
  cert.models.push_back(sc);
  return cert;
}

json WeakUnitReport::to_json() const {
  json zs = json::array();
  for (const auto& [i, j] : v_zeros) zs.push_back({i, j});
  return {{"v_zero_nodes", zs}, {"consistent", consistent}};
}

WeakUnitReport weak_unit_probe(std::string_view u_text, const TensorBinding& binding, const GridSpec& grid) {
  Expr u = expr::parse_expr(u_text);
  GridModel m = binding.grid_model(grid);
  GridFunction uv = expr::evaluate(u, m);
  GridFunction v = m.meet(m.abs(uv), m.unit());
  WeakUnitReport r;
  r.consistent = true;
  for (std::size_t i = 0; i < m.xs().size(); ++i) {
    for (std::size_t j = 0; j < m.ys().size(); ++j) {
      bool vz = v.at(i, j).is_zero();
      if (vz) r.v_zeros.emplace_back(i, j);
      if (vz != uv.at(i, j).is_zero()) r.consistent = false;
    }
  }
  return r;
}

}  // namespace riesz::tensor
