#include "riesz/closure/ladder_basis.hpp"

#include "riesz/errors.hpp"
#include "riesz/expr/parser.hpp"

namespace riesz::closure {

namespace {

Element multiply(const Carrier& c, const Element& x, const Element& y) {
  if (c.kind() == CarrierKind::Vector) {
    auto a = std::get<expr::QVector>(x);
    const auto& b = std::get<expr::QVector>(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
  }
  return pw::pw_mul(std::get<pw::PiecewiseFunction>(x), std::get<pw::PiecewiseFunction>(y), c.budget());
}

Element unit_of(const Carrier& c) {
  if (c.kind() == CarrierKind::Vector) return expr::QVector(c.dim(), Rational(1));
  return pw::PiecewiseFunction::constant(c.lo(), c.hi(), Rational(1));
}

expr::Expr combination_expr(std::span<const Rational> coeffs, const std::vector<expr::Expr>& terms) {
  expr::Expr acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    expr::Expr t = coeffs[i] == Rational(1) ? terms[i] : expr::scale(coeffs[i], terms[i]);
    acc = acc ? expr::add(acc, t) : t;
  }
  return acc ? acc : expr::constant(Rational(0));
}

}  // namespace

LadderBasis::LadderBasis(Carrier carrier, std::uint64_t seed, LadderBudget budget)
    : carrier_(std::move(carrier)), seed_(seed), budget_(budget) {
  levels_.push_back(LadderLevel{SpanBasis(carrier_, seed_), {}, false});
}

std::vector<std::size_t> LadderBasis::dimensions() const {
  std::vector<std::size_t> d;
  for (const auto& l : levels_) d.push_back(l.basis.dimension());
  return d;
}

bool LadderBasis::seed_element(Element e, expr::Expr witness) {
  if (levels_.size() != 1) throw Error("seeding is only allowed before the ladder grows");
  return offer(std::move(e), std::move(witness));
}

LadderLevel& LadderBasis::open_level() {
  levels_.push_back(levels_.back());
  levels_.back().capped = false;
  return levels_.back();
}

bool LadderBasis::offer(Element e, expr::Expr witness) {
  LadderLevel& top = levels_.back();
  if (carrier_.kind() == CarrierKind::Pw) {
    const auto& f = std::get<pw::PiecewiseFunction>(e);
    if (f.piece_count() > budget_.max_pieces) {
      throw BudgetError("ladder element has " + std::to_string(f.piece_count()) + " pieces, cap " +
                        std::to_string(budget_.max_pieces));
    }
  }
  if (span_membership(e, top.basis).in_span) return false;
  if (top.basis.dimension() >= budget_.max_dimension) {
    top.capped = true;
    return false;
  }
  top.basis.push_independent(std::move(e));
  top.witnesses.push_back(std::move(witness));
  return true;
}

void ladder_extend(LadderBasis& basis, std::size_t probe_count, std::uint64_t seed) {
  const Carrier& c = basis.carrier();
  // Candidates come from the level being extended, so copy it first.
  const LadderLevel prev = basis.top();
  const auto& els = prev.basis.elements();
  const auto& wit = prev.witnesses;
  basis.open_level();
  for (std::size_t i = 0; i < els.size(); ++i) {
    basis.offer(c.abs(els[i]), expr::abs(wit[i]));
  }
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      std::vector<Rational> co(els.size(), Rational(0));
      co[i] = Rational(1);
      co[j] = Rational(-1);
      basis.offer(c.abs(c.combine(co, els)), expr::abs(expr::sub(wit[i], wit[j])));
    }
  }
  Rng rng = Rng::stream(seed, "ladder-probe-" + std::to_string(basis.levels().size()));
  for (std::size_t p = 0; p < probe_count && !els.empty(); ++p) {
    std::vector<Rational> co;
    for (std::size_t k = 0; k < els.size(); ++k) co.push_back(rng.rational(16, 16));
    basis.offer(c.abs(c.combine(co, els)), expr::abs(combination_expr(co, wit)));
  }
}

bool ladder_saturation(const LadderBasis& basis) {
  const auto& ls = basis.levels();
  if (ls.size() < 2) return false;
  const auto& last = ls.back();
  return !last.capped && last.basis.dimension() == ls[ls.size() - 2].basis.dimension();
}

void seed_subalgebra(LadderBasis& basis, const std::vector<std::pair<Element, expr::Expr>>& gens,
                     std::size_t degree, bool include_unit) {
  const Carrier& c = basis.carrier();
  std::vector<std::pair<Element, expr::Expr>> layer;
  if (include_unit) {
    basis.seed_element(unit_of(c), expr::unit());
    layer.emplace_back(unit_of(c), expr::unit());
  }
  for (const auto& g : gens) basis.seed_element(g.first, g.second);
  std::vector<std::pair<Element, expr::Expr>> frontier = gens;
  for (std::size_t d = 2; d <= degree; ++d) {
    std::vector<std::pair<Element, expr::Expr>> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Element prod = multiply(c, f.first, g.first);
        expr::Expr w = expr::mul(f.second, g.second);
        if (basis.seed_element(prod, w)) next.emplace_back(std::move(prod), std::move(w));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
}

nlohmann::json ladder_report(const LadderBasis& basis, std::size_t probe_count) {
  nlohmann::json levels = nlohmann::json::array();
  const auto& ls = basis.levels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& e : ls[i].witnesses) w.push_back(expr::print_expr(e));
    levels.push_back({{"level", i + 1},
                      {"dimension", ls[i].basis.dimension()},
                      {"samples", ls[i].basis.samples().size()},
                      {"capped", ls[i].capped},
                      {"witnesses", w}});
  }
  return {{"note", "each level is a budgeted finite-dimensional under-approximation of L_n"},
          {"carrier", basis.carrier().kind() == CarrierKind::Vector ? "vector" : "pw"},
          {"seed", basis.seed()},
          {"probes", probe_count},
          {"budget", {{"max_dimension", basis.budget().max_dimension}, {"max_pieces", basis.budget().max_pieces}}},
          {"levels", levels},
          {"saturated", ladder_saturation(basis)}};
}

}  // namespace riesz::closure
