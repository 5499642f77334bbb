#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "riesz/closure/span.hpp"
#include "riesz/expr/expression.hpp"

namespace riesz::closure {

struct LadderBudget {
  std::size_t max_dimension = 48;
  std::size_t max_pieces = 256;
};

/// One level of the ladder: a basis of a budgeted subspace of L_n, and for
/// each element an expression over the generators that produces it.
struct LadderLevel {
  SpanBasis basis;
  std::vector<expr::Expr> witnesses;
  bool capped = false;
};

/// L_1 within L_2 within ... , each level the span of the previous one and
/// absolute values of chosen combinations of it. Every level is a finite
/// under-approximation; nothing here claims L_n is finite-dimensional.
class LadderBasis {
 public:
  LadderBasis(Carrier carrier, std::uint64_t seed, LadderBudget budget = {});

  /// Adds a generator to level 1 if it is independent of what is there.
  bool seed_element(Element e, expr::Expr witness);

  const std::vector<LadderLevel>& levels() const noexcept { return levels_; }
  const LadderLevel& top() const { return levels_.back(); }
  const Carrier& carrier() const noexcept { return carrier_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const LadderBudget& budget() const noexcept { return budget_; }
  std::vector<std::size_t> dimensions() const;

  /// Starts a new top level equal to the current top, for explicit growth.
  LadderLevel& open_level();
  /// Adds |v| to the top level unless it is already in its span. Returns
  /// whether it was added; sets the level's cap flag instead of exceeding
  /// the dimension cap.
  bool offer(Element e, expr::Expr witness);

 private:
  Carrier carrier_;
  std::uint64_t seed_;
  LadderBudget budget_;
  std::vector<LadderLevel> levels_;
};

/// Appends one level. Candidates are |v| for the top-level basis vectors,
/// their pairwise differences, and `probe_count` random combinations with
/// coefficients p/q, |p|, q <= 16. Deterministic in `seed`.
void ladder_extend(LadderBasis& basis, std::size_t probe_count, std::uint64_t seed);

/// True iff the last extension added nothing and no cap was hit.
bool ladder_saturation(const LadderBasis& basis);

/// Level-1 seeding for the subalgebra generated by `elements`: all products
/// of at most `degree` factors (including the empty product when unital).
void seed_subalgebra(LadderBasis& basis, const std::vector<std::pair<Element, expr::Expr>>& gens,
                     std::size_t degree, bool include_unit);

nlohmann::json ladder_report(const LadderBasis& basis, std::size_t probe_count);

}  // namespace riesz::closure
