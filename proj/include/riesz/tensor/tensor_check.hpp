#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "riesz/rmul/certificate.hpp"
#include "riesz/tensor/separable.hpp"

namespace riesz::tensor {

/// Evaluates an expression on a grid. Maximal level-1 subterms are computed
/// symbolically as separable tensors (the algebra B generated by the
/// binding) and sampled; everything above them is componentwise.
GridFunction eval_on_grid(const expr::Expr& e, const TensorBinding& binding, const std::vector<Rational>& xs,
                          const std::vector<Rational>& ys, const pw::Budget& budget = {});

/// Level-1 expression as a separable tensor.
SeparableTensor eval_separable(const expr::Expr& e, const TensorBinding& binding, const pw::Budget& budget = {});

struct TensorCheckOptions {
  std::uint64_t seed = 1;
  std::size_t spot_checks = 10;
  std::size_t fuel = 0;
  pw::Budget budget;
};

/// Rewrites f*g with the separable generators as level-1 elements and checks
/// lhs = rhs exactly on the grid and at `spot_checks` seeded off-grid points.
rmul::Certificate riesz_tensor_check(std::string_view f_text, std::string_view g_text, const TensorBinding& binding,
                                     const GridSpec& grid, const TensorCheckOptions& opts = {});

struct WeakUnitReport {
  /// Nodes (i, j) where v = |u| ^ (1 (x) 1) vanishes.
  std::vector<std::pair<std::size_t, std::size_t>> v_zeros;
  /// v vanishes exactly where u does.
  bool consistent = false;
  nlohmann::json to_json() const;
};

WeakUnitReport weak_unit_probe(std::string_view u_text, const TensorBinding& binding, const GridSpec& grid);

}  // namespace riesz::tensor
