#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "riesz/expr/binding.hpp"
#include "riesz/expr/expression.hpp"

namespace riesz::rmul {

using expr::Expr;
using num::Rational;

struct ModelCheck {
  std::string kind;
  nlohmann::json params;
  bool passed = false;
  nlohmann::json counterexample;  // null when passed
};

/// lhs = f*g as written, rhs = its ladder-form rewrite, and the exact model
/// checks that were run on the pair.
struct Certificate {
  std::vector<std::string> b_generators;
  Expr f;
  Expr g;
  Expr rhs;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<ModelCheck> models;

  Expr lhs() const { return expr::mul(f, g); }
  bool passed() const;
  nlohmann::json to_json() const;
  /// Reads the JSON form back; lhs_text must parse to a product.
  static Certificate from_json(const nlohmann::json& j);
};

struct CertifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t vector_dim = 6;
  long value_num = 12;
  long value_den = 4;
  std::size_t fuel = 0;
  /// Further models to check in, e.g. a pw or grid binding.
  std::vector<expr::ModelBinding> bindings;
};

/// Rewrites f*g into ladder form and checks (a) the structure, (b) exact
/// equality in Q^dim under `trials` seeded assignments, (c) exact equality in
/// every supplied binding. A failed check is recorded, not thrown. Budget and
/// fuel errors propagate.
Certificate make_certificate(const Expr& f, const Expr& g, const CertifyOptions& opts);

/// Re-runs the structural and model checks of an existing certificate; the
/// returned certificate carries the fresh records.
Certificate recheck_certificate(const Certificate& cert, const CertifyOptions& opts);

/// One exact lhs = rhs check in a model.
ModelCheck check_in_model(const Certificate& cert, const expr::ModelBinding& model);

}  // namespace riesz::rmul
