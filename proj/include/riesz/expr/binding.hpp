#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "riesz/expr/models.hpp"
#include "riesz/tensor/separable.hpp"

namespace riesz::expr {

/// A model together with its generator bindings.
using ModelBinding = std::variant<VectorModel, PwModel, tensor::GridModel>;

/// Rationals in binding files are JSON integers or strings "p/q".
Rational json_rational(const nlohmann::json& j);
nlohmann::json rational_json(const Rational& r);

/// Accepted layouts:
///   {"model": "vector", "generators": {"g1": ["1", "-2"], ...}}
///   {"model": "pw", "domain": ["0", "1"], "generators": {"g1": "pw{...}" | "poly[...]"}}
///   {"model": "tensor", "generators": {...}, "grid": {...}}   (see load_tensor_binding)
/// Throws BindingError on a malformed file or a carrier mismatch, and
/// ParseError on a malformed function literal.
ModelBinding load_binding(const nlohmann::json& j, const pw::Budget& budget = {});

/// Tensor generators: {"t1": {"x": pw, "y": pw}} or a list of such pairs for
/// a sum. Domains are taken from the first literal.
tensor::TensorBinding load_tensor_binding(const nlohmann::json& generators);
/// {"nx", "ny", "xdomain", "ydomain"}, all optional. Defaults to 16 x 16 on the
/// domains of `defaults`, or on [0,1]^2.
tensor::GridSpec load_grid_spec(const nlohmann::json& j, const tensor::TensorBinding* defaults = nullptr);

std::string model_kind(const ModelBinding& m);

}  // namespace riesz::expr
