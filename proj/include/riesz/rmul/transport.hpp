#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/rmul/certificate.hpp"
#include "riesz/util/rng.hpp"

namespace riesz::rmul {

/// A Riesz homomorphism that is also multiplicative: evaluation at a point of
/// a pw domain, projection onto a vector coordinate, or precomposition with a
/// strictly increasing piecewise-linear map onto the pw domain.
struct RieszHom {
  enum class Kind { PointEval, Projection, PlPrecompose };

  Kind kind;
  Rational point;
  std::size_t coord = 0;
  std::optional<pw::PiecewiseFunction> phi;

  static RieszHom point_eval(Rational x) { return {Kind::PointEval, std::move(x), 0, std::nullopt}; }
  static RieszHom projection(std::size_t i) { return {Kind::Projection, Rational(0), i, std::nullopt}; }
  static RieszHom precompose(pw::PiecewiseFunction phi) {
    return {Kind::PlPrecompose, Rational(0), 0, std::move(phi)};
  }

  std::string describe() const;
};

/// Evaluates f, g and the rewrite in `model`, applies h, and compares
///   h(rhs), rhs evaluated on h-transported generators, and h(f) h(g).
/// True iff all three agree exactly. Throws BindingError when h does not
/// apply to the model's carrier.
bool transport_check(const Certificate& cert, const expr::ModelBinding& model, const RieszHom& h);

/// Random strictly increasing PL map of [a, b] onto itself with up to
/// `max_breaks` interior breakpoints.
pw::PiecewiseFunction random_pl_map(const Rational& a, const Rational& b, std::size_t max_breaks, Rng& rng);

/// A point in [a, b] with denominator at most `den`.
Rational random_point(const Rational& a, const Rational& b, long den, Rng& rng);

}  // namespace riesz::rmul
