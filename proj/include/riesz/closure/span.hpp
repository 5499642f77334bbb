#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "riesz/closure/linalg.hpp"
#include "riesz/expr/models.hpp"
#include "riesz/util/rng.hpp"

namespace riesz::closure {

using Element = std::variant<expr::QVector, pw::PiecewiseFunction>;

enum class CarrierKind { Vector, Pw };

/// Where elements live: Q^d, sampled at coordinates, or functions on [a, b],
/// sampled at rational points.
class Carrier {
 public:
  static Carrier vector(std::size_t dim);
  static Carrier pw(Rational a, Rational b, pw::Budget budget = {});

  CarrierKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  const Rational& lo() const noexcept { return a_; }
  const Rational& hi() const noexcept { return b_; }
  const pw::Budget& budget() const noexcept { return budget_; }

  /// Throws BindingError when e does not belong to this carrier.
  void check(const Element& e) const;
  /// Coordinate `sample` of a vector, or f(sample).
  Rational value(const Element& e, const Rational& sample) const;
  Element zero() const;
  Element combine(std::span<const Rational> coeffs, std::span<const Element> elements) const;
  Element abs(const Element& e) const;
  bool equal(const Element& x, const Element& y) const;
  /// A sample where e is nonzero, if e != 0.
  std::optional<Rational> nonzero_sample(const Element& e) const;
  /// A fresh sample point; for pw a random rational in [a, b].
  Rational draw_sample(Rng& rng) const;
  std::string format(const Element& e) const;

 private:
  CarrierKind kind_ = CarrierKind::Vector;
  std::size_t dim_ = 0;
  Rational a_, b_;
  pw::Budget budget_;
};

/// Linearly independent elements plus sample points on which the sample
/// matrix has full column rank, so sampling is injective on the span.
class SpanBasis {
 public:
  static constexpr std::size_t kExtraSamples = 8;

  SpanBasis(Carrier carrier, std::uint64_t seed);

  const Carrier& carrier() const noexcept { return carrier_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Rational>& samples() const noexcept { return samples_; }
  std::size_t dimension() const noexcept { return elements_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Appends e if it is not already in the span; returns whether it was added.
  bool add(Element e);
  /// Appends an element known to be independent; re-samples until the rank
  /// certificate holds.
  void push_independent(Element e);

  Matrix sample_matrix() const;
  Row sample_values(const Element& e) const;
  /// Rank of the sample matrix equals the dimension.
  bool certificate_holds() const;

 private:
  void certify();

  Carrier carrier_;
  std::uint64_t seed_;
  Rng rng_;
  std::vector<Element> elements_;
  std::vector<Rational> samples_;
};

/// Either coefficients with target = sum c_i b_i (exact), or sample points on
/// which no combination matches the target.
struct SpanResult {
  bool in_span = false;
  Row coefficients;
  std::vector<Rational> witness_samples;
};

SpanResult span_membership(const Element& target, const SpanBasis& basis);

}  // namespace riesz::closure
