#pragma once

#include <compare>
#include <string>
#include <vector>

#include "riesz/numeric/budget.hpp"
#include "riesz/numeric/polynomial.hpp"

namespace riesz::num {

/// Real algebraic number: the unique root of a square-free primitive
/// polynomial in a half-open rational interval (lower, upper]. Rational values
/// take a fast path and carry no interval.
///
/// For irrational values the defining polynomial is nonzero at both
/// endpoints and changes sign across the interval, so bisection needs only
/// endpoint signs.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  explicit AlgebraicReal(const Rational& r);

  /// `defining` must be square-free with exactly one root in (lo, hi].
  static AlgebraicReal from_isolating_interval(const Polynomial& defining, Rational lo, Rational hi);

  bool is_rational() const noexcept { return rational_; }
  /// Throws DomainError for irrational values.
  const Rational& rational_value() const;
  const Polynomial& defining() const noexcept { return defining_; }
  /// lower() < value <= upper(); both equal the value on the rational path.
  const Rational& lower() const noexcept { return lo_; }
  const Rational& upper() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// One bisection step. Same value.
  AlgebraicReal bisected() const;
  /// Same value, interval no wider than `width` (> 0).
  AlgebraicReal refined(const Rational& width) const;

  /// Identical representation (implies equal value; the converse fails).
  bool same_representation(const AlgebraicReal& o) const;

  /// `3/2` or `alg{poly=[c0, ..., cd], lo=l, hi=h}`.
  std::string str() const;

 private:
  AlgebraicReal(Polynomial defining, Rational lo, Rational hi, int sign_lo);

  Polynomial defining_;
  Rational lo_;
  Rational hi_;
  bool rational_ = true;
  int sign_lo_ = 0;
};

/// Exact total order. Equality is decided by a shared root of the defining
/// polynomials, never by interval width.
std::strong_ordering alg_compare(const AlgebraicReal& a, const AlgebraicReal& b);

inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return alg_compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return alg_compare(a, b); }

/// Exact sign (-1, 0, 1) of p at a.
int alg_sign_at(const Polynomial& p, const AlgebraicReal& a);

/// Distinct real roots of p in (lo, hi], ascending, with disjoint intervals.
/// Throws DomainError("zero input") on p = 0 and BudgetError past the caps.
std::vector<AlgebraicReal> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                         const Budget& budget = {});

/// All distinct real roots of p.
std::vector<AlgebraicReal> isolate_real_roots(const Polynomial& p, const Budget& budget = {});

/// A rational strictly between a and b. Requires a < b.
Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b);

/// alpha * a + beta for alpha > 0.
AlgebraicReal affine_image(const AlgebraicReal& a, const Rational& alpha, const Rational& beta);

}  // namespace riesz::num
