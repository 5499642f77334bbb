#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "riesz/numeric/algebraic.hpp"
#include "riesz/numeric/budget.hpp"
#include "riesz/numeric/polynomial.hpp"
#include "riesz/numeric/rational.hpp"

namespace riesz::pw {

using num::AlgebraicReal;
using num::Budget;
using num::Polynomial;
using num::Rational;

/// Continuous piecewise-polynomial function on a rational interval [a, b].
///
/// Canonical form: breakpoints strictly ascending with first = a and
/// last = b, one polynomial per gap, and no two adjacent pieces equal. Two
/// functions are equal iff their canonical forms coincide, which is what
/// makes pw_equal a structural comparison.
class PiecewiseFunction {
 public:
  /// Validates ordering and continuity at every interior breakpoint, then
  /// canonicalizes. Throws DomainError on violation.
  static PiecewiseFunction from_parts(std::vector<AlgebraicReal> breaks, std::vector<Polynomial> pieces);
  static PiecewiseFunction polynomial(const Rational& a, const Rational& b, Polynomial p);
  static PiecewiseFunction constant(const Rational& a, const Rational& b, const Rational& c);
  /// Piecewise-linear interpolant through (xs[i], ys[i]); xs ascending, xs
  /// spans the domain.
  static PiecewiseFunction linear_interpolant(std::span<const Rational> xs, std::span<const Rational> ys);

  const Rational& domain_lo() const noexcept { return a_; }
  const Rational& domain_hi() const noexcept { return b_; }
  bool same_domain(const PiecewiseFunction& o) const { return a_ == o.a_ && b_ == o.b_; }

  const std::vector<AlgebraicReal>& breaks() const noexcept { return breaks_; }
  const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  int max_degree() const;
  bool is_zero() const { return pieces_.size() == 1 && pieces_[0].is_zero(); }
  bool all_breaks_rational() const;

  /// Builds from parts known to be continuous and ordered; merges equal
  /// adjacent pieces.
  static PiecewiseFunction canonical(Rational a, Rational b, std::vector<AlgebraicReal> breaks,
                                     std::vector<Polynomial> pieces);

 private:
  PiecewiseFunction() = default;

  Rational a_;
  Rational b_;
  std::vector<AlgebraicReal> breaks_;
  std::vector<Polynomial> pieces_;
};

/// The constant-1 function on a domain.
struct UnitFunction {
  PiecewiseFunction f;

  static UnitFunction on(const Rational& a, const Rational& b) {
    return {PiecewiseFunction::constant(a, b, Rational(1))};
  }
};

PiecewiseFunction pw_add(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget = {});
PiecewiseFunction pw_sub(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget = {});
PiecewiseFunction pw_scale(const Rational& c, const PiecewiseFunction& f);
PiecewiseFunction pw_mul(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget = {});

/// Pointwise |f|; new breakpoints at the sign changes of the pieces.
PiecewiseFunction pw_abs(const PiecewiseFunction& f, const Budget& budget = {});
PiecewiseFunction pw_meet(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget = {});
PiecewiseFunction pw_join(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget = {});
/// f+ = f v 0
PiecewiseFunction pw_pos(const PiecewiseFunction& f, const Budget& budget = {});
/// f- = (-f) v 0
PiecewiseFunction pw_neg(const PiecewiseFunction& f, const Budget& budget = {});

/// Throws DomainError outside [a, b].
Rational pw_eval(const PiecewiseFunction& f, const Rational& x);

bool pw_equal(const PiecewiseFunction& f, const PiecewiseFunction& g);
bool pw_leq(const PiecewiseFunction& f, const PiecewiseFunction& g);
/// A rational point where f > g, if there is one.
std::optional<Rational> pw_leq_witness(const PiecewiseFunction& f, const PiecewiseFunction& g);

/// Least N >= 0 with f ^ N.e = f, located by doubling and then bisection.
/// Returns 0 for f = 0. Throws DomainError unless f >= 0.
long pw_truncate_converges(const PiecewiseFunction& f, const UnitFunction& unit);

/// f o phi, for phi a strictly increasing piecewise-linear map from its own
/// domain onto f's domain.
PiecewiseFunction pw_compose_pl(const PiecewiseFunction& f, const PiecewiseFunction& phi,
                                const Budget& budget = {});

/// Splits p on [lo, hi] at its interior roots. Returns the cut points and the
/// sign of p on each of the cuts.size() + 1 open sub-intervals.
struct SignSplit {
  std::vector<AlgebraicReal> cuts;
  std::vector<int> signs;
  std::vector<Rational> samples;  // one rational point inside each sub-interval
};
SignSplit split_by_sign(const Polynomial& p, const AlgebraicReal& lo, const AlgebraicReal& hi,
                        const Budget& budget = {});

}  // namespace riesz::pw
