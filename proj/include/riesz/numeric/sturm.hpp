#pragma once

#include <vector>

#include "riesz/numeric/polynomial.hpp"

namespace riesz::num {

/// Sturm chain p0 = p, p1 = p', p(k+1) = -rem(p(k-1), p(k)), each term scaled
/// by a positive constant to keep integer coefficients small.
class SturmSequence {
 public:
  /// p must be nonzero and square-free.
  explicit SturmSequence(const Polynomial& p);

  int variations(const Rational& x) const;
  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

  const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Sign variations of (1 + t)^d p((lo + hi t) / (1 + t)). An upper bound on
/// the number of roots of p in the open interval (lo, hi), of equal parity;
/// 0 proves there are none.
int descartes_variations(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace riesz::num
