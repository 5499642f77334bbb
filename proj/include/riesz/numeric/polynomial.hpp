#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riesz/numeric/rational.hpp"

namespace riesz::num {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// No trailing zero coefficients; the zero polynomial has none at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }
  /// c1 * x + c0
  static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

  /// Parses `poly[c0, c1, ..., cd]`.
  static Polynomial parse(std::string_view text);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const Rational> coefficients() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  /// p(alpha * t + beta)
  Polynomial compose_affine(const Rational& alpha, const Rational& beta) const;
  /// Positive rational multiple with coprime integer coefficients and
  /// positive leading coefficient.
  Polynomial primitive() const;
  std::size_t max_coeff_bits() const;

  std::string str() const;
  std::size_t hash() const noexcept;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b over Q. b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), primitive. Throws DomainError("zero input") on p = 0.
Polynomial squarefree(const Polynomial& p);

/// Bound B with every real root of p in (-B, B). p nonzero and nonconstant.
Rational cauchy_bound(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace riesz::num
