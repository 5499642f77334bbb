#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "riesz/closure/linalg.hpp"
#include "riesz/expr/models.hpp"
#include "riesz/util/rng.hpp"

namespace riesz::bimorph {

using expr::QVector;
using num::Rational;

/// phi(x, y) = x^T M y with M of size m x n.
struct BilinearForm {
  closure::Matrix entries;

  static BilinearForm zero(std::size_t m, std::size_t n);
  static BilinearForm identity(std::size_t n);
  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  Rational apply(const QVector& x, const QVector& y) const;
  bool is_zero() const;
  bool is_positive() const;
};

/// T(x, y)_r = c_r x_i y_j.
struct Atom {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational c = Rational(1);
};

/// Bilinear map Q^m x Q^n -> Q^k with each output coordinate a sum of atoms.
/// A genuine Riesz bimorphism has exactly one atom per coordinate.
struct AtomBimorphism {
  std::size_t m = 1;
  std::size_t n = 1;
  std::vector<std::vector<Atom>> coords;

  static AtomBimorphism single_atoms(std::size_t m, std::size_t n, const std::vector<Atom>& atoms);
  std::size_t k() const { return coords.size(); }
  QVector apply(const QVector& x, const QVector& y) const;
  bool is_positive() const;
  /// T(e, e) = e for the all-ones vectors.
  bool preserves_unit() const;
};

/// Outcome of a lab check, in the report layout
/// {check, dims, seed, trials, result, witness?}.
struct LabResult {
  std::string check;
  nlohmann::json dims;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool result = false;
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

struct Proportionality {
  enum class Kind { Lambda, Witness, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Rational lambda;
  QVector x;
  QVector y;
  std::vector<std::string> log;
};

/// Psi = lambda Phi, or a pair with x^T Phi y = 0 and x^T Psi y != 0. Phi = 0
/// with Psi != 0 yields a witness.
Proportionality proportionality(const BilinearForm& phi, const BilinearForm& psi, std::uint64_t seed,
                                std::size_t attempts = 64);

/// Seeded checks of |T(x, y)| = T(|x|, |y|), additivity and positive
/// homogeneity in each variable.
LabResult check_bimorphism(const AtomBimorphism& t, std::size_t trials, std::uint64_t seed);

/// T(a o x, b o y) = T(a, b) o T(x, y) on seeded samples. Throws
/// HypothesisError unless T(e, e) = e.
LabResult check_multiplicative(const AtomBimorphism& t, std::size_t trials, std::uint64_t seed);

/// Every unit-preserving single-atom T with m, n, k <= max_dim on every input
/// from a small lattice ({-1, 1/2, 2} when m n <= 4, else {-1, 2}).
LabResult exhaustive_multiplicative(std::size_t max_dim);

struct ConvergencePair {
  QVector f, g, u, v;
};

/// f_n = f + u/n, g_n = g + v/n, w = |g| + v; checks
/// |phi(f_n, g_n) - phi(f, g)| <= (phi(u, w) + phi(|f|, v)) / n for n <= n_max.
/// Throws DomainError when phi has a negative coefficient or u, v are not >= 0.
LabResult convergence_bound_check(const AtomBimorphism& phi, const ConvergencePair& pair, std::size_t n_max);
LabResult convergence_bound_check(const BilinearForm& phi, const ConvergencePair& pair, std::size_t n_max);

/// Random bimorphism with one atom per coordinate; c = 1 when unit_preserving.
AtomBimorphism random_atoms(std::size_t m, std::size_t n, std::size_t k, bool unit_preserving, Rng& rng);

}  // namespace riesz::bimorph
