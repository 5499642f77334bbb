#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "riesz/pwfun/piecewise.hpp"
#include "riesz/tensor/grid.hpp"

namespace riesz::tensor {

using pw::PiecewiseFunction;

inline constexpr std::size_t kTermCap = 512;

/// Finite sum of f_i(x) g_i(y). No canonical form: two tensors are compared
/// through their values.
class SeparableTensor {
 public:
  using Term = std::pair<PiecewiseFunction, PiecewiseFunction>;

  /// Zero tensor over [x0, x1] x [y0, y1].
  SeparableTensor(Rational x0, Rational x1, Rational y0, Rational y1);
  /// f (x) g
  static SeparableTensor simple(PiecewiseFunction f, PiecewiseFunction g);
  /// 1 (x) 1
  static SeparableTensor one(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Rational& x_lo() const noexcept { return x0_; }
  const Rational& x_hi() const noexcept { return x1_; }
  const Rational& y_lo() const noexcept { return y0_; }
  const Rational& y_hi() const noexcept { return y1_; }
  bool same_domains(const SeparableTensor& o) const;
  bool all_breaks_rational() const;

  /// Appends a term, dropping it when either factor is zero and merging it
  /// into a term with an equal x or y factor.
  void push(PiecewiseFunction f, PiecewiseFunction g);

 private:
  Rational x0_, x1_, y0_, y1_;
  std::vector<Term> terms_;
};

SeparableTensor tensor_add(const SeparableTensor& u, const SeparableTensor& v);
SeparableTensor tensor_scale(const Rational& c, const SeparableTensor& u);
/// (a (x) b)(a' (x) b') = aa' (x) bb', expanded bilinearly. Throws
/// BudgetError past kTermCap terms.
SeparableTensor tensor_mul(const SeparableTensor& u, const SeparableTensor& v, const pw::Budget& budget = {});
Rational tensor_eval(const SeparableTensor& u, const Rational& x, const Rational& y);
GridFunction to_grid(const SeparableTensor& u, const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Generator names bound to separable tensors over shared domains.
struct TensorBinding {
  std::map<std::string, SeparableTensor> generators;

  const SeparableTensor& at(const std::string& name) const;
  /// Domains of the first generator; throws on an empty binding.
  const SeparableTensor& any() const;
  GridModel grid_model(const std::vector<Rational>& xs, const std::vector<Rational>& ys) const;
  GridModel grid_model(const GridSpec& spec) const { return grid_model(spec.x_nodes(), spec.y_nodes()); }
};

}  // namespace riesz::tensor
