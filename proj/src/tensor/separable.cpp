#include "riesz/tensor/separable.hpp"

#include "riesz/errors.hpp"

namespace riesz::tensor {

SeparableTensor::SeparableTensor(Rational x0, Rational x1, Rational y0, Rational y1)
    : x0_(std::move(x0)), x1_(std::move(x1)), y0_(std::move(y0)), y1_(std::move(y1)) {
  if (!(x0_ < x1_) || !(y0_ < y1_)) throw DomainError("tensor domains need lo < hi");
}

SeparableTensor SeparableTensor::simple(PiecewiseFunction f, PiecewiseFunction g) {
  SeparableTensor t(f.domain_lo(), f.domain_hi(), g.domain_lo(), g.domain_hi());
  t.push(std::move(f), std::move(g));
  return t;
}

SeparableTensor SeparableTensor::one(const Rational& x0, const Rational& x1, const Rational& y0,
                                     const Rational& y1) {
  return simple(PiecewiseFunction::constant(x0, x1, Rational(1)), PiecewiseFunction::constant(y0, y1, Rational(1)));
}

bool SeparableTensor::same_domains(const SeparableTensor& o) const {
  return x0_ == o.x0_ && x1_ == o.x1_ && y0_ == o.y0_ && y1_ == o.y1_;
}

bool SeparableTensor::all_breaks_rational() const {
  for (const auto& [f, g] : terms_) {
    if (!f.all_breaks_rational() || !g.all_breaks_rational()) return false;
  }
  return true;
}

void SeparableTensor::push(PiecewiseFunction f, PiecewiseFunction g) {
  if (f.domain_lo() != x0_ || f.domain_hi() != x1_ || g.domain_lo() != y0_ || g.domain_hi() != y1_) {
    throw DomainError("tensor term domain mismatch");
  }
  if (f.is_zero() || g.is_zero()) return;
  // f (x) g + f (x) g' = f (x) (g + g'), and symmetrically in the y factor.
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (pw::pw_equal(it->first, f)) {
      it->second = pw::pw_add(it->second, g);
    } else if (pw::pw_equal(it->second, g)) {
      it->first = pw::pw_add(it->first, f);
    } else {
      continue;
    }
    if (it->first.is_zero() || it->second.is_zero()) terms_.erase(it);
    return;
  }
  if (terms_.size() >= kTermCap) throw BudgetError("separable tensor exceeds " + std::to_string(kTermCap) + " terms");
  terms_.emplace_back(std::move(f), std::move(g));
}

SeparableTensor tensor_add(const SeparableTensor& u, const SeparableTensor& v) {
  if (!u.same_domains(v)) throw DomainError("tensor domain mismatch");
  SeparableTensor r = u;
  for (const auto& [f, g] : v.terms()) r.push(f, g);
  return r;
}

SeparableTensor tensor_scale(const Rational& c, const SeparableTensor& u) {
  SeparableTensor r(u.x_lo(), u.x_hi(), u.y_lo(), u.y_hi());
  if (c.is_zero()) return r;
  for (const auto& [f, g] : u.terms()) r.push(pw::pw_scale(c, f), g);
  return r;
}

SeparableTensor tensor_mul(const SeparableTensor& u, const SeparableTensor& v, const pw::Budget& budget) {
  if (!u.same_domains(v)) throw DomainError("tensor domain mismatch");
  SeparableTensor r(u.x_lo(), u.x_hi(), u.y_lo(), u.y_hi());
  for (const auto& [a, b] : u.terms()) {
    for (const auto& [c, d] : v.terms()) r.push(pw::pw_mul(a, c, budget), pw::pw_mul(b, d, budget));
  }
  return r;
}

Rational tensor_eval(const SeparableTensor& u, const Rational& x, const Rational& y) {
  if (x < u.x_lo() || x > u.x_hi() || y < u.y_lo() || y > u.y_hi()) throw DomainError("point outside tensor domain");
  Rational s(0);
  for (const auto& [f, g] : u.terms()) s += pw::pw_eval(f, x) * pw::pw_eval(g, y);
  return s;
}

GridFunction to_grid(const SeparableTensor& u, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  GridFunction out{xs, ys, std::vector<Rational>(xs.size() * ys.size(), Rational(0))};
  for (const auto& [f, g] : u.terms()) {
    std::vector<Rational> fx;
    fx.reserve(xs.size());
    for (const auto& x : xs) fx.push_back(pw::pw_eval(f, x));
    std::vector<Rational> gy;
    gy.reserve(ys.size());
    for (const auto& y : ys) gy.push_back(pw::pw_eval(g, y));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) out.at(i, j) += fx[i] * gy[j];
    }
  }
  return out;
}

const SeparableTensor& TensorBinding::at(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw BindingError("unbound generator " + name);
  return it->second;
}

const SeparableTensor& TensorBinding::any() const {
  if (generators.empty()) throw BindingError("empty tensor binding");
  return generators.begin()->second;
}

GridModel TensorBinding::grid_model(const std::vector<Rational>& xs, const std::vector<Rational>& ys) const {
  GridModel m(xs, ys);
  for (const auto& [name, t] : generators) m.bind(name, to_grid(t, xs, ys));
  return m;
}

}  // namespace riesz::tensor
