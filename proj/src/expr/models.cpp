#include "riesz/expr/models.hpp"

#include "riesz/pwfun/literal.hpp"

namespace riesz::expr {

std::string format_vector(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

void VectorModel::check(const QVector& a) const {
  if (a.size() != dim_) {
    throw BindingError("carrier mismatch: expected dimension " + std::to_string(dim_) + ", got " +
                       std::to_string(a.size()));
  }
}

void VectorModel::bind(const std::string& name, QVector v) {
  check(v);
  gens_[name] = std::move(v);
}

QVector VectorModel::generator(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw BindingError("unbound generator " + name);
  return it->second;
}

QVector VectorModel::unit() const { return QVector(dim_, Rational(1)); }

QVector VectorModel::add(const QVector& a, const QVector& b) const {
  check(a);
  check(b);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i] + b[i];
  return r;
}

QVector VectorModel::scale(const Rational& c, const QVector& a) const {
  check(a);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = c * a[i];
  return r;
}

QVector VectorModel::mul(const QVector& a, const QVector& b) const {
  check(a);
  check(b);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i] * b[i];
  return r;
}

QVector VectorModel::abs(const QVector& a) const {
  check(a);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i].abs();
  return r;
}

QVector VectorModel::pos(const QVector& a) const {
  check(a);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = num::max(a[i], Rational(0));
  return r;
}

QVector VectorModel::negp(const QVector& a) const {
  check(a);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = num::max(-a[i], Rational(0));
  return r;
}

QVector VectorModel::meet(const QVector& a, const QVector& b) const {
  check(a);
  check(b);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = num::min(a[i], b[i]);
  return r;
}

QVector VectorModel::join(const QVector& a, const QVector& b) const {
  check(a);
  check(b);
  QVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = num::max(a[i], b[i]);
  return r;
}

bool VectorModel::leq(const QVector& a, const QVector& b) const {
  check(a);
  check(b);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

PwModel::PwModel(Rational a, Rational b, pw::Budget budget)
    : a_(std::move(a)), b_(std::move(b)), budget_(budget) {
  if (!(a_ < b_)) throw DomainError("pw model needs a < b");
}

void PwModel::check(const Element& f) const {
  if (f.domain_lo() != a_ || f.domain_hi() != b_) {
    throw BindingError("carrier mismatch: expected domain [" + a_.str() + ", " + b_.str() + "]");
  }
}

void PwModel::bind(const std::string& name, Element f) {
  check(f);
  gens_.insert_or_assign(name, std::move(f));
}

PwModel::Element PwModel::generator(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw BindingError("unbound generator " + name);
  return it->second;
}

PwModel::Element PwModel::unit() const { return pw::UnitFunction::on(a_, b_).f; }

PwModel::Element PwModel::add(const Element& f, const Element& g) const { return pw::pw_add(f, g, budget_); }
PwModel::Element PwModel::scale(const Rational& c, const Element& f) const { return pw::pw_scale(c, f); }
PwModel::Element PwModel::mul(const Element& f, const Element& g) const { return pw::pw_mul(f, g, budget_); }
PwModel::Element PwModel::abs(const Element& f) const { return pw::pw_abs(f, budget_); }
PwModel::Element PwModel::pos(const Element& f) const { return pw::pw_pos(f, budget_); }
PwModel::Element PwModel::negp(const Element& f) const { return pw::pw_neg(f, budget_); }
PwModel::Element PwModel::meet(const Element& f, const Element& g) const { return pw::pw_meet(f, g, budget_); }
PwModel::Element PwModel::join(const Element& f, const Element& g) const { return pw::pw_join(f, g, budget_); }
bool PwModel::equal(const Element& f, const Element& g) const { return pw::pw_equal(f, g); }
bool PwModel::leq(const Element& f, const Element& g) const { return pw::pw_leq(f, g); }
std::string PwModel::format(const Element& f) const { return pw::format_pw(f); }

}  // namespace riesz::expr
