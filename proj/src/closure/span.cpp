#include "riesz/closure/span.hpp"

#include <algorithm>

#include "riesz/errors.hpp"
#include "riesz/pwfun/literal.hpp"

namespace riesz::closure {

Carrier Carrier::vector(std::size_t dim) {
  if (dim == 0) throw DomainError("vector carrier needs dim > 0");
  Carrier c;
  c.kind_ = CarrierKind::Vector;
  c.dim_ = dim;
  return c;
}

Carrier Carrier::pw(Rational a, Rational b, pw::Budget budget) {
  if (!(a < b)) throw DomainError("pw carrier needs a < b");
  Carrier c;
  c.kind_ = CarrierKind::Pw;
  c.a_ = std::move(a);
  c.b_ = std::move(b);
  c.budget_ = budget;
  return c;
}

void Carrier::check(const Element& e) const {
  if (kind_ == CarrierKind::Vector) {
    const auto* v = std::get_if<expr::QVector>(&e);
    if (!v || v->size() != dim_) throw BindingError("carrier mismatch: expected a vector of dimension " + std::to_string(dim_));
  } else {
    const auto* f = std::get_if<pw::PiecewiseFunction>(&e);
    if (!f || f->domain_lo() != a_ || f->domain_hi() != b_) {
      throw BindingError("carrier mismatch: expected a function on [" + a_.str() + ", " + b_.str() + "]");
    }
  }
}

Rational Carrier::value(const Element& e, const Rational& sample) const {
  if (kind_ == CarrierKind::Vector) {
    const auto& v = std::get<expr::QVector>(e);
    return v.at(static_cast<std::size_t>(sample.numerator().get_ui()));
  }
  return pw::pw_eval(std::get<pw::PiecewiseFunction>(e), sample);
}

Element Carrier::zero() const {
  if (kind_ == CarrierKind::Vector) return expr::QVector(dim_, Rational(0));
  return pw::PiecewiseFunction::constant(a_, b_, Rational(0));
}

Element Carrier::combine(std::span<const Rational> coeffs, std::span<const Element> elements) const {
  if (coeffs.size() != elements.size()) throw DomainError("combine: size mismatch");
  if (kind_ == CarrierKind::Vector) {
    expr::QVector acc(dim_, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      const auto& v = std::get<expr::QVector>(elements[i]);
      for (std::size_t k = 0; k < dim_; ++k) acc[k] += coeffs[i] * v[k];
    }
    return acc;
  }
  auto acc = pw::PiecewiseFunction::constant(a_, b_, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc = pw::pw_add(acc, pw::pw_scale(coeffs[i], std::get<pw::PiecewiseFunction>(elements[i])), budget_);
  }
  return acc;
}

Element Carrier::abs(const Element& e) const {
  if (kind_ == CarrierKind::Vector) {
    auto v = std::get<expr::QVector>(e);
    for (auto& x : v) x = x.abs();
    return v;
  }
  return pw::pw_abs(std::get<pw::PiecewiseFunction>(e), budget_);
}

bool Carrier::equal(const Element& x, const Element& y) const {
  if (kind_ == CarrierKind::Vector) return std::get<expr::QVector>(x) == std::get<expr::QVector>(y);
  return pw::pw_equal(std::get<pw::PiecewiseFunction>(x), std::get<pw::PiecewiseFunction>(y));
}

std::optional<Rational> Carrier::nonzero_sample(const Element& e) const {
  if (kind_ == CarrierKind::Vector) {
    const auto& v = std::get<expr::QVector>(e);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) return Rational(static_cast<long>(i));
    }
    return std::nullopt;
  }
  const auto& f = std::get<pw::PiecewiseFunction>(e);
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const auto& p = f.pieces()[i];
    if (p.is_zero()) continue;
    Rational r1 = num::rational_between(f.breaks()[i], f.breaks()[i + 1]);
    Rational r2 = num::rational_between(num::AlgebraicReal(r1), f.breaks()[i + 1]);
    // p has at most deg roots, so one of deg + 1 distinct points works.
    const long n = std::max(1, p.degree()) + 1;
    for (long k = 0; k < n; ++k) {
      Rational x = r1 + (r2 - r1) * Rational(k, n);
      if (!p(x).is_zero()) return x;
    }
  }
  return std::nullopt;
}

Rational Carrier::draw_sample(Rng& rng) const {
  if (kind_ == CarrierKind::Vector) return Rational(rng.uniform(0, static_cast<long>(dim_) - 1));
  long den = rng.uniform(2, 97);
  long k = rng.uniform(0, den);
  return a_ + (b_ - a_) * Rational(k, den);
}

std::string Carrier::format(const Element& e) const {
  if (kind_ == CarrierKind::Vector) return expr::format_vector(std::get<expr::QVector>(e));
  return pw::format_pw(std::get<pw::PiecewiseFunction>(e));
}

SpanBasis::SpanBasis(Carrier carrier, std::uint64_t seed)
    : carrier_(std::move(carrier)), seed_(seed), rng_(Rng::stream(seed, "span-samples")) {
  if (carrier_.kind() == CarrierKind::Vector) {
    for (std::size_t i = 0; i < carrier_.dim(); ++i) samples_.emplace_back(static_cast<long>(i));
  }
}

Row SpanBasis::sample_values(const Element& e) const {
  Row r;
  r.reserve(samples_.size());
  for (const auto& s : samples_) r.push_back(carrier_.value(e, s));
  return r;
}

Matrix SpanBasis::sample_matrix() const {
  Matrix m(samples_.size(), Row(elements_.size()));
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    Row col = sample_values(elements_[j]);
    for (std::size_t i = 0; i < samples_.size(); ++i) m[i][j] = std::move(col[i]);
  }
  return m;
}

bool SpanBasis::certificate_holds() const { return rank(sample_matrix()) == elements_.size(); }

void SpanBasis::certify() {
  if (carrier_.kind() == CarrierKind::Vector) {
    if (!certificate_holds()) throw Error("span basis elements are linearly dependent");
    return;
  }
  const std::size_t n = elements_.size();
  std::size_t attempts = 0;
  const std::size_t max_attempts = 64 + 32 * n;
  auto draw_fresh = [&] {
    for (;;) {
      if (++attempts > max_attempts) throw Error("rank certificate: sampling failed to separate the basis");
      Rational s = carrier_.draw_sample(rng_);
      if (std::find(samples_.begin(), samples_.end(), s) == samples_.end()) {
        samples_.push_back(std::move(s));
        return;
      }
    }
  };
  while (samples_.size() < n) draw_fresh();
  for (std::size_t tries = 0; !certificate_holds() && tries < 8; ++tries) draw_fresh();
  while (auto c = null_vector(sample_matrix(), n)) {
    auto s = carrier_.nonzero_sample(carrier_.combine(*c, elements_));
    if (!s) throw Error("span basis elements are linearly dependent");
    samples_.push_back(std::move(*s));
  }
  while (samples_.size() < n + kExtraSamples) draw_fresh();
}

void SpanBasis::push_independent(Element e) {
  carrier_.check(e);
  elements_.push_back(std::move(e));
  certify();
}

bool SpanBasis::add(Element e) {
  if (span_membership(e, *this).in_span) return false;
  push_independent(std::move(e));
  return true;
}

namespace {

// Smallest prefix-greedy subset of rows on which A c = b is already
// inconsistent.
std::vector<std::size_t> infeasible_rows(const Matrix& a, const Row& b) {
  std::vector<std::size_t> chosen;
  Matrix aug;
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Matrix trial = aug;
    Row row = a[i];
    row.push_back(b[i]);
    trial.push_back(row);
    std::size_t tr = rank(trial);
    if (tr == r) continue;
    aug = std::move(trial);
    r = tr;
    chosen.push_back(i);
    Matrix lhs;
    Row rhs;
    for (std::size_t k : chosen) {
      lhs.push_back(a[k]);
      rhs.push_back(b[k]);
    }
    if (!solve(lhs, rhs)) return chosen;
  }
  return chosen;
}

}  // namespace

SpanResult span_membership(const Element& target, const SpanBasis& basis) {
  const Carrier& c = basis.carrier();
  c.check(target);
  Matrix a = basis.sample_matrix();
  Row t = basis.sample_values(target);
  std::vector<Rational> samples = basis.samples();
  SpanResult out;
  if (basis.dimension() == 0) {
    // Only the zero element is in the span of nothing.
    auto w = c.nonzero_sample(target);
    if (!w) {
      out.in_span = true;
      return out;
    }
    out.witness_samples = {*w};
    return out;
  }
  if (auto sol = solve(a, t)) {
    Element candidate = c.combine(*sol, basis.elements());
    if (c.equal(candidate, target)) {
      out.in_span = true;
      out.coefficients = std::move(*sol);
      return out;
    }
    // Sampling is injective on the span, so the unique sample solution being
    // wrong means the target lies outside; add a point that shows it.
    Element residual = c.combine(std::vector<Rational>{Rational(1), Rational(-1)},
                                 std::vector<Element>{target, candidate});
    auto w = c.nonzero_sample(residual);
    if (!w) throw Error("span membership: residual vanishes but equality failed");
    Row extra;
    for (const auto& e : basis.elements()) extra.push_back(c.value(e, *w));
    a.push_back(std::move(extra));
    t.push_back(c.value(target, *w));
    samples.push_back(*w);
  }
  for (std::size_t i : infeasible_rows(a, t)) out.witness_samples.push_back(samples[i]);
  return out;
}

}  // namespace riesz::closure
