#include "riesz/numeric/algebraic.hpp"

#include <optional>

#include "riesz/errors.hpp"
#include "riesz/numeric/sturm.hpp"

namespace riesz::num {

namespace {

Polynomial linear_defining(const Rational& r) { return Polynomial::linear(-r, Rational(1)).primitive(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

// Rational r against an irrational root alpha of q isolated in (lo, hi]
// with q(lo), q(hi) nonzero and of opposite sign.
std::strong_ordering compare_rational_to_root(const Rational& r, const AlgebraicReal& alpha) {
  if (r <= alpha.lower()) return std::strong_ordering::less;
  if (r >= alpha.upper()) return std::strong_ordering::greater;
  int s = alpha.defining().sign_at(r);
  if (s == 0) return std::strong_ordering::equal;
  int s_lo = alpha.defining().sign_at(alpha.lower());
  // Sign differs from the lower end: the root lies in (lo, r).
  return s != s_lo ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering flip(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater) return std::strong_ordering::less;
  return o;
}

bool changes_sign(const Polynomial& g, const AlgebraicReal& a) {
  return g.sign_at(a.lower()) * g.sign_at(a.upper()) < 0;
}

// Bound on |p(x) - p(hi)| for x in [lo, hi] via the mean value theorem.
Rational variation_bound(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational m = max(lo.abs(), hi.abs());
  Rational bound = 0;
  Rational mpow = 1;
  auto cs = p.coefficients();
  for (std::size_t i = 1; i < cs.size(); ++i) {
    bound += Rational(static_cast<long>(i)) * cs[i].abs() * mpow;
    mpow *= m;
  }
  return bound * (hi - lo);
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Rational& r)
    : defining_(linear_defining(r)), lo_(r), hi_(r), rational_(true), sign_lo_(0) {}

AlgebraicReal::AlgebraicReal(Polynomial defining, Rational lo, Rational hi, int sign_lo)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)), rational_(false), sign_lo_(sign_lo) {}

AlgebraicReal AlgebraicReal::from_isolating_interval(const Polynomial& defining, Rational lo, Rational hi) {
  if (defining.degree() < 1) throw DomainError("defining polynomial must be nonconstant");
  if (!(lo < hi)) throw DomainError("isolating interval must satisfy lo < hi");
  Polynomial q = defining.primitive();
  if (q.degree() == 1) {
    Rational r = -q.coeff(0) / q.coeff(1);
    if (!(lo < r && r <= hi)) throw DomainError("no root in isolating interval");
    return AlgebraicReal(r);
  }
  if (q.sign_at(hi) == 0) return AlgebraicReal(hi);
  // Move lo off a neighbouring root so that bisection sees a sign change.
  while (q.sign_at(lo) == 0) {
    Rational m = midpoint(lo, hi);
    if (q.sign_at(m) == 0) return AlgebraicReal(m);
    if (q.sign_at(m) * q.sign_at(hi) < 0) {
      lo = m;
    } else {
      hi = m;
    }
  }
  int s_lo = q.sign_at(lo);
  if (s_lo * q.sign_at(hi) >= 0) throw DomainError("defining polynomial has no sign change on isolating interval");
  return AlgebraicReal(std::move(q), std::move(lo), std::move(hi), s_lo);
}

const Rational& AlgebraicReal::rational_value() const {
  if (!rational_) throw DomainError("algebraic number is irrational");
  return lo_;
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (rational_) return *this;
  Rational m = midpoint(lo_, hi_);
  int s = defining_.sign_at(m);
  if (s == 0) return AlgebraicReal(m);
  if (s == sign_lo_) return AlgebraicReal(defining_, m, hi_, sign_lo_);
  return AlgebraicReal(defining_, lo_, m, sign_lo_);
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  if (width.sign() <= 0) throw DomainError("refinement width must be positive");
  AlgebraicReal a = *this;
  while (!a.rational_ && a.width() > width) a = a.bisected();
  return a;
}

bool AlgebraicReal::same_representation(const AlgebraicReal& o) const {
  if (rational_ != o.rational_) return false;
  if (rational_) return lo_ == o.lo_;
  return lo_ == o.lo_ && hi_ == o.hi_ && defining_ == o.defining_;
}

std::string AlgebraicReal::str() const {
  if (rational_) return lo_.str();
  std::string s = "alg{poly=[";
  auto cs = defining_.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += cs[i].str();
  }
  return s + "], lo=" + lo_.str() + ", hi=" + hi_.str() + "}";
}

std::strong_ordering alg_compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return a.rational_value() <=> b.rational_value();
  if (a.is_rational()) return compare_rational_to_root(a.rational_value(), b);
  if (b.is_rational()) return flip(compare_rational_to_root(b.rational_value(), a));
  if (a.same_representation(b)) return std::strong_ordering::equal;

  AlgebraicReal x = a;
  AlgebraicReal y = b;
  std::optional<bool> common_root;
  std::optional<SturmSequence> common_chain;
  int steps = 0;
  for (;;) {
    if (x.is_rational() || y.is_rational()) return alg_compare(x, y);
    if (x.upper() <= y.lower()) return std::strong_ordering::less;
    if (y.upper() <= x.lower()) return std::strong_ordering::greater;
    if (!common_root && ++steps > 2) {
      Polynomial g = gcd(x.defining(), y.defining());
      common_root = g.degree() >= 1 && changes_sign(g, x) && changes_sign(g, y);
      if (*common_root) common_chain.emplace(g);
    }
    if (common_root && *common_root) {
      // Both are roots of g; they coincide iff g has one root on the hull.
      if (common_chain->count(min(x.lower(), y.lower()), max(x.upper(), y.upper())) == 1)
        return std::strong_ordering::equal;
    }
    if (x.width() >= y.width()) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
}

int alg_sign_at(const Polynomial& p, const AlgebraicReal& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return p.sign_at(a.rational_value());
  if (p.degree() == 0) return p.leading().sign();
  Polynomial g = gcd(p, a.defining());
  if (g.degree() >= 1 && changes_sign(g, a)) return 0;
  AlgebraicReal x = a;
  for (;;) {
    if (x.is_rational()) return p.sign_at(x.rational_value());
    Rational v = p(x.upper());
    if (v.abs() > variation_bound(p, x.lower(), x.upper())) return v.sign();
    x = x.bisected();
  }
}

namespace {

// A rational root r = u/v of an integer polynomial has v | L, the leading
// coefficient, so L*r is an integer. Once the interval is narrower than 1/L
// it holds at most one such candidate.
AlgebraicReal settle_rational(AlgebraicReal a) {
  if (a.is_rational()) return a;
  Polynomial prim = a.defining().primitive();
  Rational lead = prim.leading().abs();
  a = a.refined(lead.inverse() / Rational(2));
  if (a.is_rational()) return a;
  Rational scaled = lead * a.upper();
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
  Rational cand = Rational(n) / lead;
  if (a.lower() < cand && prim.sign_at(cand) == 0) return AlgebraicReal(cand);
  return a;
}

}  // namespace

std::vector<AlgebraicReal> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                         const Budget& budget) {
  if (p.is_zero()) throw DomainError("zero input");
  if (!(lo < hi)) throw DomainError("isolate_roots requires lo < hi");
  budget.check(p);
  std::vector<AlgebraicReal> roots;
  if (p.degree() >= 2 && descartes_variations(p, lo, hi) == 0) {
    if (p.sign_at(hi) == 0) roots.emplace_back(hi);
    return roots;
  }
  Polynomial q = squarefree(p);
  if (q.degree() <= 0) return roots;
  if (q.degree() == 1) {
    Rational r = -q.coeff(0) / q.coeff(1);
    if (lo < r && r <= hi) roots.emplace_back(r);
    return roots;
  }
  SturmSequence chain(q);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  // Depth-first, left interval first, so roots come out ascending.
  std::vector<Pending> stack{{lo, hi, chain.count(lo, hi)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      roots.push_back(AlgebraicReal::from_isolating_interval(q, cur.lo, cur.hi));
      continue;
    }
    Rational m = midpoint(cur.lo, cur.hi);
    int left = chain.count(cur.lo, m);
    stack.push_back({m, cur.hi, cur.count - left});
    stack.push_back({cur.lo, m, left});
  }
  return roots;
}

std::vector<AlgebraicReal> isolate_real_roots(const Polynomial& p, const Budget& budget) {
  if (p.is_zero()) throw DomainError("zero input");
  if (p.degree() < 1) return {};
  Rational b = cauchy_bound(p);
  auto roots = isolate_roots(p, -b, b, budget);
  for (auto& r : roots) r = settle_rational(r);
  return roots;
}

Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (!(a < b)) throw DomainError("rational_between requires a < b");
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  for (;;) {
    if (x.upper() < y.lower()) return midpoint(x.upper(), y.lower());
    if (!x.is_rational() && (y.is_rational() || x.width() >= y.width())) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
}

AlgebraicReal affine_image(const AlgebraicReal& a, const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0) throw DomainError("affine_image requires alpha > 0");
  if (a.is_rational()) return AlgebraicReal(alpha * a.rational_value() + beta);
  Rational inv = alpha.inverse();
  Polynomial q = a.defining().compose_affine(inv, -beta * inv);
  return AlgebraicReal::from_isolating_interval(q, alpha * a.lower() + beta, alpha * a.upper() + beta);
}

}  // namespace riesz::num
