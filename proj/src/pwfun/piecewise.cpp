#include "riesz/pwfun/piecewise.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "riesz/errors.hpp"
#include "riesz/numeric/sturm.hpp"

namespace riesz::pw {

namespace {

struct Overlay {
  std::vector<AlgebraicReal> breaks;
  std::vector<std::pair<std::size_t, std::size_t>> pieces;  // (f piece, g piece) per segment
};

void require_same_domain(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  if (!f.same_domain(g)) {
    throw DomainError("domain mismatch: [" + f.domain_lo().str() + ", " + f.domain_hi().str() + "] vs [" +
                      g.domain_lo().str() + ", " + g.domain_hi().str() + "]");
  }
}

Overlay overlay(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  require_same_domain(f, g);
  Overlay o;
  o.breaks.push_back(f.breaks().front());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.piece_count() && j < g.piece_count()) {
    const AlgebraicReal& fe = f.breaks()[i + 1];
    const AlgebraicReal& ge = g.breaks()[j + 1];
    o.pieces.emplace_back(i, j);
    auto c = fe.same_representation(ge) ? std::strong_ordering::equal : alg_compare(fe, ge);
    if (c < 0) {
      o.breaks.push_back(fe);
      ++i;
    } else if (c > 0) {
      o.breaks.push_back(ge);
      ++j;
    } else {
      o.breaks.push_back(fe);
      ++i;
      ++j;
    }
  }
  return o;
}

template <class Op>
PiecewiseFunction pointwise(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget, Op op) {
  Overlay o = overlay(f, g);
  std::vector<Polynomial> pieces;
  pieces.reserve(o.pieces.size());
  for (auto [i, j] : o.pieces) {
    pieces.push_back(op(f.pieces()[i], g.pieces()[j]));
    budget.check(pieces.back());
  }
  return PiecewiseFunction::canonical(f.domain_lo(), f.domain_hi(), std::move(o.breaks), std::move(pieces));
}

// Roots of p strictly inside (lo, hi), ascending.
const Rational kBreakWidth(1, 1 << 24);

struct AlgLess {
  bool operator()(const AlgebraicReal& a, const AlgebraicReal& b) const { return a < b; }
};

// Equal breakpoints found from different polynomials share one
// representation, so later comparisons between them are immediate.
AlgebraicReal canonical_break(AlgebraicReal r) {
  thread_local std::set<AlgebraicReal, AlgLess> seen;
  if (seen.size() > (1u << 15)) seen.clear();
  auto [it, fresh] = seen.insert(std::move(r));
  return *it;
}

std::vector<AlgebraicReal> interior_roots(const Polynomial& p, const AlgebraicReal& lo, const AlgebraicReal& hi,
                                          const Budget& budget) {
  std::vector<AlgebraicReal> out;
  if (p.degree() < 1) return out;
  if (p.degree() == 1) {
    AlgebraicReal r(-p.coeff(0) / p.coeff(1));
    if (lo < r && r < hi) out.push_back(std::move(r));
    return out;
  }
  if (num::descartes_variations(p, lo.lower(), hi.upper()) == 0) return out;
  for (auto& r : num::isolate_roots(p, lo.lower(), hi.upper(), budget)) {
    r = r.refined(kBreakWidth);
    if (lo < r && r < hi) out.push_back(canonical_break(std::move(r)));
  }
  return out;
}

}  // namespace

PiecewiseFunction PiecewiseFunction::canonical(Rational a, Rational b, std::vector<AlgebraicReal> breaks,
                                               std::vector<Polynomial> pieces) {
  PiecewiseFunction f;
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  f.breaks_.reserve(breaks.size());
  f.pieces_.reserve(pieces.size());
  f.breaks_.push_back(std::move(breaks.front()));
  f.pieces_.push_back(std::move(pieces.front()));
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    if (pieces[k] == f.pieces_.back()) continue;
    f.breaks_.push_back(std::move(breaks[k]));
    f.pieces_.push_back(std::move(pieces[k]));
  }
  f.breaks_.push_back(std::move(breaks.back()));
  return f;
}

PiecewiseFunction PiecewiseFunction::from_parts(std::vector<AlgebraicReal> breaks, std::vector<Polynomial> pieces) {
  if (breaks.size() < 2) throw DomainError("piecewise function needs at least two breakpoints");
  if (pieces.size() + 1 != breaks.size()) throw DomainError("need exactly one piece per breakpoint gap");
  if (!breaks.front().is_rational() || !breaks.back().is_rational())
    throw DomainError("domain endpoints must be rational");
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (!(breaks[k] < breaks[k + 1])) throw DomainError("breakpoints must be strictly ascending");
  }
  for (std::size_t k = 1; k + 1 < breaks.size(); ++k) {
    if (num::alg_sign_at(pieces[k - 1] - pieces[k], breaks[k]) != 0)
      throw DomainError("discontinuity at breakpoint " + breaks[k].str());
  }
  Rational a = breaks.front().rational_value();
  Rational b = breaks.back().rational_value();
  return canonical(std::move(a), std::move(b), std::move(breaks), std::move(pieces));
}

PiecewiseFunction PiecewiseFunction::polynomial(const Rational& a, const Rational& b, Polynomial p) {
  if (!(a < b)) throw DomainError("domain must satisfy a < b");
  return canonical(a, b, {AlgebraicReal(a), AlgebraicReal(b)}, {std::move(p)});
}

PiecewiseFunction PiecewiseFunction::constant(const Rational& a, const Rational& b, const Rational& c) {
  return polynomial(a, b, Polynomial::constant(c));
}

PiecewiseFunction PiecewiseFunction::linear_interpolant(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("interpolant needs matching xs/ys, at least two");
  std::vector<AlgebraicReal> breaks;
  std::vector<Polynomial> pieces;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (!(xs[k] < xs[k + 1])) throw DomainError("interpolation nodes must be strictly ascending");
    Rational slope = (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]);
    pieces.push_back(Polynomial::linear(ys[k] - slope * xs[k], slope));
    breaks.emplace_back(xs[k]);
  }
  breaks.emplace_back(xs.back());
  return canonical(xs.front(), xs.back(), std::move(breaks), std::move(pieces));
}

int PiecewiseFunction::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

bool PiecewiseFunction::all_breaks_rational() const {
  return std::all_of(breaks_.begin(), breaks_.end(), [](const AlgebraicReal& r) { return r.is_rational(); });
}

PiecewiseFunction pw_add(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget) {
  return pointwise(f, g, budget, [](const Polynomial& p, const Polynomial& q) { return p + q; });
}

PiecewiseFunction pw_sub(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget) {
  return pointwise(f, g, budget, [](const Polynomial& p, const Polynomial& q) { return p - q; });
}

PiecewiseFunction pw_mul(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget) {
  return pointwise(f, g, budget, [](const Polynomial& p, const Polynomial& q) { return p * q; });
}

PiecewiseFunction pw_scale(const Rational& c, const PiecewiseFunction& f) {
  if (c.is_zero()) return PiecewiseFunction::constant(f.domain_lo(), f.domain_hi(), Rational(0));
  std::vector<Polynomial> pieces;
  pieces.reserve(f.piece_count());
  for (const auto& p : f.pieces()) pieces.push_back(c * p);
  return PiecewiseFunction::canonical(f.domain_lo(), f.domain_hi(), f.breaks(), std::move(pieces));
}

namespace {

struct SplitKey {
  Polynomial p;
  AlgebraicReal lo, hi;

  bool operator==(const SplitKey& o) const {
    return p == o.p && lo.same_representation(o.lo) && hi.same_representation(o.hi);
  }
};

struct SplitKeyHash {
  std::size_t operator()(const SplitKey& k) const noexcept {
    std::size_t h = k.p.hash();
    for (const Rational* r : {&k.lo.lower(), &k.lo.upper(), &k.hi.lower(), &k.hi.upper()}) {
      h ^= r->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

SignSplit split_by_sign(const Polynomial& p, const AlgebraicReal& lo, const AlgebraicReal& hi, const Budget& budget) {
  budget.check(p);
  thread_local std::unordered_map<SplitKey, SignSplit, SplitKeyHash> cache;
  SplitKey key{p, lo, hi};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() > (1u << 15)) cache.clear();
  SignSplit s;
  s.cuts = interior_roots(p, lo, hi, budget);
  const AlgebraicReal* left = &lo;
  for (std::size_t k = 0; k <= s.cuts.size(); ++k) {
    const AlgebraicReal& right = k < s.cuts.size() ? s.cuts[k] : hi;
    Rational m = num::rational_between(*left, right);
    s.signs.push_back(p.sign_at(m));
    s.samples.push_back(std::move(m));
    left = &right;
  }
  cache.emplace(std::move(key), s);
  return s;
}

PiecewiseFunction pw_abs(const PiecewiseFunction& f, const Budget& budget) {
  std::vector<AlgebraicReal> breaks{f.breaks().front()};
  std::vector<Polynomial> pieces;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    const Polynomial& p = f.pieces()[k];
    if (p.is_constant()) {
      pieces.push_back(p.is_zero() || p.leading().sign() > 0 ? p : -p);
      breaks.push_back(f.breaks()[k + 1]);
      continue;
    }
    SignSplit s = split_by_sign(p, f.breaks()[k], f.breaks()[k + 1], budget);
    Polynomial neg = -p;
    for (std::size_t j = 0; j < s.signs.size(); ++j) {
      pieces.push_back(s.signs[j] < 0 ? neg : p);
      breaks.push_back(j < s.cuts.size() ? s.cuts[j] : f.breaks()[k + 1]);
    }
  }
  return PiecewiseFunction::canonical(f.domain_lo(), f.domain_hi(), std::move(breaks), std::move(pieces));
}

PiecewiseFunction pw_meet(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget) {
  // f ^ g = (f + g - |f - g|) / 2
  PiecewiseFunction d = pw_abs(pw_sub(f, g, budget), budget);
  return pw_scale(Rational(1, 2), pw_sub(pw_add(f, g, budget), d, budget));
}

PiecewiseFunction pw_join(const PiecewiseFunction& f, const PiecewiseFunction& g, const Budget& budget) {
  PiecewiseFunction d = pw_abs(pw_sub(f, g, budget), budget);
  return pw_scale(Rational(1, 2), pw_add(pw_add(f, g, budget), d, budget));
}

PiecewiseFunction pw_pos(const PiecewiseFunction& f, const Budget& budget) {
  return pw_scale(Rational(1, 2), pw_add(f, pw_abs(f, budget), budget));
}

PiecewiseFunction pw_neg(const PiecewiseFunction& f, const Budget& budget) {
  return pw_scale(Rational(1, 2), pw_sub(pw_abs(f, budget), f, budget));
}

Rational pw_eval(const PiecewiseFunction& f, const Rational& x) {
  if (x < f.domain_lo() || x > f.domain_hi())
    throw DomainError("point " + x.str() + " outside domain [" + f.domain_lo().str() + ", " + f.domain_hi().str() + "]");
  AlgebraicReal ax(x);
  // First piece whose right end is >= x.
  auto it = std::lower_bound(f.breaks().begin() + 1, f.breaks().end(), ax,
                             [](const AlgebraicReal& b, const AlgebraicReal& v) { return b < v; });
  std::size_t k = static_cast<std::size_t>(it - f.breaks().begin()) - 1;
  return f.pieces()[std::min(k, f.piece_count() - 1)](x);
}

bool pw_equal(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  require_same_domain(f, g);
  if (f.piece_count() != g.piece_count()) return false;
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    if (f.pieces()[k] != g.pieces()[k]) return false;
  }
  for (std::size_t k = 1; k + 1 < f.breaks().size(); ++k) {
    if (!f.breaks()[k].same_representation(g.breaks()[k]) && f.breaks()[k] != g.breaks()[k]) return false;
  }
  return true;
}

std::optional<Rational> pw_leq_witness(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  PiecewiseFunction h = pw_sub(g, f);
  for (std::size_t k = 0; k < h.piece_count(); ++k) {
    const Polynomial& p = h.pieces()[k];
    if (p.is_constant()) {
      if (!p.is_zero() && p.leading().sign() < 0) return num::rational_between(h.breaks()[k], h.breaks()[k + 1]);
      continue;
    }
    SignSplit s = split_by_sign(p, h.breaks()[k], h.breaks()[k + 1]);
    for (std::size_t j = 0; j < s.signs.size(); ++j) {
      if (s.signs[j] < 0) return s.samples[j];
    }
  }
  return std::nullopt;
}

bool pw_leq(const PiecewiseFunction& f, const PiecewiseFunction& g) { return !pw_leq_witness(f, g).has_value(); }

long pw_truncate_converges(const PiecewiseFunction& f, const UnitFunction& unit) {
  require_same_domain(f, unit.f);
  PiecewiseFunction zero = pw_scale(Rational(0), f);
  if (!pw_leq(zero, f)) throw DomainError("truncation requires f >= 0");
  auto truncates = [&](long n) { return pw_equal(pw_meet(f, pw_scale(Rational(n), unit.f)), f); };
  if (f.is_zero()) return 0;
  long hi = 1;
  while (!truncates(hi)) {
    if (hi > (1L << 60)) throw BudgetError("truncation search overflow");
    hi *= 2;
  }
  long lo = hi / 2;  // truncates(lo) is false (or lo == 0)
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (truncates(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

PiecewiseFunction pw_compose_pl(const PiecewiseFunction& f, const PiecewiseFunction& phi, const Budget& budget) {
  if (phi.max_degree() > 1) throw DomainError("reparameterization must be piecewise linear");
  if (!phi.all_breaks_rational()) throw DomainError("reparameterization breakpoints must be rational");
  if (pw_eval(phi, phi.domain_lo()) != f.domain_lo() || pw_eval(phi, phi.domain_hi()) != f.domain_hi())
    throw DomainError("reparameterization must map onto the function's domain");
  std::vector<AlgebraicReal> breaks{phi.breaks().front()};
  std::vector<Polynomial> pieces;
  for (std::size_t k = 0; k < phi.piece_count(); ++k) {
    const Polynomial& lin = phi.pieces()[k];
    Rational slope = lin.coeff(1);
    if (slope.sign() <= 0) throw DomainError("reparameterization must be strictly increasing");
    Rational offset = lin.coeff(0);
    Rational t0 = phi.breaks()[k].rational_value();
    Rational t1 = phi.breaks()[k + 1].rational_value();
    AlgebraicReal y0(lin(t0));
    AlgebraicReal y1(lin(t1));
    Rational inv = slope.inverse();
    for (std::size_t j = 0; j < f.piece_count(); ++j) {
      const AlgebraicReal& b0 = f.breaks()[j];
      const AlgebraicReal& b1 = f.breaks()[j + 1];
      if (!(b0 < y1) || !(b1 > y0)) continue;
      pieces.push_back(f.pieces()[j].compose_affine(slope, offset));
      budget.check(pieces.back());
      if (b1 < y1) {
        breaks.push_back(num::affine_image(b1, inv, -offset * inv));
      } else {
        breaks.emplace_back(t1);
      }
    }
  }
  return PiecewiseFunction::canonical(phi.domain_lo(), phi.domain_hi(), std::move(breaks), std::move(pieces));
}

}  // namespace riesz::pw
