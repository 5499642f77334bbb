#include "riesz/numeric/sturm.hpp"

#include <algorithm>

#include "riesz/errors.hpp"

namespace riesz::num {

namespace {

// Primitive form scaled by a positive constant (keeps the sign of q).
Polynomial scaled_down(const Polynomial& q) {
  Polynomial p = q.primitive();
  return q.leading().sign() > 0 ? p : -p;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("zero input");
  chain_.push_back(scaled_down(p));
  if (p.degree() == 0) return;
  chain_.push_back(scaled_down(p.derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(scaled_down(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

void taylor_shift(std::vector<mpz_class>& a, const mpz_class& c) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  }
}

}  // namespace

int descartes_variations(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("zero input");
  // lo = A / D and hi - lo = B / D; work with D^d p(y / D), which has
  // integer coefficients once p does.
  Polynomial q = p.primitive();
  const std::size_t n = q.coefficients().size();
  mpz_class den = lcm(mpz_class(lo.raw().get_den()), mpz_class((hi - lo).raw().get_den()));
  mpz_class A = lo.raw().get_num() * (den / lo.raw().get_den());
  Rational w = hi - lo;
  mpz_class B = w.raw().get_num() * (den / w.raw().get_den());
  std::vector<mpz_class> a(n);
  mpz_class dk = 1;
  for (std::size_t k = n; k-- > 0;) {
    a[k] = q.coefficients()[k].raw().get_num() * dk;
    dk *= den;
  }
  // r(A + B x), then x^d r(1/x), then shift by 1.
  taylor_shift(a, A);
  mpz_class bk = 1;
  for (auto& c : a) {
    c *= bk;
    bk *= B;
  }
  std::reverse(a.begin(), a.end());
  taylor_shift(a, 1);
  int v = 0, last = 0;
  for (const auto& c : a) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace riesz::num
