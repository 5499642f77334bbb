#include "riesz/numeric/polynomial.hpp"

#include <cctype>
#include <ostream>

#include "riesz/errors.hpp"
#include "riesz/numeric/budget.hpp"

namespace riesz::num {

void Budget::check(const Polynomial& p) const {
  if (p.degree() > degree_cap) {
    throw BudgetError("polynomial degree " + std::to_string(p.degree()) + " exceeds cap " +
                      std::to_string(degree_cap));
  }
  if (p.max_coeff_bits() > bits_cap) {
    throw BudgetError("coefficient bit-length " + std::to_string(p.max_coeff_bits()) +
                      " exceeds cap " + std::to_string(bits_cap));
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i, 5) != "poly[") throw ParseError("expected 'poly['", i);
  i += 5;
  std::vector<Rational> coeffs;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ']' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      try {
        coeffs.push_back(Rational::parse(text.substr(start, i - start)));
      } catch (const ParseError& e) {
        throw ParseError("bad coefficient", start + e.offset());
      }
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated polynomial", i);
      if (text[i] == ']') {
        ++i;
        break;
      }
      if (text[i] != ',') throw ParseError("expected ',' or ']'", i);
      ++i;
    }
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after polynomial", i);
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::operator()(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return Rational(std::move(acc));
}

int Polynomial::sign_at(const Rational& x) const {
  for (const auto& c : c_) {
    if (c.raw().get_den() != 1) return (*this)(x).sign();
  }
  if (c_.empty()) return 0;
  // Homogenized Horner over Z: sign(p(n/d)) = sign(sum c_i n^i d^(deg-i)).
  const mpz_class& n = x.raw().get_num();
  const mpz_class& d = x.raw().get_den();
  mpz_class acc = c_.back().raw().get_num();
  mpz_class dpow = d;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    acc *= n;
    if (!c_[k].is_zero()) acc += c_[k].raw().get_num() * dpow;
    if (k > 0) dpow *= d;
  }
  return sgn(acc);
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(const Rational& alpha, const Rational& beta) const {
  Polynomial inner = linear(beta, alpha);
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(c_.size());
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_class v = c.raw().get_num() * (den_lcm / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return Polynomial(std::move(out));
}

std::size_t Polynomial::max_coeff_bits() const {
  std::size_t m = 0;
  for (const auto& c : c_) m = std::max(m, c.bit_length());
  return m;
}

std::string Polynomial::str() const {
  std::string s = "poly[";
  if (c_.empty()) s += "0";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + "]";
}

std::size_t Polynomial::hash() const noexcept {
  std::size_t h = c_.size();
  for (const auto& c : c_) h = h * 1000003u ^ c.hash();
  return h;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.c_.size()) r[i] += a.c_[i];
    if (i < b.c_.size()) r[i] += b.c_[i];
  }
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> r;
  r.reserve(p.c_.size());
  for (const auto& c : p.c_) r.push_back(-c);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(r.size());
  for (auto& v : r) out.emplace_back(std::move(v));
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return {};
  std::vector<Rational> r;
  r.reserve(p.c_.size());
  for (const auto& x : p.c_) r.push_back(c * x);
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  int db = b.degree();
  std::vector<mpq_class> rem;
  for (const auto& c : a.coefficients()) rem.push_back(c.raw());
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
  mpq_class lead_inv = 1 / b.leading().raw();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)].raw();
  }
  std::vector<Rational> qv, rv;
  for (auto& v : quot) qv.emplace_back(std::move(v));
  for (int i = 0; i < db; ++i) rv.emplace_back(std::move(rem[static_cast<std::size_t>(i)]));
  return {Polynomial(std::move(qv)), Polynomial(std::move(rv))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial squarefree(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("zero input");
  if (p.degree() <= 0) return Polynomial::constant(1);
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.primitive();
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  Rational lead = p.leading().abs();
  auto cs = p.coefficients();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) m = max(m, cs[i].abs() / lead);
  return m + Rational(1);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace riesz::num
