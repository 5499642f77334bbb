#include "riesz/numeric/rational.hpp"

#include <cctype>
#include <ostream>

#include "riesz/errors.hpp"

namespace riesz::num {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_end = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::size_t end = digits_end(i);
  if (end == i) throw ParseError("expected integer", i);
  mpz_class num(std::string(text.substr(i, end - i)));
  if (negative) num = -num;
  mpz_class den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw ParseError("unexpected character in rational", end);
    std::size_t dstart = end + 1;
    std::size_t dend = digits_end(dstart);
    if (dend == dstart) throw ParseError("expected denominator", dstart);
    if (dend != text.size()) throw ParseError("trailing characters in rational", dend);
    den = mpz_class(std::string(text.substr(dstart, dend - dstart)));
    if (den == 0) throw ParseError("zero denominator", dstart);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::bit_length() const {
  std::size_t n = mpz_sizeinbase(q_.get_num_mpz_t(), 2);
  std::size_t d = mpz_sizeinbase(q_.get_den_mpz_t(), 2);
  return n > d ? n : d;
}

std::size_t Rational::hash() const noexcept {
  std::size_t h = mpz_get_ui(q_.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= mpz_get_ui(q_.get_den_mpz_t()) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(sgn(q_) + 1) * 0xbf58476d1ce4e5b9ULL;
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace riesz::num
