#include "riesz/pwfun/literal.hpp"

#include <cctype>

#include "riesz/errors.hpp"

namespace riesz::pw {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view t) : t_(t) {}

  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool peek(std::string_view s) {
    skip_ws();
    return t_.substr(i_, s.size()) == s;
  }
  void expect(std::string_view s) {
    if (!peek(s)) throw ParseError("expected '" + std::string(s) + "'", i_);
    i_ += s.size();
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    i_ += s.size();
    return true;
  }
  Rational rational() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[i_])) || t_[i_] == '-' ||
                              t_[i_] == '+' || t_[i_] == '/'))
      ++i_;
    try {
      return Rational::parse(t_.substr(start, i_ - start));
    } catch (const ParseError& e) {
      throw ParseError("bad rational", start + e.offset());
    }
  }
  // Balanced `poly[...]` substring.
  Polynomial polynomial() {
    skip_ws();
    std::size_t start = i_;
    expect("poly[");
    while (i_ < t_.size() && t_[i_] != ']') ++i_;
    expect("]");
    try {
      return Polynomial::parse(t_.substr(start, i_ - start));
    } catch (const ParseError& e) {
      throw ParseError("bad polynomial", start + e.offset());
    }
  }
  std::vector<Rational> rational_list() {
    std::vector<Rational> out;
    expect("[");
    if (accept("]")) return out;
    do {
      out.push_back(rational());
    } while (accept(","));
    expect("]");
    return out;
  }
  AlgebraicReal algebraic() {
    if (!peek("alg{")) return AlgebraicReal(rational());
    std::size_t start = i_;
    expect("alg{");
    expect("poly");
    expect("=");
    Polynomial p(rational_list());
    expect(",");
    expect("lo");
    expect("=");
    Rational lo = rational();
    expect(",");
    expect("hi");
    expect("=");
    Rational hi = rational();
    expect("}");
    try {
      return AlgebraicReal::from_isolating_interval(p, lo, hi);
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid algebraic number: ") + e.what(), start);
    }
  }
  void finish() {
    skip_ws();
    if (i_ != t_.size()) throw ParseError("trailing characters", i_);
  }
  std::size_t pos() const { return i_; }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

AlgebraicReal parse_algebraic(std::string_view text) {
  Cursor c(text);
  AlgebraicReal a = c.algebraic();
  c.finish();
  return a;
}

PiecewiseFunction parse_pw(std::string_view text) {
  Cursor c(text);
  c.expect("pw{");
  c.expect("domain");
  c.expect("=");
  std::vector<Rational> dom = c.rational_list();
  if (dom.size() != 2) throw ParseError("domain needs two endpoints", c.pos());
  c.expect(";");
  c.expect("breaks");
  c.expect("=");
  c.expect("[");
  std::vector<AlgebraicReal> breaks;
  do {
    breaks.push_back(c.algebraic());
  } while (c.accept(","));
  c.expect("]");
  c.expect(";");
  c.expect("pieces");
  c.expect("=");
  c.expect("[");
  std::vector<Polynomial> pieces;
  do {
    pieces.push_back(c.polynomial());
  } while (c.accept(","));
  c.expect("]");
  c.expect("}");
  std::size_t end = c.pos();
  c.finish();
  if (!breaks.front().is_rational() || breaks.front().rational_value() != dom[0] || !breaks.back().is_rational() ||
      breaks.back().rational_value() != dom[1])
    throw ParseError("first and last breakpoints must equal the domain endpoints", end);
  try {
    return PiecewiseFunction::from_parts(std::move(breaks), std::move(pieces));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid piecewise function: ") + e.what(), end);
  }
}

std::string format_pw(const PiecewiseFunction& f) {
  std::string s = "pw{domain=[" + f.domain_lo().str() + ", " + f.domain_hi().str() + "]; breaks=[";
  for (std::size_t k = 0; k < f.breaks().size(); ++k) {
    if (k) s += ", ";
    s += f.breaks()[k].str();
  }
  s += "]; pieces=[";
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    if (k) s += ", ";
    s += f.pieces()[k].str();
  }
  return s + "]}";
}

}  // namespace riesz::pw
