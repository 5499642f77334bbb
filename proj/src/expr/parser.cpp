#include "riesz/expr/parser.hpp"

#include <cctype>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz::expr {

namespace {

struct Parsed {
  Expr e;
  bool bare_literal = false;
};

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  Expr run() {
    Parsed p = sum();
    skip_ws();
    if (i_ != t_.size()) throw ParseError("unexpected '" + std::string(1, t_[i_]) + "'", i_);
    return p.e;
  }

 private:
  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip_ws();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (i_ >= t_.size()) throw ParseError(std::string("expected '") + c + "', found end of input", i_);
      throw ParseError(std::string("expected '") + c + "'", i_);
    }
  }

  static Parsed negate(Parsed p) {
    if (p.bare_literal) return {constant(-p.e.coeff()), true};
    return {neg(std::move(p.e)), false};
  }

  Parsed sum() {
    Parsed acc = prod();
    for (;;) {
      if (accept('+')) {
        acc = {add(std::move(acc.e), prod().e), false};
      } else if (accept('-')) {
        acc = {add(std::move(acc.e), negate(prod()).e), false};
      } else {
        return acc;
      }
    }
  }

  Parsed prod() {
    Parsed first = unary();
    if (!accept('*')) return first;
    std::vector<Expr> factors{first.e};
    do {
      factors.push_back(unary().e);
    } while (accept('*'));
    std::size_t from = first.bare_literal ? 1 : 0;
    Expr chain = factors[from];
    for (std::size_t k = from + 1; k < factors.size(); ++k) chain = mul(std::move(chain), factors[k]);
    if (first.bare_literal) return {scale(first.e.coeff(), std::move(chain)), false};
    return {std::move(chain), false};
  }

  Parsed unary() {
    if (accept('-')) return negate(unary());
    return atom();
  }

  Parsed atom() {
    skip_ws();
    if (i_ >= t_.size()) throw ParseError("unexpected end of input", i_);
    char c = t_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return {constant(rational()), true};
    if (c == '(') {
      ++i_;
      Parsed inner = sum();
      expect(')');
      return {inner.e, false};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_')) ++i_;
      std::string id(t_.substr(start, i_ - start));
      skip_ws();
      if (i_ < t_.size() && t_[i_] == '(') return {call(id, start), false};
      if (id == "unit") return {unit(), false};
      return {gen(std::move(id)), false};
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  Expr call(const std::string& fn, std::size_t at) {
    int arity;
    if (fn == "abs" || fn == "pos" || fn == "negp") {
      arity = 1;
    } else if (fn == "meet" || fn == "join") {
      arity = 2;
    } else {
      throw ParseError("unknown function '" + fn + "'", at);
    }
    expect('(');
    Expr a = sum().e;
    Expr b;
    if (arity == 2) {
      expect(',');
      b = sum().e;
    }
    expect(')');
    if (fn == "abs") return abs(a);
    if (fn == "pos") return pos(a);
    if (fn == "negp") return negp(a);
    if (fn == "meet") return meet(a, b);
    return join(a, b);
  }

  num::Rational rational() {
    std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    std::size_t save = i_;
    skip_ws();
    if (i_ < t_.size() && t_[i_] == '/') {
      ++i_;
      skip_ws();
      std::size_t dstart = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      if (dstart == i_) throw ParseError("expected denominator", dstart);
      std::string text = std::string(t_.substr(start, save - start)) + "/" + std::string(t_.substr(dstart, i_ - dstart));
      try {
        return num::Rational::parse(text);
      } catch (const ParseError&) {
        throw ParseError("zero denominator", dstart);
      }
    }
    i_ = save;
    return num::Rational::parse(t_.substr(start, save - start));
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace riesz::expr
