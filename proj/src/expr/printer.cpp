#include "riesz/expr/parser.hpp"

namespace riesz::expr {

namespace {

bool is_literal(const Expr& e) { return e.op() == Op::Scale && e.lhs().op() == Op::Unit; }

std::string literal(const Rational& c) { return c.str(); }

std::string print_sum(const Expr& e);
std::string print_prod(const Expr& e);
std::string print_unary(const Expr& e);

std::string print_sum(const Expr& e) {
  if (e.op() != Op::Add) return print_prod(e);
  std::string left = print_sum(e.lhs());
  const Expr& b = e.rhs();
  if (is_literal(b) && b.coeff().sign() < 0) return left + " - " + literal(-b.coeff());
  if (b.op() == Op::Scale && b.coeff() == Rational(-1) && !is_literal(b.lhs()))
    return left + " - " + print_prod(b.lhs());
  return left + " + " + print_prod(b);
}

// Left operand of '*': anything that would re-parse as a bare literal or
// trigger literal folding must be parenthesized.
std::string print_factor_left(const Expr& e) {
  if (e.op() == Op::Mul) return print_prod(e);
  if (e.op() == Op::Scale) return "(" + print_sum(e) + ")";
  return print_unary(e);
}

std::string print_prod(const Expr& e) {
  switch (e.op()) {
    case Op::Mul:
      return print_factor_left(e.lhs()) + "*" + print_unary(e.rhs());
    case Op::Scale: {
      if (is_literal(e)) return literal(e.coeff());
      if (e.coeff() == Rational(-1)) return print_unary(e);
      const Expr& body = e.lhs();
      return literal(e.coeff()) + "*" + (body.op() == Op::Mul ? print_prod(body) : print_unary(body));
    }
    default:
      return print_unary(e);
  }
}

std::string print_unary(const Expr& e) {
  switch (e.op()) {
    case Op::Gen: return e.name();
    case Op::Unit: return "unit";
    case Op::Abs: return "abs(" + print_sum(e.lhs()) + ")";
    case Op::Pos: return "pos(" + print_sum(e.lhs()) + ")";
    case Op::NegPart: return "negp(" + print_sum(e.lhs()) + ")";
    case Op::Meet: return "meet(" + print_sum(e.lhs()) + ", " + print_sum(e.rhs()) + ")";
    case Op::Join: return "join(" + print_sum(e.lhs()) + ", " + print_sum(e.rhs()) + ")";
    case Op::Scale:
      if (is_literal(e)) return literal(e.coeff());
      if (e.coeff() == Rational(-1)) {
        const Expr& x = e.lhs();
        return "-" + (is_literal(x) ? "(" + print_sum(x) + ")" : print_unary(x));
      }
      return "(" + print_sum(e) + ")";
    case Op::Add:
    case Op::Mul:
      return "(" + print_sum(e) + ")";
  }
  return "?";
}

void dump(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Gen: out += "Gen " + e.name(); return;
    case Op::Unit: out += "Unit"; return;
    case Op::Scale:
      out += "Scale(" + e.coeff().str() + ", ";
      dump(e.lhs(), out);
      out += ")";
      return;
    default:
      out += op_name(e.op());
      out += "(";
      dump(e.lhs(), out);
      if (e.rhs()) {
        out += ", ";
        dump(e.rhs(), out);
      }
      out += ")";
  }
}

}  // namespace

std::string print_expr(const Expr& e) { return print_sum(e); }

std::string dump_expr(const Expr& e) {
  std::string out;
  dump(e, out);
  return out;
}

}  // namespace riesz::expr
