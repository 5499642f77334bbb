#pragma once

#include <string>
#include <string_view>

#include "riesz/pwfun/piecewise.hpp"

namespace riesz::pw {

/// `pw{domain=[a,b]; breaks=[r0,...,rk]; pieces=[poly[...],...]}`. Breaks may
/// be rationals or `alg{poly=[...], lo=l, hi=h}`.
PiecewiseFunction parse_pw(std::string_view text);

std::string format_pw(const PiecewiseFunction& f);

/// Parses `alg{poly=[c0, ...], lo=l, hi=h}` or a plain rational.
AlgebraicReal parse_algebraic(std::string_view text);

}  // namespace riesz::pw
