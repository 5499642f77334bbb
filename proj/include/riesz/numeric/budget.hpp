#pragma once

#include <cstddef>

namespace riesz::num {

class Polynomial;

/// Growth caps. Exceeding one raises BudgetError instead of stalling.
struct Budget {
  int degree_cap = 64;
  std::size_t bits_cap = 4096;

  void check(const Polynomial& p) const;
};

}  // namespace riesz::num
