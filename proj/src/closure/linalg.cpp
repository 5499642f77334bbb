#include "riesz/closure/linalg.hpp"

#include <algorithm>

#include "riesz/errors.hpp"

namespace riesz::closure {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Row> solve(const Matrix& a, const Row& b) {
  if (a.size() != b.size()) throw DomainError("solve: row count mismatch");
  const std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Row c(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug[i][n];
  return c;
}

std::optional<Row> null_vector(const Matrix& a, std::size_t cols) {
  Matrix m = a;
  auto pivots = rref(m);
  std::size_t free = 0;
  while (free < cols && std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  if (free == cols) return std::nullopt;
  Row c(cols, Rational(0));
  c[free] = Rational(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = -m[i][free];
  return c;
}

}  // namespace riesz::closure
