#include "toriclogk/linalg.hpp"

#include <utility>

namespace toriclogk::linalg {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

namespace {

Matrix difference_rows(const std::vector<const RatVec*>& points) {
  Matrix rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    rows.push_back((*points[i] - *points[0]).coords());
  }
  return rows;
}

}  // namespace

std::size_t affine_rank(const std::vector<const RatVec*>& points) {
  if (points.empty()) return 0;
  return rank(difference_rows(points)) + 1;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

RatVec primitive_integer(const RatVec& v) {
  Integer lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : v) {
    Integer x = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

std::optional<RatVec> hyperplane_normal(const std::vector<const RatVec*>& points, std::size_t n) {
  if (points.empty()) return std::nullopt;
  Matrix rows = difference_rows(points);
  if (rows.empty()) rows.push_back(std::vector<Rational>(n));
  const auto pivots = rref(rows);
  if (pivots.size() + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t pi = 0; free_col < n; ++free_col) {
    if (pi < pivots.size() && pivots[pi] == free_col) {
      ++pi;
      continue;
    }
    break;
  }
  RatVec normal(n);
  normal[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) normal[pivots[r]] = -rows[r][free_col];
  return primitive_integer(normal);
}

}  // namespace toriclogk::linalg
