#include "realclass/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace realclass {

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<Rational>(cols, Rational(0)));
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t = zero_matrix(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (b.size() != inner) throw std::invalid_argument("matrix shape mismatch");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

// Row-reduces m in place; returns the rank and the sign/product bookkeeping
// needed for the determinant.
std::size_t eliminate(Matrix& m, Rational* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      std::swap(m[p], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

Rational determinant(Matrix m) {
  if (!m.empty() && m.size() != m[0].size())
    throw std::invalid_argument("determinant of non-square matrix");
  Rational det;
  if (eliminate(m, &det) < m.size()) return 0;
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = zero_matrix(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    std::swap(aug[p], aug[c]);
    const Rational pivot = aug[c][c];
    for (auto& x : aug[c]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational factor = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= factor * aug[c][j];
    }
  }
  Matrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

bool is_symmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

}  // namespace realclass
