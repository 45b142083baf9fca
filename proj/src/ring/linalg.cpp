#include "coiso/ring/linalg.hpp"

#include <stdexcept>

namespace coiso {

std::vector<std::vector<Rational>> nullspace(RationalMatrix a, int cols) {
  std::vector<int> pivot_col;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (int k = c; k < cols; ++k) a[row][k] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || is_zero(a[r][c])) continue;
      const Rational f = a[r][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

PolyMatrix zero_matrix(int rows, int cols) { return PolyMatrix(rows, std::vector<Polynomial>(cols)); }

PolyMatrix identity_matrix(int n) {
  PolyMatrix m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Polynomial(1);
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  PolyMatrix c = zero_matrix(static_cast<int>(a.size()), static_cast<int>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      PolynomialAccumulator acc;
      for (std::size_t k = 0; k < inner; ++k) acc.add_product(a[i][k], b[k][j]);
      c[i][j] = acc.take();
    }
  }
  return c;
}

PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b.at(i).at(j);
  return c;
}

PolyMatrix scale(const PolyMatrix& a, const Rational& s) {
  PolyMatrix c = a;
  for (auto& row : c)
    for (auto& e : row) e *= s;
  return c;
}

namespace {

Polynomial minor_det(const PolyMatrix& a, std::vector<int>& rows, std::vector<int>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return a[rows[0]][cols[0]];
  PolynomialAccumulator acc;
  const int r = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& e = a[r][cols[j]];
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    acc.add_product(e, minor_det(a, sub_rows, sub_cols), j % 2 ? -1 : 1);
  }
  return acc.take();
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
  std::vector<int> rows(a.size()), cols(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) throw std::invalid_argument("determinant of a non-square matrix");
    rows[i] = cols[i] = static_cast<int>(i);
  }
  return minor_det(a, rows, cols);
}

PolyMatrix adjugate(const PolyMatrix& a) {
  const int n = static_cast<int>(a.size());
  PolyMatrix adj = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Polynomial m = minor_det(a, rows, cols);
      adj[i][j] = (i + j) % 2 ? -m : m;
    }
  }
  return adj;
}

PolyMatrix substitute(const PolyMatrix& a, const std::vector<std::optional<Polynomial>>& images) {
  PolyMatrix c = a;
  for (auto& row : c)
    for (auto& e : row) e = e.substitute(images);
  return c;
}

bool is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

}  // namespace coiso
