#include "hcx/linalg.hpp"

#include <stdexcept>

namespace hcx::linalg {

Matrix rref(Matrix m, std::size_t cols, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (!m[r][c].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational piv = m[row][c];
    for (auto& v : m[row]) {
      if (!v.is_zero()) v /= piv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) {
        if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
      }
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  m.resize(row);
  return m;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, cols, &piv);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols) {
  std::vector<std::size_t> keep;
  Matrix acc;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc.push_back(m[i]);
    if (rank(acc, cols) == acc.size()) {
      keep.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return keep;
}

std::optional<Vector> solve_any(const Matrix& a, const Vector& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_any: dimension mismatch");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> piv;
  Matrix r = rref(std::move(aug), cols + 1, &piv);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r[i][cols];
  return x;
}

std::optional<Vector> solve_square(const Matrix& a, const Vector& b) {
  std::size_t n = a.size();
  if (rank(a, n) != n) return std::nullopt;
  return solve_any(a, b, n);
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

Vector multiply(const Matrix& m, const Vector& x) {
  Vector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, x));
  return out;
}

bool in_row_space(const Matrix& m, const Vector& v, std::size_t cols) {
  Matrix ext = m;
  ext.push_back(v);
  return rank(ext, cols) == rank(m, cols);
}

}  // namespace hcx::linalg
