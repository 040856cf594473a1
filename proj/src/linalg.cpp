#include "qfcodes/linalg.hpp"

#include "qfcodes/errors.hpp"

namespace qfcodes {

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw ParameterError("matrix shapes do not compose");
  const std::size_t n = b.empty() ? 0 : b[0].size();
  Matrix c(a.size(), std::vector<Index>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    }
  return c;
}

std::vector<std::size_t> rref(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Index s = f.inv(a[row][col]);
    for (auto& v : a[row]) v = f.mul(v, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Index t = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(t, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

std::size_t rank(const Field& f, Matrix a) { return rref(f, a).size(); }

Matrix nullspace(const Field& f, const Matrix& a, std::size_t cols) {
  Matrix r = a;
  auto pivots = rref(f, r);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Index> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qfcodes
