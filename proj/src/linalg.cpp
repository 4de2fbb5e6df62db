#include "nestcone/linalg.hpp"

namespace nestcone {

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(const Mat& m) {
  Mat w = m;
  return rref(w).size();
}

Mat nullspace(const Mat& m, size_t cols) {
  Mat w = m;
  auto piv = rref(w);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  Mat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -w[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Mat& a, const Vec& b, size_t cols) {
  Mat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return {SolveStatus::Inconsistent, {}};
  Vec x = zeros(cols);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
  return {piv.size() == cols ? SolveStatus::Unique : SolveStatus::UnderDetermined, x};
}

std::optional<Mat> inverse(const Mat& m) {
  size_t n = m.size();
  Mat aug = m;
  for (size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace nestcone
