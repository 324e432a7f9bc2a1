#pragma once
#include <vector>

#include "intx.hpp"

namespace ellrank {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
int matrix_rank(Matrix<K> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == K(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == K(0)) continue;
      K f = m[i][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return (int)rank;
}

template <class K>
K matrix_det(Matrix<K> m) {
  size_t n = m.size();
  K det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == K(0)) ++piv;
    if (piv == n) return K(0);
    if (piv != col) {
      std::swap(m[col], m[piv]);
      det = -det;
    }
    det = det * m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == K(0)) continue;
      K f = m[i][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace ellrank
