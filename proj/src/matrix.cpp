#include "spectra/matrix.hpp"

#include <cmath>
#include <utility>

namespace spectra {

double det_lu(Matrix m) {
  const int n = m.n;
  if (n == 0) return 1.0;
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::fabs(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::fabs(m.at(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      sign = -sign;
    }
    const double pivot = m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = m.at(r, col) / pivot;
      if (f == 0.0) continue;
      for (int j = col + 1; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  double det = sign;
  for (int i = 0; i < n; ++i) det *= m.at(i, i);
  return det;
}

}  // namespace spectra
