#include "spectra/alpha.hpp"

#include <limits>
#include <stdexcept>

namespace spectra {

EvalPoint::EvalPoint(double x_, double alpha_) : x(x_), alpha(alpha_) {
  if (!(alpha_ >= 0.0 && alpha_ < 1.0))
    throw std::invalid_argument("eval point: alpha must be in [0,1)");
  d = (x_ == alpha_) ? std::numeric_limits<double>::quiet_NaN() : (1.0 - alpha_) / (x_ - alpha_);
}

Matrix alpha_matrix(const Digraph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha_matrix: alpha must be in [0,1)");
  Matrix m(g.n);
  const auto deg = g.out_degrees();
  for (int i = 0; i < g.n; ++i) m.at(i, i) = alpha * deg[i];
  for (const auto& [u, v] : g.arcs) m.at(u, v) = 1.0 - alpha;
  return m;
}

Matrix char_matrix(const Digraph& g, double alpha, double x) {
  Matrix m = alpha_matrix(g, alpha);
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = -m.a[i];
  for (int i = 0; i < g.n; ++i) m.at(i, i) += x;
  return m;
}

double charpoly_oracle(const Digraph& g, const EvalPoint& p) {
  return det_lu(char_matrix(g, p.alpha, p.x));
}

double submatrix_det(const Digraph& g, double alpha, const std::vector<int>& drop_rows,
                     const std::vector<int>& drop_cols, double x) {
  if (drop_rows.size() != drop_cols.size())
    throw std::invalid_argument("submatrix_det: row and column deletions must have equal size");
  std::vector<char> rdrop(g.n, 0), cdrop(g.n, 0);
  long sign_sum = 0;
  for (int r : drop_rows) {
    if (r < 0 || r >= g.n) throw std::invalid_argument("submatrix_det: row index out of range");
    if (rdrop[r]) throw std::invalid_argument("submatrix_det: duplicate row index");
    rdrop[r] = 1;
    sign_sum += r;
  }
  for (int c : drop_cols) {
    if (c < 0 || c >= g.n) throw std::invalid_argument("submatrix_det: column index out of range");
    if (cdrop[c]) throw std::invalid_argument("submatrix_det: duplicate column index");
    cdrop[c] = 1;
    sign_sum += c;
  }
  const Matrix full = char_matrix(g, alpha, x);
  const int k = g.n - static_cast<int>(drop_rows.size());
  Matrix sub(k);
  int ri = 0;
  for (int i = 0; i < g.n; ++i) {
    if (rdrop[i]) continue;
    int cj = 0;
    for (int j = 0; j < g.n; ++j) {
      if (cdrop[j]) continue;
      sub.at(ri, cj) = full.at(i, j);
      ++cj;
    }
    ++ri;
  }
  const double minor = det_lu(std::move(sub));
  return (sign_sum % 2 == 0) ? minor : -minor;
}

}  // namespace spectra
