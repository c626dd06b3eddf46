#pragma once

#include <vector>

namespace spectra {

// Square dense matrix, row-major.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Determinant by LU with partial pivoting (largest |pivot|, lowest row index
// on ties), sign accumulated from row swaps. A zero pivot column makes the
// determinant exactly 0. Deterministic for identical inputs.
double det_lu(Matrix m);

}  // namespace spectra
