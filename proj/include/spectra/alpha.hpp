#pragma once

#include <vector>

#include "spectra/digraph.hpp"
#include "spectra/matrix.hpp"

namespace spectra {

/// Evaluation context (x, alpha) with the substitution d = (1-alpha)/(x-alpha)
/// that compresses the closed forms. d is NaN when x == alpha; formulas that
/// never divide by (x-alpha) stay valid there.
struct EvalPoint {
  double x;
  double alpha;
  double d;

  EvalPoint(double x_, double alpha_);
};

/// A_alpha(G) = alpha*D(G) + (1-alpha)*A(G), outdegree diagonal.
/// alpha must lie in [0, 1).
Matrix alpha_matrix(const Digraph& g, double alpha);

/// x*I - A_alpha(G).
Matrix char_matrix(const Digraph& g, double alpha, double x);

/// det(x*I - A_alpha(G)) via LU. The reference every closed form is checked
/// against.
double charpoly_oracle(const Digraph& g, const EvalPoint& p);

/// Cofactor-style minor of x*I - A_alpha(G): delete rows `drop_rows` and
/// columns `drop_cols`, take the determinant, and apply the Laplace sign
/// (-1)^(sum of dropped row indices + sum of dropped column indices).
/// Equal index sets give the plain principal minor; a single row/column pair
/// gives the classical cofactor. |drop_rows| must equal |drop_cols|.
double submatrix_det(const Digraph& g, double alpha, const std::vector<int>& drop_rows,
                     const std::vector<int>& drop_cols, double x);

}  // namespace spectra
