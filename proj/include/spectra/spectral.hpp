#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spectra/alpha.hpp"
#include "spectra/digraph.hpp"
#include "spectra/majorization.hpp"

namespace spectra {

enum class Method { power, bisect };

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;  // positive, unit 1-norm
  double residual = 0.0;       // inf-norm of A_alpha x - rho x
  long iterations = 0;
  Method method = Method::power;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Power iteration hit the iteration cap; carries the best estimate.
struct ConvergenceError : NumericError {
  ConvergenceError(const std::string& what, SpectralResult best_)
      : NumericError(what), best(std::move(best_)) {}
  SpectralResult best;
};

/// A psi factor vanished at the sampled abscissa; evaluate at another x.
struct ResamplePoint : NumericError {
  using NumericError::NumericError;
};

/// alpha-spectral radius of a strongly connected digraph by power iteration
/// on A_alpha + I (the unit shift keeps periodic cases primitive), all-ones
/// start vector, convergence on the eigen-residual.
SpectralResult spectral_radius(const Digraph& g, double alpha, double tol = 1e-12,
                               long max_iterations = 1000000);

/// Radius as the largest real root of the characteristic polynomial,
/// bisected after a downward sign scan from hi. The bracket must contain the
/// radius with hi above it (hi >= max outdegree + 1 always works).
double rho_bisect(const Digraph& g, double alpha, double lo, double hi, double tol = 1e-10);

/// Max of spectral_radius over the strong components (trivial components
/// contribute 0). For digraphs the reassignment transforms may disconnect.
double radius_all_components(const Digraph& g, double alpha, double tol = 1e-12);

/// F(K1,K2) = (sum over K1 of d^k)(sum over K2 of d^l).
double F_value(const Composition& K1, const Composition& K2, const EvalPoint& p);

// Closed-form characteristic polynomial evaluators. Each one is checked
// against charpoly_oracle on the explicitly built digraph.

/// Coalescence of k rooted parts given as (phi, psi) value pairs:
/// prod(psi_i) * ((1-k)x + sum(phi_i/psi_i)). Throws ResamplePoint when some
/// psi_i = 0.
double cp_coalescence(const std::vector<std::pair<double, double>>& parts, double x);

/// Two-part coalescence: phiG*psiHv + psiGu*phiH - x*psiGu*psiHv.
double cp_two_coalescence(double phi_g, double psi_gu, double phi_h, double psi_hv, double x);

/// Attach directed cycles of the given lengths at `hub`.
double cp_attach_cycles(const Digraph& g, int hub, const std::vector<int>& lengths,
                        const EvalPoint& p);

/// Attach a cycle of length s at u and one of length t at v.
double cp_two_cycles_two_vertices(const Digraph& g, int u, int v, int s, int t,
                                  const EvalPoint& p);

/// Vertex expansion over the directed cycles through v (lengths >= 2):
/// (x - alpha d_v) psi(G,v) - sum (1-alpha)^|C| psi(G, V(C)).
/// Rejected when the arc count exceeds 25 (cycle enumeration blowup guard).
double cp_schwenk_vertex(const Digraph& g, int v, const EvalPoint& p);

/// (x-a)^(n-2) (x-as)(x-at) - (x-a)^n F(K1,K2), written without the d
/// substitution so it stays a polynomial in x.
double cp_theta(const Composition& K1, const Composition& K2, const EvalPoint& p);

/// (x-2a)^2 (x-a)^(n-2) - (x-2a)(1-a)^(n-1) - (x-a)(1-a)^(n-1) - (1-a)^n.
double cp_theta_hat(int n, const EvalPoint& p);

/// Merge g1 (d-(u1) = d+(v1) = 0) with g2 (d+(u2) = d-(v2) = 0) by
/// identifying u1~u2 and v1~v2.
double cp_merged(const Digraph& g1, int u1, int v1, const Digraph& g2, int u2, int v2,
                 const EvalPoint& p);

/// Deterministic sampler for property points: x uniform in (1.01, 3],
/// alpha uniform in [0, 0.95). Identical streams across platforms for a
/// fixed seed.
class EvalPointSampler {
 public:
  explicit EvalPointSampler(uint64_t seed);
  EvalPoint next();

 private:
  uint64_t state_;
  double unit();  // in [0, 1)
};

}  // namespace spectra
