#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace spectra {

SpectralResult spectral_radius(const Digraph& g, double alpha, double tol, long max_iterations) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("spectral_radius: alpha must be in [0,1)");
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (!is_strongly_connected(g))
    throw std::invalid_argument("spectral_radius: digraph is not strongly connected");

  const int n = g.n;
  const auto adj = g.out_adj();
  const auto deg = g.out_degrees();
  std::vector<double> x(n, 1.0 / n), y(n);
  double lambda = 1.0, residual = 0.0;
  for (long it = 1; it <= max_iterations; ++it) {
    // y = (A_alpha + I) x
    for (int i = 0; i < n; ++i) {
      double acc = (1.0 + alpha * deg[i]) * x[i];
      for (int j : adj[i]) acc += (1.0 - alpha) * x[j];
      y[i] = acc;
    }
    lambda = std::accumulate(y.begin(), y.end(), 0.0);  // x has unit 1-norm
    residual = 0.0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::fabs(y[i] - lambda * x[i]));
    for (int i = 0; i < n; ++i) x[i] = y[i] / lambda;
    if (residual <= tol)
      return SpectralResult{lambda - 1.0, x, residual, it, Method::power};
  }
  SpectralResult best{lambda - 1.0, x, residual, max_iterations, Method::power};
  throw ConvergenceError("spectral_radius: no convergence after " +
                             std::to_string(max_iterations) + " iterations (residual " +
                             std::to_string(residual) + ")",
                         std::move(best));
}

double rho_bisect(const Digraph& g, double alpha, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("rho_bisect: empty bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("rho_bisect: tol must be positive");
  auto f = [&](double x) { return charpoly_oracle(g, EvalPoint(x, alpha)); };
  if (f(hi) <= 0.0)
    throw NumericError("rho_bisect: polynomial not positive at bracket top");

  // Walk down from hi; the first sign change brackets the largest real root.
  double a = lo, b = hi;
  bool found = false;
  for (int steps : {256, 8192}) {
    const double step = (hi - lo) / steps;
    double prev = hi;
    for (int k = 1; k <= steps; ++k) {
      const double cur = hi - k * step;
      if (f(cur) <= 0.0) {
        a = cur;
        b = prev;
        found = true;
        break;
      }
      prev = cur;
    }
    if (found) break;
  }
  if (!found) throw NumericError("rho_bisect: no sign change in bracket");

  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (f(mid) <= 0.0)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

double radius_all_components(const Digraph& g, double alpha, double tol) {
  double best = 0.0;
  for (const auto& comp : strong_components(g)) {
    if (comp.size() < 2) continue;  // single vertex without a loop: eigenvalue 0
    const Digraph sub = induced_subdigraph(g, comp);
    best = std::max(best, spectral_radius(sub, alpha, tol).rho);
  }
  return best;
}

double F_value(const Composition& K1, const Composition& K2, const EvalPoint& p) {
  double s1 = 0.0, s2 = 0.0;
  for (int k : K1.parts()) s1 += std::pow(p.d, k);
  for (int l : K2.parts()) s2 += std::pow(p.d, l);
  return s1 * s2;
}

double cp_coalescence(const std::vector<std::pair<double, double>>& parts, double x) {
  if (parts.empty()) throw std::invalid_argument("cp_coalescence: needs at least one part");
  if (parts.size() == 1) return parts[0].first;
  double prod = 1.0, sum = 0.0;
  for (const auto& [phi, psi] : parts) {
    if (psi == 0.0) throw ResamplePoint("cp_coalescence: psi vanished, resample x");
    prod *= psi;
    sum += phi / psi;
  }
  const double k = static_cast<double>(parts.size());
  return prod * ((1.0 - k) * x + sum);
}

double cp_two_coalescence(double phi_g, double psi_gu, double phi_h, double psi_hv, double x) {
  return phi_g * psi_hv + psi_gu * phi_h - x * psi_gu * psi_hv;
}

double cp_attach_cycles(const Digraph& g, int hub, const std::vector<int>& lengths,
                        const EvalPoint& p) {
  if (hub < 0 || hub >= g.n) throw std::invalid_argument("cp_attach_cycles: hub out of range");
  for (int len : lengths)
    if (len < 2) throw std::invalid_argument("cp_attach_cycles: cycle lengths must be >= 2");
  const double xa = p.x - p.alpha;
  int total = 0;
  for (int len : lengths) total += len - 1;
  const double phi = charpoly_oracle(g, p);
  const double psi = submatrix_det(g, p.alpha, {hub}, {hub}, p.x);
  double attach = lengths.size() * p.alpha * std::pow(xa, total);
  for (int len : lengths)
    attach += std::pow(1.0 - p.alpha, len) * std::pow(xa, total - (len - 1));
  return std::pow(xa, total) * phi - psi * attach;
}

double cp_two_cycles_two_vertices(const Digraph& g, int u, int v, int s, int t,
                                  const EvalPoint& p) {
  if (u == v) throw std::invalid_argument("cp_two_cycles: u and v must be distinct");
  if (s < 2 || t < 2) throw std::invalid_argument("cp_two_cycles: cycle lengths must be >= 2");
  const double xa = p.x - p.alpha, oa = 1.0 - p.alpha, al = p.alpha;
  const double f0 = charpoly_oracle(g, p);
  const double f1 = submatrix_det(g, p.alpha, {u}, {u}, p.x);
  const double f2 = submatrix_det(g, p.alpha, {v}, {v}, p.x);
  const double f3 = submatrix_det(g, p.alpha, {u, v}, {u, v}, p.x);
  return std::pow(xa, s + t - 2) * (al * al * f3 - al * (f1 + f2) + f0) +
         std::pow(xa, t - 1) * std::pow(oa, s) * (al * f3 - f1) +
         std::pow(xa, s - 1) * std::pow(oa, t) * (al * f3 - f2) + std::pow(oa, s + t) * f3;
}

namespace {

void cycles_through(const Digraph& g, int v, std::vector<std::vector<int>>& out) {
  const auto adj = g.out_adj();
  std::vector<char> on_path(g.n, 0);
  std::vector<int> path{v};
  on_path[v] = 1;
  std::function<void(int)> dfs = [&](int w) {
    for (int z : adj[w]) {
      if (z == v) {
        std::vector<int> cyc = path;
        std::sort(cyc.begin(), cyc.end());
        out.push_back(std::move(cyc));
      } else if (!on_path[z]) {
        on_path[z] = 1;
        path.push_back(z);
        dfs(z);
        path.pop_back();
        on_path[z] = 0;
      }
    }
  };
  dfs(v);
}

}  // namespace

double cp_schwenk_vertex(const Digraph& g, int v, const EvalPoint& p) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("cp_schwenk_vertex: vertex out of range");
  if (g.size() > 25)
    throw std::invalid_argument("cp_schwenk_vertex: arc count above the enumeration guard (25)");
  const int dv = g.out_degrees()[v];
  double acc = (p.x - p.alpha * dv) * submatrix_det(g, p.alpha, {v}, {v}, p.x);
  std::vector<std::vector<int>> cycles;
  cycles_through(g, v, cycles);
  for (const auto& cyc : cycles)
    acc -= std::pow(1.0 - p.alpha, cyc.size()) * submatrix_det(g, p.alpha, cyc, cyc, p.x);
  return acc;
}

double cp_theta(const Composition& K1, const Composition& K2, const EvalPoint& p) {
  const int s = K1.length(), t = K2.length();
  const int n = 2 + (K1.sum() - s) + (K2.sum() - t);
  const double xa = p.x - p.alpha, oa = 1.0 - p.alpha;
  double head = std::pow(xa, n - 2) * (p.x - p.alpha * s) * (p.x - p.alpha * t);
  double tail = 0.0;
  for (int k : K1.parts())
    for (int l : K2.parts()) tail += std::pow(oa, k + l) * std::pow(xa, n - k - l);
  return head - tail;
}

double cp_theta_hat(int n, const EvalPoint& p) {
  if (n < 4) throw std::invalid_argument("cp_theta_hat: needs n >= 4");
  const double xa = p.x - p.alpha, oa = 1.0 - p.alpha, x2a = p.x - 2.0 * p.alpha;
  return x2a * x2a * std::pow(xa, n - 2) - x2a * std::pow(oa, n - 1) - xa * std::pow(oa, n - 1) -
         std::pow(oa, n);
}

double cp_merged(const Digraph& g1, int u1, int v1, const Digraph& g2, int u2, int v2,
                 const EvalPoint& p) {
  const auto din1 = g1.in_adj();
  const auto din2 = g2.in_adj();
  const auto dout1 = g1.out_degrees();
  const auto dout2 = g2.out_degrees();
  if (!din1[u1].empty() || dout1[v1] != 0)
    throw std::invalid_argument("cp_merged: g1 needs d-(u1) = d+(v1) = 0");
  if (dout2[u2] != 0 || !din2[v2].empty())
    throw std::invalid_argument("cp_merged: g2 needs d+(u2) = d-(v2) = 0");
  const double d1 = dout1[u1], d2 = dout2[v2];
  const double a1 = submatrix_det(g1, p.alpha, {u1, v1}, {u1, v1}, p.x);
  const double a2 = submatrix_det(g2, p.alpha, {u2, v2}, {u2, v2}, p.x);
  const double c1 = submatrix_det(g1, p.alpha, {v1}, {u1}, p.x);
  const double c2 = submatrix_det(g2, p.alpha, {u2}, {v2}, p.x);
  return (p.x - p.alpha * d1) * (p.x - p.alpha * d2) * a1 * a2 - c1 * c2;
}

EvalPointSampler::EvalPointSampler(uint64_t seed) : state_(seed) {}

double EvalPointSampler::unit() {
  // splitmix64 step; top 53 bits to [0,1)
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

EvalPoint EvalPointSampler::next() {
  const double x = 1.01 + (3.0 - 1.01) * (1.0 - unit());  // (1.01, 3]
  const double alpha = 0.95 * unit();                     // [0, 0.95)
  return EvalPoint(x, alpha);
}

}  // namespace spectra
