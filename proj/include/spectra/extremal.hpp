#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "spectra/families.hpp"
#include "spectra/majorization.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

// Strict-inequality margin for radius comparisons; anything closer is a tie
// and is reported, never silently ordered.
inline constexpr double kRadiusMargin = 1e-9;

struct RankedEntry {
  FamilySpec spec;
  double rho;
};

struct RankedFamily {
  double alpha = 0.0;
  int m = 0;
  int total = 0;                            // size of the full enumeration
  std::vector<RankedEntry> entries;         // ascending by rho, trimmed to top
  std::vector<std::pair<int, int>> ties;    // index pairs within kRadiusMargin
};

struct TheoremReport {
  std::string theorem_id;
  std::string grid;
  bool verified = false;
  std::vector<std::string> counterexamples;
  // smallest strict gap observed; +inf when no comparison was exercised
  double min_margin = std::numeric_limits<double>::infinity();
};

std::string report_to_json(const TheoremReport& report);
std::string ranked_to_csv(const RankedFamily& ranked);

// Theorem verifications. Each runs a full enumeration of its family and
// returns verified = true only when every strict inequality holds with a gap
// above kRadiusMargin.

/// Radius is strictly monotone along the majorization order on S_m^k roses;
/// endpoints are the closed-form extremal compositions.
TheoremReport verify_rose_monotone(int m, int k, double alpha);

/// Inf(2,2,m-4) is the unique maximum over all tri-rings of size m >= 6.
TheoremReport verify_inf_max(int m, double alpha);

/// Ascending radius ranking of the size-m tri-rings in the reference-table
/// convention: one tuple per partition of m into three cycle lengths with the
/// middle cycle carrying the median length, printed as p >= q >= s.
/// verify_inf_max sweeps the full family (any middle length) instead.
RankedFamily rank_inf(int m, double alpha, int top);

/// rho(C_p . C_q . G) > rho(C_q . C_p . G) for p > q >= 2.
TheoremReport verify_c_ordering(int p, int q, const FamilySpec& g_spec, double alpha);

/// Fixed-split theta block S~_{m1}^s x S~_{m2}^t: componentwise majorization
/// monotonicity plus the closed-form argmax/argmin pairs.
TheoremReport verify_theta_block(int m1, int m2, int s, int t, double alpha);

/// Over all m1+m2 = m splits: argmax is theta(zeta_s^{m-2t+1}, zeta_t); for
/// t = 1 the argmin is theta_m(zeta_flat(s)). The t >= 2 minimizer carries no
/// closed form and is only reported.
TheoremReport verify_theta_family(int m, int s, int t, double alpha);

/// Ascending ranking over all splits and compositions of s,t-thetas of size m.
RankedFamily rank_theta(int m, int s, int t, double alpha, int top);

/// Joint family: max over R_m^k and all thetas with s+t = k is Rose(gamma1);
/// min over R_m^k and the t = 1 thetas is theta_m(zeta_flat(k-1)). For k = 2
/// additionally checks the bicyclic statement (theta side s+t = 3):
/// max = Rose(2,m-2), min = theta((2,1),(m-3)).
TheoremReport verify_joint_extremal(int m, int k, double alpha);

/// rho(C_{n,g}) strictly decreases in g, all above 1; for n <= 5 additionally
/// confirms by exhaustive enumeration that C_{n,g} minimizes the radius in
/// its girth class.
TheoremReport verify_girth_chain(int n, double alpha);

/// First four minimal radii among strongly connected digraphs on n vertices:
/// C_n, theta(2,1;n-2), theta(2,2;n-3), then theta(3,1;n-3) for alpha <= 1/2.
/// Exhaustive over all arc subsets for n in {4,5}; candidate-set comparison
/// for larger n.
TheoremReport verify_first_four(int n, double alpha);

struct ConjectureRow {
  int n = 0;
  double alpha = 0.0;
  double rho_theta31 = 0.0;
  double rho_theta_hat = 0.0;
  double gap = 0.0;  // rho_theta_hat - rho_theta31
  bool boundary = false;
};

struct ConjectureScan {
  std::vector<ConjectureRow> rows;
  std::string note;  // numerical evidence, not proof
};

/// Gap scan for the open comparison of theta(3,1;n-3) against theta_hat(n)
/// on alpha > 1/2. Adds a boundary row at alpha = 0.5001 per n.
ConjectureScan conjecture_scan(int n_lo, int n_hi, std::vector<double> alphas = {});
std::string conjecture_to_csv(const ConjectureScan& scan);

struct DeltaRow {
  double alpha = 0.0;
  std::vector<int> k1, k2;  // argmax composition pair
  double rho = 0.0;
  char pattern = '?';  // 'b' balanced-split zeta, '1' t=1 zeta, '?' other
};

struct DeltaScan {
  int m = 0, k = 0;
  std::vector<DeltaRow> rows;
  bool low_matches = false;   // grid start matches the balanced zeta pattern
  bool high_matches = false;  // grid end matches the t=1 zeta pattern
  bool crossover_found = false;
  double crossover_lo = 0.0, crossover_hi = 0.0;
};

/// Sweeps alpha and tracks where the theta_k(m) maximizer switches from the
/// balanced-split zeta pattern to the t=1 pattern.
DeltaScan scan_delta_threshold(int m, int k, std::vector<double> alpha_grid = {});
TheoremReport verify_delta_threshold(int m, int k);

/// G - E_u^- + E_v^-: every in-arc of u is redirected to v. Requires the arc
/// (u,v); collisions are collapsed and a would-be loop (v,v) is dropped.
Digraph reassign_in_arcs(const Digraph& g, int u, int v);

/// Both in- and out-arcs of u move to v (u becomes isolated).
Digraph reassign_all_arcs(const Digraph& g, int u, int v);

/// Theta digraphs of size m with path counts (s, t), all splits, one
/// representative per isomorphism class.
std::vector<std::pair<Composition, Composition>> enum_theta_family(int m, int s, int t);

// Exhaustive small-n machinery: every strongly connected digraph on n
// labeled vertices as an arc-subset mask.
struct ScanEntry {
  uint32_t mask = 0;
  double rho = 0.0;
  int girth = 0;
};

/// All strongly connected digraphs on n vertices (2 <= n <= 5) with radius
/// and girth; memoized per (n, alpha).
const std::vector<ScanEntry>& exhaustive_scan(int n, double alpha);
Digraph digraph_from_mask(int n, uint32_t mask);

}  // namespace spectra
