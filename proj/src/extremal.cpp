#include "spectra/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

#include "json.hpp"
#include "parallel.hpp"

namespace spectra {

namespace {

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double rho_of(const Digraph& g, double alpha) {
  return spectral_radius(g, alpha).rho;
}

// Tracks the smallest strict gap and collects violations.
struct MarginTracker {
  TheoremReport& report;
  void strict(double hi, double lo, const std::string& what) {
    const double gap = hi - lo;
    if (gap <= kRadiusMargin) {
      report.counterexamples.push_back(what + " (gap " + fmt(gap, 12) + ")");
    } else {
      report.min_margin = std::min(report.min_margin, gap);
    }
  }
};

struct ThetaPair {
  Composition k1, k2;
  std::string to_string() const { return "(" + k1.to_string() + "," + k2.to_string() + ")"; }
};

bool pair_less(const Composition& a, const Composition& b) {
  if (a.sum() != b.sum()) return a.sum() < b.sum();
  return a < b;
}

// Thetas are unordered in (K1,K2) when the two sides have equal path counts.
ThetaPair canonical_theta_pair(Composition k1, Composition k2) {
  if (k1.length() == k2.length() && pair_less(k1, k2)) std::swap(k1, k2);
  return ThetaPair{std::move(k1), std::move(k2)};
}

}  // namespace

std::string report_to_json(const TheoremReport& report) {
  nlohmann::json j;
  j["theorem_id"] = report.theorem_id;
  j["grid"] = report.grid;
  j["verified"] = report.verified;
  j["counterexamples"] = report.counterexamples;
  if (std::isfinite(report.min_margin))
    j["min_margin"] = report.min_margin;
  else
    j["min_margin"] = nullptr;
  return j.dump();
}

std::string ranked_to_csv(const RankedFamily& ranked) {
  std::string out = "rank,spec,rho\r\n";
  for (size_t i = 0; i < ranked.entries.size(); ++i) {
    out += std::to_string(i + 1) + "," + csv_field(print_family(ranked.entries[i].spec)) + "," +
           fmt(ranked.entries[i].rho, 6) + "\r\n";
  }
  return out;
}

namespace {

void finish_ranking(RankedFamily& ranked, int top) {
  std::sort(ranked.entries.begin(), ranked.entries.end(), [](const auto& a, const auto& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    return print_family(a.spec) < print_family(b.spec);
  });
  ranked.total = static_cast<int>(ranked.entries.size());
  for (size_t i = 0; i < ranked.entries.size(); ++i)
    for (size_t j = i + 1; j < ranked.entries.size(); ++j) {
      if (ranked.entries[j].rho - ranked.entries[i].rho > kRadiusMargin) break;
      ranked.ties.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (top >= 0 && static_cast<size_t>(top) < ranked.entries.size())
    ranked.entries.resize(top);
}

}  // namespace

TheoremReport verify_rose_monotone(int m, int k, double alpha) {
  if (m < 2 * k) throw std::invalid_argument("verify_rose_monotone: requires m >= 2k");
  TheoremReport report;
  report.theorem_id = "rose_monotone";
  report.grid = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  const auto comps = enum_S(m, k);
  std::vector<double> rho(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) rho[i] = rho_of(rose(comps[i]), alpha);

  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = 0; j < comps.size(); ++j) {
      if (i == j || !majorizes(comps[j], comps[i])) continue;
      margins.strict(rho[j], rho[i],
                     "rose" + comps[j].to_string() + " vs rose" + comps[i].to_string());
    }

  const Composition gamma1 = extremal_max_S(m, k);
  const Composition gamma2 = extremal_min_S(m, k);
  const size_t imax = std::max_element(rho.begin(), rho.end()) - rho.begin();
  const size_t imin = std::min_element(rho.begin(), rho.end()) - rho.begin();
  if (comps[imax] != gamma1)
    report.counterexamples.push_back("argmax " + comps[imax].to_string() + " != gamma1 " +
                                     gamma1.to_string());
  if (comps[imin] != gamma2)
    report.counterexamples.push_back("argmin " + comps[imin].to_string() + " != gamma2 " +
                                     gamma2.to_string());
  report.verified = report.counterexamples.empty();
  return report;
}

namespace {

// Every isomorphism class: any middle length q, outer pair normalized p >= s.
std::vector<std::pair<FamilySpec, Digraph>> enum_inf(int m) {
  std::vector<std::pair<FamilySpec, Digraph>> out;
  for (int q = 2; q <= m - 4; ++q)
    for (int s = 2; s <= m - q - 2; ++s) {
      const int p = m - q - s;
      if (p < s) continue;  // (p,q,s) and (s,q,p) are the same digraph
      out.emplace_back(spec_inf(p, q, s), inf_digraph(p, q, s));
    }
  return out;
}

// Reference-table enumeration: one tuple per partition of m into three cycle
// lengths, the middle cycle carrying the median length (p >= q >= s).
std::vector<std::pair<FamilySpec, Digraph>> enum_inf_sorted(int m) {
  std::vector<std::pair<FamilySpec, Digraph>> out;
  for (int q = 2; q <= m - 4; ++q)
    for (int s = 2; s <= q; ++s) {
      const int p = m - q - s;
      if (p < q) continue;
      out.emplace_back(spec_inf(p, q, s), inf_digraph(p, q, s));
    }
  return out;
}

}  // namespace

RankedFamily rank_inf(int m, double alpha, int top) {
  if (m < 6) throw std::invalid_argument("rank_inf: requires m >= 6");
  RankedFamily ranked;
  ranked.alpha = alpha;
  ranked.m = m;
  for (const auto& [spec, g] : enum_inf_sorted(m))
    ranked.entries.push_back({spec, rho_of(g, alpha)});
  finish_ranking(ranked, top);
  return ranked;
}

TheoremReport verify_inf_max(int m, double alpha) {
  if (m < 6) throw std::invalid_argument("verify_inf_max: requires m >= 6");
  TheoremReport report;
  report.theorem_id = "inf_max";
  report.grid = "m=" + std::to_string(m) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  const auto family = enum_inf(m);
  std::vector<double> rho(family.size());
  for (size_t i = 0; i < family.size(); ++i) rho[i] = rho_of(family[i].second, alpha);
  const size_t imax = std::max_element(rho.begin(), rho.end()) - rho.begin();
  const FamilySpec expected = spec_inf(std::max(2, m - 4), 2, std::min(2, m - 4));
  if (!(family[imax].first == expected))
    report.counterexamples.push_back("argmax " + print_family(family[imax].first) + " != " +
                                     print_family(expected));
  for (size_t i = 0; i < family.size(); ++i) {
    if (i == imax) continue;
    margins.strict(rho[imax], rho[i], "max uniqueness vs " + print_family(family[i].first));
  }
  report.verified = report.counterexamples.empty();
  return report;
}

TheoremReport verify_c_ordering(int p, int q, const FamilySpec& g_spec, double alpha) {
  if (!(p > q && q >= 2))
    throw std::invalid_argument("verify_c_ordering: requires p > q >= 2");
  const Digraph G = build_family(g_spec);
  if (!is_strongly_connected(G))
    throw std::invalid_argument("verify_c_ordering: G must be strongly connected");
  TheoremReport report;
  report.theorem_id = "c_ordering";
  report.grid = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                " G=" + print_family(g_spec) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};
  const double rho1 = rho_of(chain_cycles(p, q, G, 0), alpha);
  const double rho2 = rho_of(chain_cycles(q, p, G, 0), alpha);
  margins.strict(rho1, rho2, "C_p.C_q.G vs C_q.C_p.G");
  report.verified = report.counterexamples.empty();
  return report;
}

TheoremReport verify_theta_block(int m1, int m2, int s, int t, double alpha) {
  const auto A = enum_S_tilde(m1, s);
  const auto B = enum_S_tilde(m2, t);
  if (A.empty() || B.empty())
    throw std::invalid_argument("verify_theta_block: empty composition poset");
  TheoremReport report;
  report.theorem_id = "theta_block";
  report.grid = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  const bool symmetric = (s == t && m1 == m2);
  std::vector<ThetaPair> members;
  for (const auto& k1 : A)
    for (const auto& k2 : B) {
      if (symmetric && pair_less(k1, k2)) continue;  // theta(K1,K2) == theta(K2,K1)
      members.push_back(ThetaPair{k1, k2});
    }
  std::vector<double> rho(members.size());
  for (size_t i = 0; i < members.size(); ++i)
    rho[i] = rho_of(theta(members[i].k1, members[i].k2), alpha);

  // componentwise majorization monotonicity
  auto leq = [](const Composition& x, const Composition& y) {
    return x == y || majorizes(y, x);
  };
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const bool comparable = leq(members[i].k1, members[j].k1) &&
                              leq(members[i].k2, members[j].k2);
      if (!comparable) continue;
      if (members[i].k1 == members[j].k1 && members[i].k2 == members[j].k2) continue;
      margins.strict(rho[j], rho[i],
                     "theta" + members[j].to_string() + " vs theta" + members[i].to_string());
    }

  const ThetaPair expect_max = canonical_theta_pair(zeta(m1, s), zeta(m2, t));
  const ThetaPair expect_min =
      canonical_theta_pair(balanced_S_tilde(m1, s), balanced_S_tilde(m2, t));
  const size_t imax = std::max_element(rho.begin(), rho.end()) - rho.begin();
  const size_t imin = std::min_element(rho.begin(), rho.end()) - rho.begin();
  if (!(members[imax].k1 == expect_max.k1 && members[imax].k2 == expect_max.k2))
    report.counterexamples.push_back("argmax " + members[imax].to_string() + " != " +
                                     expect_max.to_string());
  if (!(members[imin].k1 == expect_min.k1 && members[imin].k2 == expect_min.k2))
    report.counterexamples.push_back("argmin " + members[imin].to_string() + " != " +
                                     expect_min.to_string());
  report.verified = report.counterexamples.empty();
  return report;
}

std::vector<std::pair<Composition, Composition>> enum_theta_family(int m, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("enum_theta_family: requires s,t >= 1");
  std::vector<std::pair<Composition, Composition>> out;
  if (s == 1 && t == 1) {
    // every split is the directed m-cycle; one representative
    if (m >= 2) out.emplace_back(Composition({m - 1}), Composition({1}));
    return out;
  }
  for (int m1 = m - (2 * t - 1); m1 >= 2 * s - 1; --m1) {
    const int m2 = m - m1;
    for (const auto& k1 : enum_S_tilde(m1, s))
      for (const auto& k2 : enum_S_tilde(m2, t)) {
        if (s == t && pair_less(k1, k2)) continue;
        out.emplace_back(k1, k2);
      }
  }
  return out;
}

RankedFamily rank_theta(int m, int s, int t, double alpha, int top) {
  RankedFamily ranked;
  ranked.alpha = alpha;
  ranked.m = m;
  for (const auto& [k1, k2] : enum_theta_family(m, s, t))
    ranked.entries.push_back(
        {spec_theta(k1.parts(), k2.parts()), rho_of(theta(k1, k2), alpha)});
  finish_ranking(ranked, top);
  return ranked;
}

TheoremReport verify_theta_family(int m, int s, int t, double alpha) {
  if (!(s >= t && t >= 1)) throw std::invalid_argument("verify_theta_family: requires s >= t >= 1");
  const auto members = enum_theta_family(m, s, t);
  if (members.empty()) throw std::invalid_argument("verify_theta_family: empty family");
  TheoremReport report;
  report.theorem_id = "theta_family";
  report.grid = "m=" + std::to_string(m) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  std::vector<double> rho(members.size());
  for (size_t i = 0; i < members.size(); ++i)
    rho[i] = rho_of(theta(members[i].first, members[i].second), alpha);
  const size_t imax = std::max_element(rho.begin(), rho.end()) - rho.begin();
  const size_t imin = std::min_element(rho.begin(), rho.end()) - rho.begin();

  const ThetaPair expect_max = canonical_theta_pair(zeta(m - 2 * t + 1, s), zeta_flat(t));
  const ThetaPair got_max = canonical_theta_pair(members[imax].first, members[imax].second);
  if (!(got_max.k1 == expect_max.k1 && got_max.k2 == expect_max.k2))
    report.counterexamples.push_back("argmax " + got_max.to_string() + " != " +
                                     expect_max.to_string());
  for (size_t i = 0; i < members.size(); ++i) {
    if (i == imax) continue;
    margins.strict(rho[imax], rho[i],
                   "max uniqueness vs " +
                       canonical_theta_pair(members[i].first, members[i].second).to_string());
  }

  const ThetaPair got_min = canonical_theta_pair(members[imin].first, members[imin].second);
  if (t == 1) {
    const ThetaPair expect_min =
        canonical_theta_pair(zeta_flat(s), Composition({m - (2 * s - 1)}));
    if (!(got_min.k1 == expect_min.k1 && got_min.k2 == expect_min.k2))
      report.counterexamples.push_back("argmin " + got_min.to_string() + " != " +
                                       expect_min.to_string());
    for (size_t i = 0; i < members.size(); ++i) {
      if (i == imin) continue;
      margins.strict(rho[i], rho[imin],
                     "min uniqueness vs " +
                         canonical_theta_pair(members[i].first, members[i].second).to_string());
    }
  } else {
    report.grid += " min=" + got_min.to_string() + "@" + fmt(rho[imin], 6);
  }
  report.verified = report.counterexamples.empty();
  return report;
}

namespace {

struct JointMember {
  std::string name;
  double rho;
};

void check_extremes(TheoremReport& report, MarginTracker& margins,
                    const std::vector<JointMember>& family, const std::string& expected_max,
                    const std::string& expected_min, bool check_max, bool check_min) {
  size_t imax = 0, imin = 0;
  for (size_t i = 1; i < family.size(); ++i) {
    if (family[i].rho > family[imax].rho) imax = i;
    if (family[i].rho < family[imin].rho) imin = i;
  }
  if (check_max) {
    if (family[imax].name != expected_max)
      report.counterexamples.push_back("argmax " + family[imax].name + " != " + expected_max);
    for (size_t i = 0; i < family.size(); ++i)
      if (i != imax)
        margins.strict(family[imax].rho, family[i].rho, "max uniqueness vs " + family[i].name);
  }
  if (check_min) {
    if (family[imin].name != expected_min)
      report.counterexamples.push_back("argmin " + family[imin].name + " != " + expected_min);
    for (size_t i = 0; i < family.size(); ++i)
      if (i != imin)
        margins.strict(family[i].rho, family[imin].rho, "min uniqueness vs " + family[i].name);
  }
}

}  // namespace

TheoremReport verify_joint_extremal(int m, int k, double alpha) {
  if (m < 2 * k || k < 2)
    throw std::invalid_argument("verify_joint_extremal: requires m >= 2k, k >= 2");
  TheoremReport report;
  report.theorem_id = "joint_extremal";
  report.grid = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  std::vector<JointMember> roses;
  for (const auto& comp : enum_S(m, k))
    roses.push_back({"rose" + comp.to_string(), rho_of(rose(comp), alpha)});

  auto theta_members = [&](int s, int t) {
    std::vector<JointMember> out;
    for (const auto& [k1, k2] : enum_theta_family(m, s, t))
      out.push_back({"theta" + canonical_theta_pair(k1, k2).to_string(),
                     rho_of(theta(k1, k2), alpha)});
    return out;
  };

  // max over roses and every s+t = k theta; min over roses and t = 1 thetas
  std::vector<JointMember> with_all = roses;
  for (int s = k - 1; 2 * s >= k; --s) {
    auto part = theta_members(s, k - s);
    with_all.insert(with_all.end(), part.begin(), part.end());
  }
  const std::string expected_max = "rose" + extremal_max_S(m, k).to_string();
  check_extremes(report, margins, with_all, expected_max, "", true, false);

  std::vector<JointMember> with_t1 = roses;
  auto t1 = theta_members(k - 1, 1);
  with_t1.insert(with_t1.end(), t1.begin(), t1.end());
  const ThetaPair zmin =
      k == 2 ? canonical_theta_pair(zeta_flat(1), Composition({m - 1}))
             : canonical_theta_pair(zeta_flat(k - 1), Composition({m - (2 * k - 3)}));
  check_extremes(report, margins, with_t1, "", "theta" + zmin.to_string(), false, true);

  if (k == 2) {
    // bicyclic digraphs: roses with two petals together with the s+t = 3 thetas
    std::vector<JointMember> bicyclic = roses;
    auto th3 = theta_members(2, 1);
    bicyclic.insert(bicyclic.end(), th3.begin(), th3.end());
    const std::string bmax = "rose" + extremal_max_S(m, 2).to_string();
    const std::string bmin =
        "theta" + canonical_theta_pair(Composition({2, 1}), Composition({m - 3})).to_string();
    check_extremes(report, margins, bicyclic, bmax, bmin, true, true);
  }

  report.verified = report.counterexamples.empty();
  return report;
}

// ---------------------------------------------------------------------------
// exhaustive small-n scan

namespace {

struct MaskTables {
  int n = 0;
  std::vector<std::pair<int, int>> slots;  // lexicographic (i,j), i != j
};

MaskTables mask_tables(int n) {
  MaskTables t;
  t.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) t.slots.emplace_back(i, j);
  return t;
}

bool mask_strongly_connected(int n, const uint8_t rows[], const uint8_t cols[]) {
  const uint8_t full = static_cast<uint8_t>((1u << n) - 1);
  uint8_t reach = 1;
  for (;;) {
    uint8_t next = reach;
    for (int i = 0; i < n; ++i)
      if (reach & (1u << i)) next |= rows[i];
    if (next == reach) break;
    reach = next;
  }
  if (reach != full) return false;
  uint8_t coreach = 1;
  for (;;) {
    uint8_t next = coreach;
    for (int i = 0; i < n; ++i)
      if (coreach & (1u << i)) next |= cols[i];
    if (next == coreach) break;
    coreach = next;
  }
  return coreach == full;
}

int mask_girth(int n, const uint8_t rows[]) {
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    uint8_t frontier = rows[v];
    for (int d = 1; d <= n && frontier; ++d) {
      if (frontier & (1u << v)) {
        best = std::min(best, d);
        break;
      }
      if (d >= best) break;
      uint8_t next = 0;
      for (int i = 0; i < n; ++i)
        if (frontier & (1u << i)) next |= rows[i];
      frontier = next;
    }
  }
  return best;
}

// Collatz-Wielandt sandwich on A_alpha + I; certified to half the bound
// width. Falls back to charpoly bisection on slow cases.
double mask_rho(int n, const uint8_t rows[], double alpha) {
  double x[5], y[5];
  int deg[5];
  for (int i = 0; i < n; ++i) {
    x[i] = 1.0 / n;
    deg[i] = __builtin_popcount(static_cast<unsigned>(rows[i]));
  }
  const double oa = 1.0 - alpha;
  for (int it = 0; it < 60000; ++it) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = (1.0 + alpha * deg[i]) * x[i];
      for (int j = 0; j < n; ++j)
        if (rows[i] & (1u << j)) acc += oa * x[j];
      y[i] = acc;
      norm += acc;
    }
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= 1e-10) return 0.5 * (hi + lo) - 1.0;
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] & (1u << j)) arcs.emplace_back(i, j);
  const Digraph g = build_digraph(n, std::move(arcs));
  int dmax = 0;
  for (int i = 0; i < n; ++i) dmax = std::max(dmax, deg[i]);
  return rho_bisect(g, alpha, 0.0, dmax + 1.0, 1e-11);
}

std::mutex scan_mutex;
std::map<std::pair<int, int64_t>, std::vector<ScanEntry>> scan_cache;

}  // namespace

Digraph digraph_from_mask(int n, uint32_t mask) {
  const MaskTables t = mask_tables(n);
  std::vector<Arc> arcs;
  for (size_t s = 0; s < t.slots.size(); ++s)
    if (mask & (1u << s)) arcs.push_back(t.slots[s]);
  return build_digraph(n, std::move(arcs));
}

const std::vector<ScanEntry>& exhaustive_scan(int n, double alpha) {
  if (n < 2 || n > 5) throw std::invalid_argument("exhaustive_scan: n must be in [2,5]");
  const int64_t alpha_key = static_cast<int64_t>(std::llround(alpha * 1e12));
  {
    std::lock_guard<std::mutex> lock(scan_mutex);
    auto it = scan_cache.find({n, alpha_key});
    if (it != scan_cache.end()) return it->second;
  }

  const MaskTables tables = mask_tables(n);
  const int nslots = static_cast<int>(tables.slots.size());
  const int64_t total = int64_t{1} << nslots;
  const int workers = detail::thread_budget();
  std::vector<std::vector<ScanEntry>> partial(
      static_cast<size_t>(std::max<int64_t>(1, std::min<int64_t>(workers, total))));

  detail::run_chunks(total, [&](int w, int64_t lo, int64_t hi) {
    auto& out = partial[w];
    uint8_t rows[5], cols[5];
    for (int64_t mask = lo; mask < hi; ++mask) {
      for (int i = 0; i < n; ++i) rows[i] = cols[i] = 0;
      for (int s = 0; s < nslots; ++s)
        if (mask & (int64_t{1} << s)) {
          rows[tables.slots[s].first] |= static_cast<uint8_t>(1u << tables.slots[s].second);
          cols[tables.slots[s].second] |= static_cast<uint8_t>(1u << tables.slots[s].first);
        }
      if (!mask_strongly_connected(n, rows, cols)) continue;
      ScanEntry e;
      e.mask = static_cast<uint32_t>(mask);
      e.girth = mask_girth(n, rows);
      e.rho = mask_rho(n, rows, alpha);
      out.push_back(e);
    }
  });

  std::vector<ScanEntry> merged;
  for (const auto& part : partial) merged.insert(merged.end(), part.begin(), part.end());

  std::lock_guard<std::mutex> lock(scan_mutex);
  auto [it, inserted] = scan_cache.emplace(std::make_pair(n, alpha_key), std::move(merged));
  (void)inserted;
  return it->second;
}

TheoremReport verify_girth_chain(int n, double alpha) {
  if (n < 4) throw std::invalid_argument("verify_girth_chain: requires n >= 4");
  TheoremReport report;
  report.theorem_id = "girth_chain";
  report.grid = "n=" + std::to_string(n) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};

  std::vector<double> rho_g(n);  // index by girth, 2..n-1
  for (int g = 2; g <= n - 1; ++g) {
    rho_g[g] = rho_of(c_n_g(n, g), alpha);
    margins.strict(rho_g[g], 1.0, "rho(C_{n," + std::to_string(g) + "}) > 1");
  }
  for (int g = 2; g <= n - 2; ++g)
    margins.strict(rho_g[g], rho_g[g + 1],
                   "rho decreasing at g=" + std::to_string(g) + " -> " + std::to_string(g + 1));

  if (n <= 5) {
    report.grid += " exhaustive";
    for (const ScanEntry& e : exhaustive_scan(n, alpha)) {
      if (e.girth < 2 || e.girth > n - 1) continue;
      if (e.rho < rho_g[e.girth] - kRadiusMargin)
        report.counterexamples.push_back("mask " + std::to_string(e.mask) + " girth " +
                                         std::to_string(e.girth) + " rho " + fmt(e.rho, 12) +
                                         " below C_{n,g}");
    }
  }
  report.verified = report.counterexamples.empty();
  return report;
}

TheoremReport verify_first_four(int n, double alpha) {
  if (n < 4) throw std::invalid_argument("verify_first_four: requires n >= 4");
  TheoremReport report;
  report.theorem_id = "first_four";
  report.grid = "n=" + std::to_string(n) + " alpha=" + fmt(alpha, 4);
  MarginTracker margins{report};
  const bool check_fourth = alpha <= 0.5 + 1e-12;

  const double r1 = 1.0;  // directed cycle
  const double r2 = rho_of(theta(Composition({2, 1}), Composition({n - 2})), alpha);
  const double r3 = rho_of(theta(Composition({2, 2}), Composition({n - 3})), alpha);
  const double r4 = rho_of(theta(Composition({3, 1}), Composition({n - 3})), alpha);
  margins.strict(r2, r1, "theta(2,1;n-2) vs C_n");
  margins.strict(r3, r2, "theta(2,2;n-3) vs theta(2,1;n-2)");
  if (check_fourth) margins.strict(r4, r3, "theta(3,1;n-3) vs theta(2,2;n-3)");

  if (n <= 5) {
    report.grid += " exhaustive";
    std::vector<double> values;
    for (const ScanEntry& e : exhaustive_scan(n, alpha)) values.push_back(e.rho);
    std::sort(values.begin(), values.end());
    // cluster into distinct radius levels
    std::vector<double> levels;
    for (double v : values)
      if (levels.empty() || v - levels.back() > 1e-8) levels.push_back(v);
    const double want[4] = {r1, r2, r3, r4};
    const int checks = check_fourth ? 4 : 3;
    for (int i = 0; i < checks; ++i) {
      if (static_cast<size_t>(i) >= levels.size() ||
          std::fabs(levels[i] - want[i]) > 1e-7)
        report.counterexamples.push_back("level " + std::to_string(i + 1) + " is " +
                                         (static_cast<size_t>(i) < levels.size()
                                              ? fmt(levels[i], 9)
                                              : std::string("missing")) +
                                         ", expected " + fmt(want[i], 9));
    }
  } else {
    const double rhat = rho_of(theta_hat(n), alpha);
    margins.strict(rhat, r3, "theta_hat(n) vs theta(2,2;n-3)");
    if (check_fourth) margins.strict(rhat, r4, "theta_hat(n) vs theta(3,1;n-3)");
    // chords with smaller girth sit above the fourth candidate
    for (int g = 2; g <= n - 3; ++g)
      margins.strict(rho_of(c_n_g(n, g), alpha), r4,
                     "C_{n," + std::to_string(g) + "} vs theta(3,1;n-3)");
  }
  report.verified = report.counterexamples.empty();
  return report;
}

ConjectureScan conjecture_scan(int n_lo, int n_hi, std::vector<double> alphas) {
  if (n_lo < 5 || n_hi < n_lo)
    throw std::invalid_argument("conjecture_scan: range must satisfy 5 <= n_lo <= n_hi");
  if (alphas.empty()) alphas = {0.55, 0.65, 0.75, 0.85, 0.95};
  for (double a : alphas)
    if (!(a > 0.5 && a < 1.0))
      throw std::invalid_argument("conjecture_scan: grid must lie in (0.5, 1)");
  std::sort(alphas.begin(), alphas.end());

  ConjectureScan scan;
  scan.note = "numerical evidence, not proof";
  const double boundary = 0.5001;
  for (int n = n_lo; n <= n_hi; ++n) {
    auto row_at = [&](double a, bool is_boundary) {
      ConjectureRow row;
      row.n = n;
      row.alpha = a;
      row.boundary = is_boundary;
      row.rho_theta31 = rho_of(theta(Composition({3, 1}), Composition({n - 3})), a);
      row.rho_theta_hat = rho_of(theta_hat(n), a);
      row.gap = row.rho_theta_hat - row.rho_theta31;
      return row;
    };
    scan.rows.push_back(row_at(boundary, true));
    for (double a : alphas) scan.rows.push_back(row_at(a, false));
  }
  return scan;
}

std::string conjecture_to_csv(const ConjectureScan& scan) {
  std::string out = "n,alpha,rho_theta31,rho_theta_hat,gap,boundary\r\n";
  for (const auto& row : scan.rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%.4f,%.10f,%.10f,%.6e,%d\r\n", row.n, row.alpha,
                  row.rho_theta31, row.rho_theta_hat, row.gap, row.boundary ? 1 : 0);
    out += buf;
  }
  return out;
}

DeltaScan scan_delta_threshold(int m, int k, std::vector<double> alpha_grid) {
  if (k < 3 || m < 2 * k - 2)
    throw std::invalid_argument("scan_delta_threshold: requires k >= 3, m >= 2k-2");
  if (alpha_grid.empty()) {
    alpha_grid.push_back(0.01);
    for (int i = 1; i <= 19; ++i) alpha_grid.push_back(0.05 * i);
    alpha_grid.push_back(0.99);
  }
  std::sort(alpha_grid.begin(), alpha_grid.end());

  const int s_bal = (k + 1) / 2, t_bal = k / 2;
  const ThetaPair balanced =
      canonical_theta_pair(zeta(m - 2 * t_bal + 1, s_bal), zeta_flat(t_bal));
  const ThetaPair high = canonical_theta_pair(zeta(m - 1, k - 1), Composition({1}));

  DeltaScan scan;
  scan.m = m;
  scan.k = k;
  for (double a : alpha_grid) {
    double best = -1.0;
    ThetaPair arg{Composition({1}), Composition({1})};
    for (int s = k - 1; 2 * s >= k; --s) {
      for (const auto& [k1, k2] : enum_theta_family(m, s, k - s)) {
        const double r = rho_of(theta(k1, k2), a);
        if (r > best) {
          best = r;
          arg = canonical_theta_pair(k1, k2);
        }
      }
    }
    DeltaRow row;
    row.alpha = a;
    row.k1 = arg.k1.parts();
    row.k2 = arg.k2.parts();
    row.rho = best;
    if (arg.k1 == balanced.k1 && arg.k2 == balanced.k2)
      row.pattern = 'b';
    else if (arg.k1 == high.k1 && arg.k2 == high.k2)
      row.pattern = '1';
    scan.rows.push_back(std::move(row));
  }
  scan.low_matches = scan.rows.front().pattern == 'b' ||
                     (scan.rows.front().pattern == '1' && balanced.k1 == high.k1 &&
                      balanced.k2 == high.k2);
  scan.high_matches = scan.rows.back().pattern == '1';
  for (size_t i = 0; i + 1 < scan.rows.size(); ++i) {
    if (scan.rows[i].pattern == 'b' && scan.rows[i + 1].pattern != 'b') {
      scan.crossover_found = true;
      scan.crossover_lo = scan.rows[i].alpha;
      scan.crossover_hi = scan.rows[i + 1].alpha;
    }
  }
  return scan;
}

TheoremReport verify_delta_threshold(int m, int k) {
  const DeltaScan scan = scan_delta_threshold(m, k);
  TheoremReport report;
  report.theorem_id = "delta_threshold";
  report.grid = "m=" + std::to_string(m) + " k=" + std::to_string(k);
  if (scan.crossover_found)
    report.grid += " crossover in [" + fmt(scan.crossover_lo, 2) + "," +
                   fmt(scan.crossover_hi, 2) + "]";
  else
    report.grid += " no crossover in grid";
  if (!scan.low_matches)
    report.counterexamples.push_back("low-alpha maximizer is not the balanced zeta pattern");
  if (!scan.high_matches)
    report.counterexamples.push_back("high-alpha maximizer is not the t=1 zeta pattern");
  report.verified = report.counterexamples.empty();
  return report;
}

Digraph reassign_in_arcs(const Digraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("reassign_in_arcs: u and v must differ");
  if (!g.has_arc(u, v)) throw std::invalid_argument("reassign_in_arcs: arc (u,v) required");
  std::vector<Arc> arcs;
  for (const auto& [a, b] : g.arcs) {
    if (b == u) {
      if (a != v) arcs.emplace_back(a, v);  // (v,u) would become a loop
    } else {
      arcs.emplace_back(a, b);
    }
  }
  return build_digraph(g.n, std::move(arcs));
}

Digraph reassign_all_arcs(const Digraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("reassign_all_arcs: u and v must differ");
  std::vector<Arc> arcs;
  for (auto [a, b] : g.arcs) {
    if (a == u) a = v;
    if (b == u) b = v;
    if (a != b) arcs.emplace_back(a, b);
  }
  return build_digraph(g.n, std::move(arcs));
}

}  // namespace spectra
