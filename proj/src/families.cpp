#include "spectra/families.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace spectra {

Digraph cycle(int n) {
  if (n < 2) throw std::invalid_argument("cycle: length must be >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return build_digraph(n, std::move(arcs));
}

Digraph rose(const Composition& p) {
  for (int part : p.parts())
    if (part < 2) throw std::invalid_argument("rose: every cycle length must be >= 2");
  const int n = 1 + p.sum() - p.length();
  std::vector<Arc> arcs;
  int next = 1;
  for (int part : p.parts()) {
    int prev = 0;
    for (int step = 0; step < part - 1; ++step) {
      arcs.emplace_back(prev, next);
      prev = next++;
    }
    arcs.emplace_back(prev, 0);
  }
  return build_digraph(n, std::move(arcs));
}

Digraph inf_digraph_at(int p, int q, int s, int gap) {
  if (p < 2 || q < 2 || s < 2)
    throw std::invalid_argument("inf: all three cycle lengths must be >= 2");
  if (gap < 1 || gap > q - 1) throw std::invalid_argument("inf: u,v must be distinct on C_q");
  // middle cycle visiting u = 0 first and v = 1 after `gap` steps
  std::vector<int> mid(q);
  mid[0] = 0;
  mid[gap] = 1;
  int label = 2;
  for (int i = 1; i < q; ++i)
    if (i != gap) mid[i] = label++;
  std::vector<Arc> arcs;
  for (int i = 0; i < q; ++i) arcs.emplace_back(mid[i], mid[(i + 1) % q]);
  for (int hub : {0, 1}) {
    const int len = hub == 0 ? p : s;
    int prev = hub;
    for (int step = 0; step < len - 1; ++step) {
      arcs.emplace_back(prev, label);
      prev = label++;
    }
    arcs.emplace_back(prev, hub);
  }
  return build_digraph(p + q + s - 2, std::move(arcs));
}

Digraph inf_digraph(int p, int q, int s) {
  return inf_digraph_at(p, q, s, 1);
}

namespace {

void validate_bundle(const Composition& K) {
  const auto& parts = K.parts();
  if (parts.size() >= 2 && parts[parts.size() - 2] < 2)
    throw std::invalid_argument("path bundle: at most one path of length 1");
}

// Appends the u->v paths of lengths K starting internal labels at `next`.
void add_paths(std::vector<Arc>& arcs, int from, int to, const Composition& K, int& next) {
  for (int len : K.parts()) {
    int prev = from;
    for (int step = 0; step < len - 1; ++step) {
      arcs.emplace_back(prev, next);
      prev = next++;
    }
    arcs.emplace_back(prev, to);
  }
}

}  // namespace

Digraph path_bundle(const Composition& K) {
  validate_bundle(K);
  std::vector<Arc> arcs;
  int next = 2;
  add_paths(arcs, 0, 1, K, next);
  return build_digraph(2 + K.sum() - K.length(), std::move(arcs));
}

Digraph theta(const Composition& K1, const Composition& K2) {
  validate_bundle(K1);
  validate_bundle(K2);
  std::vector<Arc> arcs;
  int next = 2;
  add_paths(arcs, 0, 1, K1, next);
  add_paths(arcs, 1, 0, K2, next);
  const int n = 2 + (K1.sum() - K1.length()) + (K2.sum() - K2.length());
  return build_digraph(n, std::move(arcs));
}

Digraph c_n_g(int n, int g) {
  if (g < 2 || g > n - 1) throw std::invalid_argument("c_n_g: girth must satisfy 2 <= g <= n-1");
  return theta(Composition({n + 1 - g, 1}), Composition({g - 1}));
}

Digraph theta_hat(int n) {
  if (n < 4) throw std::invalid_argument("theta_hat: needs n >= 4");
  Digraph base = theta(Composition({2, 2}), Composition({n - 3}));
  auto arcs = base.arcs;
  arcs.emplace_back(2, 3);
  return build_digraph(n, std::move(arcs));
}

std::optional<int> girth(const Digraph& g) {
  const auto adj = g.out_adj();
  int best = -1;
  std::vector<int> dist(g.n);
  for (int src = 0; src < g.n; ++src) {
    // shortest closed walk through src
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue;
    for (int w : adj[src]) {
      if (w == src) continue;
      if (dist[w] < 0) {
        dist[w] = 1;
        queue.push_back(w);
      }
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (best >= 0 && dist[v] + 1 >= best) continue;
      for (int w : adj[v]) {
        if (w == src) {
          if (best < 0 || dist[v] + 1 < best) best = dist[v] + 1;
        } else if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Digraph coalesce(const Digraph& g1, int v1, const Digraph& g2, int v2) {
  if (v1 < 0 || v1 >= g1.n || v2 < 0 || v2 >= g2.n)
    throw std::invalid_argument("coalesce: vertex out of range");
  auto map2 = [&](int w) {
    if (w == v2) return v1;
    return g1.n + (w < v2 ? w : w - 1);
  };
  std::vector<Arc> arcs = g1.arcs;
  for (const auto& [u, v] : g2.arcs) arcs.emplace_back(map2(u), map2(v));
  return build_digraph(g1.n + g2.n - 1, std::move(arcs));
}

Digraph chain_cycles(int p, int q, const Digraph& G, int u) {
  Digraph mid = cycle(q);
  Digraph with_outer = coalesce(mid, 0, cycle(p), 0);
  return coalesce(with_outer, 1, G, u);
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t used = 0;
    int value = std::stoi(text.substr(pos), &used);
    out.push_back(value);
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("family: expected ','");
      ++pos;
    }
  }
  if (out.empty()) throw std::invalid_argument("family: empty parameter list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("family: expected NAME(args)");
  const std::string name = text.substr(0, open);
  const std::string args = text.substr(open + 1, text.size() - open - 2);
  FamilySpec spec{};
  if (name == "C") {
    spec.kind = FamilySpec::Kind::Cycle;
    auto v = parse_int_list(args);
    if (v.size() != 1) throw std::invalid_argument("family: C takes one argument");
    spec.a = v[0];
  } else if (name == "R") {
    spec.kind = FamilySpec::Kind::Rose;
    spec.k1 = parse_int_list(args);
  } else if (name == "Inf") {
    spec.kind = FamilySpec::Kind::Inf;
    auto v = parse_int_list(args);
    if (v.size() != 3) throw std::invalid_argument("family: Inf takes three arguments");
    spec.a = v[0];
    spec.b = v[1];
    spec.c = v[2];
  } else if (name == "Th") {
    spec.kind = FamilySpec::Kind::Theta;
    const size_t semi = args.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("family: Th takes two ';'-separated lists");
    spec.k1 = parse_int_list(args.substr(0, semi));
    spec.k2 = parse_int_list(args.substr(semi + 1));
  } else if (name == "CnG") {
    spec.kind = FamilySpec::Kind::CnG;
    auto v = parse_int_list(args);
    if (v.size() != 2) throw std::invalid_argument("family: CnG takes two arguments");
    spec.a = v[0];
    spec.b = v[1];
  } else if (name == "ThHat") {
    spec.kind = FamilySpec::Kind::ThetaHat;
    auto v = parse_int_list(args);
    if (v.size() != 1) throw std::invalid_argument("family: ThHat takes one argument");
    spec.a = v[0];
  } else if (name == "PB") {
    spec.kind = FamilySpec::Kind::PathBundle;
    spec.k1 = parse_int_list(args);
  } else {
    throw std::invalid_argument("family: unknown family '" + name + "'");
  }
  return spec;
}

std::string print_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Cycle:
      return "C(" + std::to_string(spec.a) + ")";
    case FamilySpec::Kind::Rose:
      return "R(" + join_ints(spec.k1) + ")";
    case FamilySpec::Kind::Inf:
      return "Inf(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "," +
             std::to_string(spec.c) + ")";
    case FamilySpec::Kind::Theta:
      return "Th(" + join_ints(spec.k1) + ";" + join_ints(spec.k2) + ")";
    case FamilySpec::Kind::CnG:
      return "CnG(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
    case FamilySpec::Kind::ThetaHat:
      return "ThHat(" + std::to_string(spec.a) + ")";
    case FamilySpec::Kind::PathBundle:
      return "PB(" + join_ints(spec.k1) + ")";
  }
  throw std::logic_error("family: unreachable");
}

Digraph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Cycle:
      return cycle(spec.a);
    case FamilySpec::Kind::Rose:
      return rose(Composition(spec.k1));
    case FamilySpec::Kind::Inf:
      return inf_digraph(spec.a, spec.b, spec.c);
    case FamilySpec::Kind::Theta:
      return theta(Composition(spec.k1), Composition(spec.k2));
    case FamilySpec::Kind::CnG:
      return c_n_g(spec.a, spec.b);
    case FamilySpec::Kind::ThetaHat:
      return theta_hat(spec.a);
    case FamilySpec::Kind::PathBundle:
      return path_bundle(Composition(spec.k1));
  }
  throw std::logic_error("family: unreachable");
}

int family_arc_count(const FamilySpec& spec) {
  auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  switch (spec.kind) {
    case FamilySpec::Kind::Cycle:
      return spec.a;
    case FamilySpec::Kind::Rose:
      return total(spec.k1);
    case FamilySpec::Kind::Inf:
      return spec.a + spec.b + spec.c;
    case FamilySpec::Kind::Theta:
      return total(spec.k1) + total(spec.k2);
    case FamilySpec::Kind::CnG:
      return spec.a + 1;
    case FamilySpec::Kind::ThetaHat:
      return spec.a + 2;
    case FamilySpec::Kind::PathBundle:
      return total(spec.k1);
  }
  throw std::logic_error("family: unreachable");
}

FamilySpec spec_cycle(int n) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::Cycle;
  s.a = n;
  return s;
}

FamilySpec spec_rose(std::vector<int> parts) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::Rose;
  s.k1 = std::move(parts);
  return s;
}

FamilySpec spec_inf(int p, int q, int s_) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::Inf;
  s.a = p;
  s.b = q;
  s.c = s_;
  return s;
}

FamilySpec spec_theta(std::vector<int> k1, std::vector<int> k2) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::Theta;
  s.k1 = std::move(k1);
  s.k2 = std::move(k2);
  return s;
}

FamilySpec spec_cng(int n, int g) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::CnG;
  s.a = n;
  s.b = g;
  return s;
}

FamilySpec spec_theta_hat(int n) {
  FamilySpec s{};
  s.kind = FamilySpec::Kind::ThetaHat;
  s.a = n;
  return s;
}

}  // namespace spectra
