#include "spectra/digraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace spectra {

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{u, v});
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> d(n, 0);
  for (const auto& [u, v] : arcs) {
    (void)v;
    ++d[u];
  }
  return d;
}

std::vector<std::vector<int>> Digraph::out_adj() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : arcs) adj[u].push_back(v);
  return adj;
}

std::vector<std::vector<int>> Digraph::in_adj() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : arcs) adj[v].push_back(u);
  return adj;
}

Digraph build_digraph(int n, std::vector<Arc> arcs) {
  if (n <= 0) throw std::invalid_argument("digraph: vertex count must be positive");
  for (const auto& [u, v] : arcs) {
    if (u == v)
      throw std::invalid_argument("digraph: loop arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not allowed");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("digraph: arc endpoint out of range (" + std::to_string(u) +
                                  "," + std::to_string(v) + ") with n=" + std::to_string(n));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph{n, std::move(arcs)};
}

namespace {

void dfs_order(const std::vector<std::vector<int>>& adj, int start, std::vector<char>& seen,
               std::vector<int>& out) {
  // iterative post-order
  std::vector<std::pair<int, size_t>> stack{{start, 0}};
  seen[start] = 1;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < adj[v].size()) {
      int w = adj[v][idx++];
      if (!seen[w]) {
        seen[w] = 1;
        stack.emplace_back(w, 0);
      }
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& g) {
  // Kosaraju: post-order on g, then sweeps on the transpose.
  const auto adj = g.out_adj();
  const auto radj = g.in_adj();
  std::vector<char> seen(g.n, 0);
  std::vector<int> order;
  order.reserve(g.n);
  for (int v = 0; v < g.n; ++v)
    if (!seen[v]) dfs_order(adj, v, seen, order);

  std::fill(seen.begin(), seen.end(), 0);
  std::vector<std::vector<int>> comps;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (seen[*it]) continue;
    std::vector<int> comp;
    std::vector<int> stack{*it};
    seen[*it] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : radj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

bool is_strongly_connected(const Digraph& g) {
  return strong_components(g).size() == 1;
}

Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.arcs)
    if (pos[u] >= 0 && pos[v] >= 0) arcs.emplace_back(pos[u], pos[v]);
  return build_digraph(static_cast<int>(verts.size()), std::move(arcs));
}

std::string digraph_to_json(const Digraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto arr = nlohmann::json::array();
  for (const auto& [u, v] : g.arcs) arr.push_back({u, v});
  j["arcs"] = std::move(arr);
  return j.dump();
}

Digraph digraph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw std::invalid_argument("digraph json: expected object with \"n\" and \"arcs\"");
  int n = j["n"].get<int>();
  std::vector<Arc> arcs;
  for (const auto& e : j["arcs"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("digraph json: arcs must be [tail, head] pairs");
    arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_digraph(n, std::move(arcs));
}

}  // namespace spectra
