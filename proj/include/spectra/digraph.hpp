#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spectra {

using Arc = std::pair<int, int>;

/// Finite simple digraph: no loops, no multiple arcs; antiparallel pairs
/// (digons) are allowed. Arcs are stored sorted by (tail, head).
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;

  int order() const { return n; }
  int size() const { return static_cast<int>(arcs.size()); }

  bool has_arc(int u, int v) const;
  std::vector<int> out_degrees() const;
  std::vector<std::vector<int>> out_adj() const;
  std::vector<std::vector<int>> in_adj() const;
};

/// Validates endpoints and rejects loops; duplicate arcs are collapsed.
Digraph build_digraph(int n, std::vector<Arc> arcs);

bool is_strongly_connected(const Digraph& g);

/// Strongly connected components, listed by least contained vertex;
/// vertices inside a component are ascending.
std::vector<std::vector<int>> strong_components(const Digraph& g);

/// Subdigraph induced by `verts` (relabeled 0..k-1 in the given order).
Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& verts);

// JSON form {"n": int, "arcs": [[i,j],...]}, arcs sorted lexicographically.
std::string digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const std::string& text);

}  // namespace spectra
