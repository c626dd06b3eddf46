#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/digraph.hpp"
#include "spectra/majorization.hpp"

namespace spectra {

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Needs n >= 2 (n = 1 would be a
/// loop).
Digraph cycle(int n);

/// k directed cycles of lengths p_1..p_k sharing hub vertex 0; petal
/// internals are labeled petal by petal. Every part must be >= 2.
Digraph rose(const Composition& p);

/// Tri-ring: middle cycle C_q carrying u = 0 and v = 1 adjacent (u -> v an
/// arc of the middle cycle), with C_p attached at u and C_s at v.
/// n = p+q+s-2.
Digraph inf_digraph(int p, int q, int s);

/// Same with v placed `gap` steps after u along the middle cycle
/// (1 <= gap <= q-1). The characteristic polynomial does not depend on gap;
/// inf_digraph uses gap = 1.
Digraph inf_digraph_at(int p, int q, int s, int gap);

/// Internally disjoint directed u->v paths of lengths K, u = 0, v = 1,
/// internals labeled path by path. d-(u) = d+(v) = 0. At most one part may
/// be 1 (a second would duplicate the arc u->v).
Digraph path_bundle(const Composition& K);

/// Generalized theta: |K1| paths u->v and |K2| paths v->u, u = 0, v = 1.
Digraph theta(const Composition& K1, const Composition& K2);

/// Cycle C_n plus one chord giving girth g; returned in the theta labeling
/// theta((n+1-g, 1), (g-1)). Needs 2 <= g <= n-1.
Digraph c_n_g(int n, int g);

/// theta((2,2),(n-3)) plus the chord from the internal vertex of the first
/// length-2 path (label 2) to that of the second (label 3). n vertices,
/// n+2 arcs, n >= 4.
Digraph theta_hat(int n);

/// Length of the shortest directed cycle, or nullopt for acyclic input.
std::optional<int> girth(const Digraph& g);

/// Identify vertex v2 of g2 with vertex v1 of g1. g1 keeps its labels; the
/// remaining vertices of g2 follow in order.
Digraph coalesce(const Digraph& g1, int v1, const Digraph& g2, int v2);

/// C_p . C_q . G: middle cycle C_q with C_p coalesced at one vertex and
/// vertex u of G at an adjacent one.
Digraph chain_cycles(int p, int q, const Digraph& G, int u);

struct FamilySpec {
  enum class Kind { Cycle, Rose, Inf, Theta, CnG, ThetaHat, PathBundle };
  Kind kind;
  int a = 0, b = 0, c = 0;     // Cycle: n | Inf: p,q,s | CnG: n,g | ThetaHat: n
  std::vector<int> k1, k2;     // Rose/PathBundle: k1 | Theta: k1;k2

  friend bool operator==(const FamilySpec& x, const FamilySpec& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.c == y.c && x.k1 == y.k1 &&
           x.k2 == y.k2;
  }
};

// Text syntax: C(n), R(p1,p2,...), Inf(p,q,s), Th(k1,...;l1,...), CnG(n,g),
// ThHat(n), PB(k1,...). parse_family round-trips with print_family.
FamilySpec parse_family(const std::string& text);
std::string print_family(const FamilySpec& spec);

Digraph build_family(const FamilySpec& spec);
int family_arc_count(const FamilySpec& spec);

FamilySpec spec_cycle(int n);
FamilySpec spec_rose(std::vector<int> parts);
FamilySpec spec_inf(int p, int q, int s);
FamilySpec spec_theta(std::vector<int> k1, std::vector<int> k2);
FamilySpec spec_cng(int n, int g);
FamilySpec spec_theta_hat(int n);

}  // namespace spectra
