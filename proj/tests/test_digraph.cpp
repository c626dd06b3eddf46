#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "spectra/alpha.hpp"
#include "spectra/digraph.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;
using testutil::rel_close;

TEST_CASE("build_digraph basics") {
  const Digraph c3 = build_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.n == 3);
  CHECK(c3.size() == 3);
  CHECK(c3.has_arc(0, 1));
  CHECK_FALSE(c3.has_arc(1, 0));

  const Digraph digon = build_digraph(2, {{0, 1}, {1, 0}});
  CHECK(digon.size() == 2);

  CHECK_THROWS_AS(build_digraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_digraph(0, {}), std::invalid_argument);

  // duplicates collapse, arcs come out sorted
  const Digraph dup = build_digraph(3, {{2, 0}, {0, 1}, {2, 0}, {1, 2}});
  CHECK(dup.size() == 3);
  CHECK(dup.arcs == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("alpha matrix entries and row sums") {
  const Digraph c3 = cycle(3);
  const Matrix a0 = alpha_matrix(c3, 0.0);
  CHECK(a0.at(0, 1) == 1.0);
  CHECK(a0.at(0, 0) == 0.0);
  const Matrix ah = alpha_matrix(c3, 0.5);
  CHECK(ah.at(0, 0) == 0.5);
  CHECK(ah.at(0, 1) == 0.5);

  // Inf(2,2,2) at 0.2: diagonal (0.4, 0.4, 0.2, 0.2), 0.8 on the six arcs
  const Digraph inf222 = inf_digraph(2, 2, 2);
  const Matrix m = alpha_matrix(inf222, 0.2);
  CHECK(m.at(0, 0) == doctest::Approx(0.4));
  CHECK(m.at(1, 1) == doctest::Approx(0.4));
  CHECK(m.at(2, 2) == doctest::Approx(0.2));
  CHECK(m.at(3, 3) == doctest::Approx(0.2));
  int off = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && m.at(i, j) != 0.0) {
        CHECK(m.at(i, j) == doctest::Approx(0.8));
        ++off;
      }
  CHECK(off == 6);

  CHECK_THROWS_AS(alpha_matrix(c3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_matrix(c3, -0.1), std::invalid_argument);
}

TEST_CASE("row sums equal outdegrees across families") {
  EvalPointSampler sampler(101);
  for (const auto& spec : testutil::sample_instances(12, 60)) {
    const Digraph g = build_family(spec);
    const double alpha = sampler.next().alpha;
    const Matrix m = alpha_matrix(g, alpha);
    const auto deg = g.out_degrees();
    for (int i = 0; i < g.n; ++i) {
      double sum = 0.0;
      for (int j = 0; j < g.n; ++j) sum += m.at(i, j);
      CHECK(rel_close(sum, deg[i], 1e-12));
    }
  }
}

TEST_CASE("strong connectivity and components") {
  CHECK(is_strongly_connected(cycle(5)));
  CHECK_FALSE(is_strongly_connected(build_digraph(3, {{0, 1}, {1, 2}})));
  CHECK(is_strongly_connected(theta(Composition({2, 2}), Composition({3}))));
  CHECK(is_strongly_connected(build_digraph(1, {})));

  CHECK(strong_components(cycle(4)).size() == 1);

  const Digraph two_digons = build_digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const auto comps = strong_components(two_digons);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});

  const Digraph with_isolated = build_digraph(3, {{0, 1}, {1, 0}});
  const auto comps2 = strong_components(with_isolated);
  REQUIRE(comps2.size() == 2);
  CHECK(comps2[0] == std::vector<int>{0, 1});
  CHECK(comps2[1] == std::vector<int>{2});
}

TEST_CASE("charpoly oracle pinned values") {
  CHECK(charpoly_oracle(cycle(3), EvalPoint(2.0, 0.0)) == doctest::Approx(7.0));
  CHECK(charpoly_oracle(inf_digraph(2, 2, 2), EvalPoint(2.0, 0.0)) == doctest::Approx(5.0));
  // phi_alpha(C_n) = (x-a)^n - (1-a)^n, so at x = a it is -(1-a)^n
  for (int n : {3, 6}) {
    for (double a : {0.0, 0.3, 0.7}) {
      CHECK(rel_close(charpoly_oracle(cycle(n), EvalPoint(a, a)), -std::pow(1.0 - a, n), 1e-12));
    }
  }
}

TEST_CASE("submatrix determinant: principal minors and cofactors") {
  for (int n : {3, 5, 8}) {
    const Digraph c = cycle(n);
    for (double a : {0.0, 0.4}) {
      const double x = 1.7;
      CHECK(rel_close(submatrix_det(c, a, {1}, {1}, x), std::pow(x - a, n - 1), 1e-12));
    }
  }
  // path bundle (2,1): the (v|u) cofactor is (x-a)^(n-1) (d^2 + d) = 3 here
  const Digraph pb = path_bundle(Composition({2, 1}));
  CHECK(submatrix_det(pb, 0.0, {1}, {0}, 2.0) == doctest::Approx(3.0));
  // empty deletion is the characteristic polynomial itself
  EvalPointSampler sampler(77);
  const auto pool = testutil::sample_instances(10, 25);
  for (int i = 0; i < 100; ++i) {
    const EvalPoint p = sampler.next();
    const Digraph g = build_family(pool[i % pool.size()]);
    CHECK(rel_close(submatrix_det(g, p.alpha, {}, {}, p.x), charpoly_oracle(g, p), 1e-12));
  }
  CHECK_THROWS_AS(submatrix_det(pb, 0.0, {1}, {}, 2.0), std::invalid_argument);
}

TEST_CASE("spectrum of a disjoint union factors through the components") {
  std::vector<Digraph> cases;
  std::vector<bool> cross;
  {
    Digraph b = theta(Composition({2, 1}), Composition({2}));
    std::vector<Arc> arcs = cycle(3).arcs;
    for (auto [u, v] : b.arcs) arcs.emplace_back(u + 3, v + 3);
    cases.push_back(build_digraph(3 + b.n, arcs));
    cross.push_back(false);
    arcs.emplace_back(0, 3);  // condensation chain: exact only at alpha = 0
    cases.push_back(build_digraph(3 + b.n, arcs));
    cross.push_back(true);
  }
  {
    Digraph a = rose(Composition({3, 2}));
    cases.push_back(build_digraph(a.n + 2, a.arcs));  // plus two isolated vertices
    cross.push_back(false);
  }
  EvalPointSampler sampler(2024);
  for (size_t c = 0; c < cases.size(); ++c) {
    const Digraph& g = cases[c];
    for (int i = 0; i < 20; ++i) {
      EvalPoint p = sampler.next();
      if (cross[c]) p = EvalPoint(p.x, 0.0);  // cross arcs shift diagonals when alpha > 0
      double prod = 1.0;
      for (const auto& comp : strong_components(g))
        prod *= charpoly_oracle(induced_subdigraph(g, comp), p);
      CHECK(rel_close(charpoly_oracle(g, p), prod, 1e-9));
    }
  }
}

TEST_CASE("dropping an arc raises the polynomial above the radius") {
  EvalPointSampler sampler(5);
  int done = 0;
  for (const auto& spec : testutil::sample_instances(12, 70)) {
    const Digraph g = build_family(spec);
    if (!is_strongly_connected(g)) continue;
    const double alpha = sampler.next().alpha;
    const double rho = spectral_radius(g, alpha).rho;
    std::vector<Arc> arcs = g.arcs;
    arcs.erase(arcs.begin() + static_cast<long>(done % arcs.size()));
    const Digraph sub = build_digraph(g.n, arcs);
    for (double dx : {0.0, 0.05, 0.5, 2.0}) {
      const EvalPoint p(rho + dx, alpha);
      CHECK(charpoly_oracle(sub, p) >= charpoly_oracle(g, p) - 1e-9);
    }
    ++done;
  }
  CHECK(done >= 50);
}

TEST_CASE("digraph json round trip") {
  const Digraph g = theta(Composition({2, 2}), Composition({3}));
  const std::string json = digraph_to_json(g);
  const Digraph back = digraph_from_json(json);
  CHECK(back.n == g.n);
  CHECK(back.arcs == g.arcs);
  CHECK(json.find("\"n\":") != std::string::npos);
  CHECK_THROWS_AS(digraph_from_json("{\"n\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(digraph_from_json("{\"n\": 2, \"arcs\": [[0,0]]}"), std::invalid_argument);
}
