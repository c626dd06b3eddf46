#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "spectra/majorization.hpp"

using namespace spectra;

namespace {

// Independent counter: partitions of m into exactly k parts, each >= min_part.
long count_partitions(int m, int k, int min_part, int max_part) {
  if (k == 0) return m == 0 ? 1 : 0;
  long total = 0;
  for (int v = min_part; v <= std::min(max_part, m - min_part * (k - 1)); ++v)
    total += count_partitions(m - v, k - 1, min_part, v);
  return total;
}

// All nonincreasing positive tuples of fixed length and sum (the ambient
// poset for the cover brute force).
std::vector<Composition> all_tuples(int m, int k) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> gen = [&](int rem, int left, int mx) {
    if (left == 0) {
      if (rem == 0) out.push_back(Composition(cur));
      return;
    }
    for (int v = std::min(mx, rem - (left - 1)); v >= 1; --v) {
      cur.push_back(v);
      gen(rem - v, left - 1, v);
      cur.pop_back();
    }
  };
  gen(m, k, m);
  return out;
}

}  // namespace

TEST_CASE("composition validation") {
  CHECK_THROWS_AS(Composition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
  const Composition c({4, 2, 2});
  CHECK(c.sum() == 8);
  CHECK(c.length() == 3);
  CHECK(c.in_S(8, 3));
  CHECK_FALSE(c.in_S(8, 2));
  CHECK(Composition({2, 2, 1}).in_S_tilde(5, 3));
  CHECK_FALSE(Composition({3, 1, 1}).in_S_tilde(5, 3));
}

TEST_CASE("weak majorization follows the ascending-sum definition") {
  const Composition a({4, 2, 2}), b({3, 3, 2});
  CHECK(weakly_majorizes(a, a));
  CHECK_FALSE(strictly_weakly_majorizes(a, a));
  // ascending partial sums 2,4,8 vs 2,5,8
  CHECK(weakly_majorizes(a, b));
  CHECK_FALSE(weakly_majorizes(b, a));
  CHECK(majorizes(a, b));
  CHECK(majorizes(Composition({6, 2, 2}), Composition({4, 3, 3})));
  CHECK_THROWS_AS(weakly_majorizes(a, Composition({4, 4})), std::invalid_argument);
}

TEST_CASE("ascending and descending conventions agree on equal sums") {
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{10, 3}, {12, 4}, {9, 2}}) {
    const auto set = all_tuples(m, k);
    for (const auto& x : set)
      for (const auto& y : set) {
        CHECK(weakly_majorizes(x, y) == desc_submajorizes(x, y));
      }
  }
}

TEST_CASE("cover relation examples") {
  CHECK(covers(Composition({4, 2, 2}), Composition({3, 3, 2})));
  CHECK_FALSE(covers(Composition({6, 2, 2}), Composition({4, 3, 3})));
  CHECK_FALSE(covers(Composition({3, 3, 2}), Composition({3, 3, 2})));
  // single transfer over a non-flat gap is not a cover
  CHECK(majorizes(Composition({4, 2, 1}), Composition({3, 2, 2})));
  CHECK_FALSE(covers(Composition({4, 2, 1}), Composition({3, 2, 2})));
}

TEST_CASE("cover matches the brute-force definition") {
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{9, 3}, {11, 4}, {8, 2}, {12, 3}}) {
    const auto set = all_tuples(m, k);
    for (const auto& x : set)
      for (const auto& y : set) {
        if (x == y) continue;
        bool expect = majorizes(x, y);
        if (expect) {
          for (const auto& z : set)
            if (majorizes(x, z) && majorizes(z, y)) {
              expect = false;
              break;
            }
        }
        CHECK(covers(x, y) == expect);
      }
  }
}

TEST_CASE("cover chains") {
  const auto short_chain = cover_chain(Composition({3, 3, 2}), Composition({4, 2, 2}));
  REQUIRE(short_chain.size() == 2);
  CHECK(short_chain[0] == Composition({3, 3, 2}));
  CHECK(short_chain[1] == Composition({4, 2, 2}));

  const auto chain = cover_chain(Composition({4, 3, 3}), Composition({6, 2, 2}));
  CHECK(chain.size() == 4);

  const auto self_chain = cover_chain(Composition({2, 2}), Composition({2, 2}));
  CHECK(self_chain.size() == 1);

  CHECK_THROWS_AS(cover_chain(Composition({4, 2, 2}), Composition({3, 3, 2})),
                  std::invalid_argument);

  // soundness over every comparable pair in a few posets
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{12, 3}, {13, 4}}) {
    for (const auto& lo : enum_S(m, k))
      for (const auto& hi : enum_S(m, k)) {
        if (!majorizes(hi, lo)) continue;
        const auto c = cover_chain(lo, hi);
        REQUIRE(c.size() >= 2);
        CHECK(c.front() == lo);
        CHECK(c.back() == hi);
        for (size_t i = 0; i + 1 < c.size(); ++i) {
          CHECK(covers(c[i + 1], c[i]));
          CHECK(majorizes(c[i + 1], c[i]));
        }
      }
  }
}

TEST_CASE("extremal elements of S_m^k") {
  CHECK(extremal_max_S(10, 3) == Composition({6, 2, 2}));
  CHECK(extremal_min_S(10, 3) == Composition({4, 3, 3}));
  CHECK(extremal_max_S(6, 3) == Composition({2, 2, 2}));
  CHECK(extremal_min_S(6, 3) == Composition({2, 2, 2}));
  CHECK(extremal_max_S(8, 3) == Composition({4, 2, 2}));
  CHECK(extremal_min_S(8, 3) == Composition({3, 3, 2}));
  CHECK_THROWS_AS(extremal_max_S(5, 3), std::invalid_argument);

  for (int m = 4; m <= 24; ++m)
    for (int k = 2; k <= 5 && 2 * k <= m; ++k) {
      const auto top = extremal_max_S(m, k);
      const auto bottom = extremal_min_S(m, k);
      for (const auto& e : enum_S(m, k)) {
        CHECK(weakly_majorizes(top, e));
        CHECK(weakly_majorizes(e, bottom));
      }
    }
}

TEST_CASE("zeta elements") {
  CHECK(zeta(9, 3) == Composition({6, 2, 1}));
  CHECK(zeta_flat(4) == Composition({2, 2, 2, 1}));
  CHECK(zeta(7, 4) == zeta_flat(4));
  CHECK(zeta(5, 1) == Composition({5}));
  CHECK(balanced_S_tilde(5, 3) == Composition({2, 2, 1}));
  CHECK(balanced_S_tilde(9, 3) == Composition({3, 3, 3}));
  CHECK_THROWS_AS(zeta(4, 3), std::invalid_argument);

  // zeta extremality over the union of the S~ posets, in the descending
  // submajorization order that compares across sums
  for (int t = 1; t <= 4; ++t)
    for (int m = 2 * t - 1; m <= 16; ++m) {
      const auto top = zeta(m, t);
      const auto bottom = zeta_flat(t);
      for (int i = 2 * t - 1; i <= m; ++i)
        for (const auto& e : enum_S_tilde(i, t)) {
          CHECK(desc_submajorizes(top, e));
          CHECK(desc_submajorizes(e, bottom));
        }
    }
}

TEST_CASE("enumerations") {
  const auto s83 = enum_S(8, 3);
  REQUIRE(s83.size() == 2);
  CHECK(s83[0] == Composition({4, 2, 2}));
  CHECK(s83[1] == Composition({3, 3, 2}));

  const auto st53 = enum_S_tilde(5, 3);
  REQUIRE(st53.size() == 1);
  CHECK(st53[0] == Composition({2, 2, 1}));

  CHECK(enum_S(5, 3).empty());
  CHECK(enum_S_tilde(4, 3).empty());

  for (int m = 4; m <= 24; ++m)
    for (int k = 1; k <= 5; ++k) {
      const auto got = enum_S(m, k);
      CHECK(static_cast<long>(got.size()) == count_partitions(m, k, 2, m));
      CHECK(std::is_sorted(got.rbegin(), got.rend()));
      std::set<std::vector<int>> dedup;
      for (const auto& c : got) dedup.insert(c.parts());
      CHECK(dedup.size() == got.size());
      for (const auto& c : got) CHECK(c.in_S(m, k));
    }
  for (int m = 1; m <= 16; ++m)
    for (int t = 1; t <= 4; ++t) {
      const auto got = enum_S_tilde(m, t);
      for (const auto& c : got) CHECK(c.in_S_tilde(m, t));
      // at most one 1 means: all-parts >= 2 partitions plus those with the
      // last part 1 and the rest >= 2
      const long expect = count_partitions(m, t, 2, m) + count_partitions(m - 1, t - 1, 2, m);
      CHECK(static_cast<long>(got.size()) == expect);
    }
}

TEST_CASE("Q pairs") {
  const auto q = enum_Q(10, 4);
  std::set<std::string> seen;
  for (const auto& [k1, k2] : q) {
    const int s = k1.length(), t = k2.length();
    CHECK(s + t == 4);
    CHECK(s >= t);
    CHECK(k1.in_S_tilde(k1.sum(), s));
    CHECK(k2.in_S_tilde(k2.sum(), t));
    CHECK(k1.sum() + k2.sum() == 10);
    seen.insert(k1.to_string() + "|" + k2.to_string());
  }
  CHECK(seen.size() == q.size());
  long manual = 0;
  for (int s = 3; s >= 2; --s) {
    const int t = 4 - s;
    for (int m1 = 2 * s - 1; m1 <= 10 - (2 * t - 1); ++m1)
      manual += static_cast<long>(enum_S_tilde(m1, s).size()) *
                static_cast<long>(enum_S_tilde(10 - m1, t).size());
  }
  CHECK(static_cast<long>(q.size()) == manual);
}
