#pragma once

#include <string>
#include <vector>

namespace spectra {

/// Nonincreasing tuple of positive integers. Construction rejects unsorted
/// input instead of sorting silently.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;

  /// Membership in S_m^k: exactly k parts, every part >= 2, sum m.
  bool in_S(int m, int k) const;
  /// Membership in S~_m^t: exactly t parts, at most one part equal to 1, sum m.
  bool in_S_tilde(int m, int t) const;

  std::string to_string() const;  // "(4,2,2)"

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Weak majorization exactly as defined on ascending rearrangements:
// x >= y iff sum of the k smallest entries of x is <= that of y for every k.
// For equal sums this is the usual majorization order (x more concentrated).
bool weakly_majorizes(const Composition& x, const Composition& y);
bool strictly_weakly_majorizes(const Composition& x, const Composition& y);

/// Strict majorization: strictly weak plus equal sums.
bool majorizes(const Composition& x, const Composition& y);

// Conventional submajorization on descending partial sums (>=), which admits
// unequal sums with the larger-sum side on top. Agrees with weakly_majorizes
// on equal-sum inputs; it is the order under which the zeta elements are the
// extremes of the union of the S~ posets.
bool desc_submajorizes(const Composition& x, const Composition& y);

/// Cover relation of the dominance order: x = y + e_i - e_j as sorted tuples
/// with no element strictly between. Single unit transfer where the donor and
/// receiver are adjacent or carry equal parts.
bool covers(const Composition& x, const Composition& y);

/// Saturated chain a = x_1 < ... < x_l = b, consecutive steps covers().
/// Requires a majorized by b (or a == b, giving the singleton chain).
std::vector<Composition> cover_chain(const Composition& a, const Composition& b);

Composition extremal_max_S(int m, int k);  // (m-2k+2, 2, ..., 2)
Composition extremal_min_S(int m, int k);  // balanced: q+1 r times then q
Composition zeta(int m, int t);            // max of S~_m^t: (m-2t+3, 2,...,2, 1)
Composition zeta_flat(int t);              // (2,...,2, 1)
Composition balanced_S_tilde(int m, int t);  // min of S~_m^t

// Complete duplicate-free enumerations in lexicographically descending order.
// Empty parameters give empty lists, not errors.
std::vector<Composition> enum_S(int m, int k);
std::vector<Composition> enum_S_tilde(int m, int t);

struct QPair {
  Composition k1, k2;
};

/// Q(m,k): pairs (K1, K2) with K1 in S~_{m1}^s, K2 in S~_{m2}^t, s+t = k,
/// m1+m2 = m, s >= t.
std::vector<QPair> enum_Q(int m, int k);

}  // namespace spectra
