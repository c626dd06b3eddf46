#include "spectra/majorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectra {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition: must have at least one part");
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("composition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("composition: parts must be nonincreasing");
  }
}

int Composition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::in_S(int m, int k) const {
  if (length() != k || sum() != m) return false;
  return parts_.back() >= 2;
}

bool Composition::in_S_tilde(int m, int t) const {
  if (length() != t || sum() != m) return false;
  if (t >= 2 && parts_[t - 2] < 2) return false;  // at most one trailing 1
  return true;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

std::vector<long> ascending_prefix_sums(const Composition& c) {
  std::vector<int> asc(c.parts().rbegin(), c.parts().rend());
  std::vector<long> ps(asc.size());
  long acc = 0;
  for (size_t i = 0; i < asc.size(); ++i) ps[i] = (acc += asc[i]);
  return ps;
}

void require_equal_length(const Composition& x, const Composition& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("majorization: compositions must have equal length");
}

}  // namespace

bool weakly_majorizes(const Composition& x, const Composition& y) {
  require_equal_length(x, y);
  const auto px = ascending_prefix_sums(x);
  const auto py = ascending_prefix_sums(y);
  for (size_t i = 0; i < px.size(); ++i)
    if (px[i] > py[i]) return false;
  return true;
}

bool strictly_weakly_majorizes(const Composition& x, const Composition& y) {
  return weakly_majorizes(x, y) && x != y;
}

bool majorizes(const Composition& x, const Composition& y) {
  return strictly_weakly_majorizes(x, y) && x.sum() == y.sum();
}

bool desc_submajorizes(const Composition& x, const Composition& y) {
  require_equal_length(x, y);
  long ax = 0, ay = 0;
  for (int i = 0; i < x.length(); ++i) {
    ax += x.parts()[i];
    ay += y.parts()[i];
    if (ax < ay) return false;
  }
  return true;
}

bool covers(const Composition& x, const Composition& y) {
  if (x.length() != y.length() || x.sum() != y.sum()) return false;
  int up = -1, down = -1;
  for (int i = 0; i < x.length(); ++i) {
    const int diff = x.parts()[i] - y.parts()[i];
    if (diff == 0) continue;
    if (diff == 1 && up < 0)
      up = i;
    else if (diff == -1 && down < 0)
      down = i;
    else
      return false;
  }
  if (up < 0 || down < 0 || up >= down) return false;
  return down == up + 1 || y.parts()[up] == y.parts()[down];
}

namespace {

// All covers of y within positive nonincreasing tuples.
std::vector<Composition> covers_above(const Composition& y) {
  std::vector<std::vector<int>> seen;
  std::vector<Composition> out;
  const auto& p = y.parts();
  const int k = y.length();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || p[j] <= 1) continue;
      std::vector<int> z = p;
      ++z[i];
      --z[j];
      std::sort(z.rbegin(), z.rend());
      if (std::find(seen.begin(), seen.end(), z) != seen.end()) continue;
      seen.push_back(z);
      Composition c(z);
      if (covers(c, y)) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Composition> cover_chain(const Composition& a, const Composition& b) {
  if (a == b) return {a};
  if (!majorizes(b, a))
    throw std::invalid_argument("cover_chain: first argument must be majorized by second");
  std::vector<Composition> chain{a};
  Composition cur = a;
  while (cur != b) {
    bool advanced = false;
    for (const Composition& z : covers_above(cur)) {
      if (z == b || majorizes(b, z)) {
        chain.push_back(z);
        cur = z;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("cover_chain: no cover step toward target");
  }
  return chain;
}

Composition extremal_max_S(int m, int k) {
  if (k < 1 || m < 2 * k) throw std::invalid_argument("extremal_max_S: requires m >= 2k, k >= 1");
  std::vector<int> p(k, 2);
  p[0] = m - 2 * (k - 1);
  return Composition(p);
}

Composition extremal_min_S(int m, int k) {
  if (k < 1 || m < 2 * k) throw std::invalid_argument("extremal_min_S: requires m >= 2k, k >= 1");
  const int q = m / k, r = m % k;
  std::vector<int> p(k, q);
  for (int i = 0; i < r; ++i) ++p[i];
  return Composition(p);
}

Composition zeta(int m, int t) {
  if (t < 1 || m < 2 * t - 1) throw std::invalid_argument("zeta: requires m >= 2t-1, t >= 1");
  if (t == 1) return Composition({m});
  std::vector<int> p(t, 2);
  p[0] = m - 2 * t + 3;
  p[t - 1] = 1;
  return Composition(p);
}

Composition zeta_flat(int t) {
  if (t < 1) throw std::invalid_argument("zeta_flat: requires t >= 1");
  std::vector<int> p(t, 2);
  p[t - 1] = 1;
  return Composition(p);
}

Composition balanced_S_tilde(int m, int t) {
  if (t < 1 || m < 2 * t - 1)
    throw std::invalid_argument("balanced_S_tilde: requires m >= 2t-1, t >= 1");
  const int q = m / t, r = m % t;
  std::vector<int> p(t, q);
  for (int i = 0; i < r; ++i) ++p[i];
  return Composition(p);
}

namespace {

void gen_parts(int remaining, int k, int max_part, int min_part, std::vector<int>& cur,
               std::vector<Composition>& out) {
  if (k == 0) {
    if (remaining == 0) out.push_back(Composition(cur));
    return;
  }
  const int hi = std::min(max_part, remaining - min_part * (k - 1));
  for (int v = hi; v >= min_part; --v) {
    cur.push_back(v);
    gen_parts(remaining - v, k - 1, v, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> enum_S(int m, int k) {
  std::vector<Composition> out;
  if (k < 1 || m < 2 * k) return out;
  std::vector<int> cur;
  gen_parts(m, k, m, 2, cur, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<Composition> enum_S_tilde(int m, int t) {
  std::vector<Composition> out;
  if (t < 1 || m < 2 * t - 1) return out;
  std::vector<int> cur;
  gen_parts(m, t, m, 1, cur, out);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Composition& c) { return !c.in_S_tilde(m, t); }),
            out.end());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<QPair> enum_Q(int m, int k) {
  std::vector<QPair> out;
  if (k < 2) return out;
  for (int s = k - 1; 2 * s >= k; --s) {
    const int t = k - s;
    for (int m1 = m - (2 * t - 1); m1 >= 2 * s - 1; --m1) {
      const int m2 = m - m1;
      for (const auto& k1 : enum_S_tilde(m1, s))
        for (const auto& k2 : enum_S_tilde(m2, t)) out.push_back(QPair{k1, k2});
    }
  }
  return out;
}

}  // namespace spectra
