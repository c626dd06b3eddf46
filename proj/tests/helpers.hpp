#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "spectra/extremal.hpp"
#include "spectra/families.hpp"
#include "spectra/majorization.hpp"
#include "spectra/spectral.hpp"

namespace testutil {

inline bool rel_close(double a, double b, double tol = 1e-9) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

// Every named family instance with arc count <= max_m.
inline std::vector<spectra::FamilySpec> all_family_instances(int max_m) {
  using namespace spectra;
  std::vector<FamilySpec> out;
  for (int n = 2; n <= max_m; ++n) out.push_back(spec_cycle(n));
  for (int m = 4; m <= max_m; ++m)
    for (int k = 2; 2 * k <= m; ++k)
      for (const auto& comp : enum_S(m, k)) out.push_back(spec_rose(comp.parts()));
  for (int m = 6; m <= max_m; ++m)
    for (int q = 2; q <= m - 4; ++q)
      for (int s = 2; s <= m - q - 2; ++s) {
        const int p = m - q - s;
        if (p < s) continue;
        out.push_back(spec_inf(p, q, s));
      }
  for (int m = 3; m <= max_m; ++m)
    for (int k = 2; k <= m; ++k)
      for (int s = k - 1; 2 * s >= k && s >= 1; --s) {
        const int t = k - s;
        if (t < 1) continue;
        for (const auto& [k1, k2] : enum_theta_family(m, s, t))
          out.push_back(spec_theta(k1.parts(), k2.parts()));
      }
  for (int n = 4; n + 1 <= max_m; ++n)
    for (int g = 2; g <= n - 1; ++g) out.push_back(spec_cng(n, g));
  for (int n = 4; n + 2 <= max_m; ++n) out.push_back(spec_theta_hat(n));
  return out;
}

// Deterministic subsample: every step-th instance, at least `minimum` of them.
inline std::vector<spectra::FamilySpec> sample_instances(int max_m, size_t minimum) {
  auto all = all_family_instances(max_m);
  if (all.size() <= minimum) return all;
  const size_t step = all.size() / minimum;
  std::vector<spectra::FamilySpec> out;
  for (size_t i = 0; i < all.size(); i += step) out.push_back(all[i]);
  return out;
}

}  // namespace testutil
