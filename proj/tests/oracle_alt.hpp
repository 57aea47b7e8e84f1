#pragma once

// Independent second enumeration of three-term decompositions, kept apart from
// the production oracle on purpose: descending interval scans in plain 64-bit
// arithmetic, no divisor machinery. k/n = 1/x + 1/y + 1/z with x <= y <= z.
// Safe for n up to a few thousand (denominators stay far below 2^63).

#include <algorithm>
#include <cstdint>
#include <vector>

struct AltTriple {
  long long x, y, z;
  auto operator<=>(const AltTriple&) const = default;
};

inline std::vector<AltTriple> solve_three_alt(long long k, long long n) {
  std::vector<AltTriple> out;
  // x in (n/k, 3n/k], descending
  long long x_hi = (3 * n) / k;
  long long x_lo = n / k + 1;
  for (long long x = x_hi; x >= x_lo; --x) {
    // residual k/n - 1/x = (k*x - n) / (n*x)
    long long rn = k * x - n;
    long long rd = n * x;
    if (rn <= 0) continue;
    // y in [max(x, ceil(rd/rn)), floor(2*rd/rn)], descending
    long long y_lo = std::max(x, (rd + rn - 1) / rn);
    long long y_hi = (2 * rd) / rn;
    for (long long y = y_hi; y >= y_lo; --y) {
      // 1/z = rn/rd - 1/y = (rn*y - rd) / (rd*y)
      long long zn = rn * y - rd;
      if (zn <= 0) continue;
      long long zd = rd * y;
      if (zd % zn != 0) continue;
      long long z = zd / zn;
      if (z >= y) out.push_back({x, y, z});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}
