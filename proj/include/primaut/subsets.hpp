#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "primaut/errors.hpp"
#include "primaut/perm.hpp"

namespace primaut {

// Subsets of {0..n-1} as 64-bit masks. All subset-level operations in this
// project require n <= 64 and reject larger domains explicitly.

inline void require_mask_domain(unsigned n) {
  if (n > 64) throw LimitError("subset operations require degree <= 64");
}

inline std::uint64_t full_mask(unsigned n) {
  require_mask_domain(n);
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline unsigned popcount(std::uint64_t mask) {
  return static_cast<unsigned>(std::popcount(mask));
}

/// Next mask with the same popcount (Gosper's hack); 0 once exhausted.
inline std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t u = x & (~x + 1);
  const std::uint64_t v = u + x;
  if (v == 0) return 0;
  return v + (((v ^ x) / u) >> 2);
}

inline std::vector<Point> mask_to_points(std::uint64_t mask) {
  std::vector<Point> points;
  while (mask) {
    points.push_back(static_cast<Point>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return points;
}

inline std::uint64_t points_to_mask(const std::vector<Point>& points, unsigned n) {
  require_mask_domain(n);
  std::uint64_t mask = 0;
  for (Point p : points) {
    if (p >= n) throw InputError("subset point out of range");
    mask |= std::uint64_t{1} << p;
  }
  return mask;
}

/// C(n, k) as uint64; throws on overflow (callers stay well below that).
std::uint64_t binomial_u64(unsigned n, unsigned k);

/// The index-th k-subset of {0..n-1} in increasing numeric (mask) order.
std::uint64_t unrank_subset(unsigned n, unsigned k, std::uint64_t index);

}  // namespace primaut
