#include "primaut/subsets.hpp"

#include <array>
#include <limits>

namespace primaut {

namespace {

// Pascal table up to n = 64; every C(n<=64, k) fits in uint64.
const std::array<std::array<std::uint64_t, 65>, 65>& pascal_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (unsigned n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (n > 64) throw LimitError("binomial_u64 supports n <= 64");
  if (k > n) return 0;
  return pascal_table()[n][k];
}

std::uint64_t unrank_subset(unsigned n, unsigned k, std::uint64_t index) {
  require_mask_domain(n);
  if (k > n || index >= binomial_u64(n, k))
    throw InputError("subset rank out of range");
  std::uint64_t mask = 0;
  while (k > 0) {
    unsigned h = k - 1;
    while (h + 1 < n && binomial_u64(h + 1, k) <= index) ++h;
    mask |= std::uint64_t{1} << h;
    index -= binomial_u64(h, k);
    k -= 1;
    n = h;
  }
  return mask;
}

}  // namespace primaut
