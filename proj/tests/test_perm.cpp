#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "primaut/perm.hpp"
#include "primaut/subsets.hpp"

using namespace primaut;

namespace {

// Independent oracle: count invariant subsets by scanning all 2^n bitmasks.
std::uint64_t brute_invariant_count(const Permutation& g) {
  const unsigned n = g.degree();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (g.apply_mask(mask) == mask) ++count;
  return count;
}

Permutation random_permutation(unsigned n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (unsigned i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("compose identity and involution cases") {
  Permutation id(5);
  Permutation g = parse_permutation("(1,2,3)", 5);
  CHECK(id * g == g);
  CHECK(g * id == g);

  Permutation t = parse_permutation("(1,2)", 5);
  CHECK((t * t).is_identity());
}

TEST_CASE("compose is left-to-right") {
  // (0 1 2) then (0 1), evaluated point by point:
  // 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1, so the product is the
  // transposition (1 2) in 0-indexed points.
  Permutation a = parse_permutation("(1,2,3)", 3);
  Permutation b = parse_permutation("(1,2)", 3);
  Permutation product = a * b;
  CHECK(product.images() == std::vector<Point>({0, 2, 1}));
  CHECK(to_cycle_string(product) == "(2,3)");
}

TEST_CASE("compose rejects mismatched domains") {
  Permutation a(3), b(4);
  CHECK_THROWS_AS(a * b, InputError);
}

TEST_CASE("compose is associative and inverses cancel (randomized)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_permutation(9, rng);
    auto b = random_permutation(9, rng);
    auto c = random_permutation(9, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("cycle_data on the identity") {
  const auto cd = cycle_data(Permutation(6));
  CHECK(cd.fix_count == 6);
  CHECK(cd.orbit_count == 6);
  CHECK(cd.order == 1);
  CHECK(!cd.smallest_prime.has_value());
}

TEST_CASE("cycle_data on (0 1 2)(3 4) in degree 6") {
  const auto g = parse_permutation("(1,2,3)(4,5)", 6);
  const auto cd = cycle_data(g);
  CHECK(cd.fix_count == 1);
  CHECK(cd.orbit_count == 3);
  CHECK(cd.order == 6);
  CHECK(cd.smallest_prime == 2);
}

TEST_CASE("order-2 elements meet the cycle-count bound with equality") {
  // An involution with two fixed points on 6 points: cycle count is
  // (6 + (2-1)*2)/2 = 4 exactly when all moved cycles are 2-cycles.
  const auto g = parse_permutation("(1,2)(3,4)", 6);
  const auto cd = cycle_data(g);
  CHECK(cd.fix_count == 2);
  CHECK(cd.orbit_count == 4);
  CHECK(cd.orbit_count * 2 == 6 + (2 - 1) * cd.fix_count);
}

TEST_CASE("cycle_data order equals the true multiplicative order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_permutation(10, rng);
    const auto cd = cycle_data(g);
    REQUIRE(cd.order <= 60);
    Permutation power = g;
    unsigned long k = 1;
    while (!power.is_identity()) {
      power = power * g;
      ++k;
    }
    CHECK(cd.order == k);
  }
}

TEST_CASE("invariant_subset_count trivial cases") {
  CHECK(invariant_subset_count(Permutation(5)) == 32);
  const auto g = parse_permutation("(1,2,3)(4,5)", 6);
  CHECK(invariant_subset_count(g) == 8);
}

TEST_CASE("invariant_subset_count equals exhaustive bitmask count") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 3 + static_cast<unsigned>(rng() % 14);  // n <= 16
    const auto g = random_permutation(n, rng);
    CHECK(invariant_subset_count(g) == brute_invariant_count(g));
  }
}

TEST_CASE("cycle-count bound for non-identity permutations") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 15);
    const auto g = random_permutation(n, rng);
    if (g.is_identity()) continue;
    const auto cd = cycle_data(g);
    const unsigned p = *cd.smallest_prime;
    CHECK(p * cd.orbit_count <= n + (p - 1) * cd.fix_count);
  }
}

TEST_CASE("invariant_subsets yields exactly the unions of cycles") {
  SUBCASE("identity on 3 points gives all 8 subsets") {
    std::vector<std::uint64_t> subsets;
    for (auto mask : invariant_subsets(Permutation(3))) subsets.push_back(mask);
    std::sort(subsets.begin(), subsets.end());
    CHECK(subsets.size() == 8);
    for (std::uint64_t m = 0; m < 8; ++m) CHECK(subsets[m] == m);
  }
  SUBCASE("single 2-cycle gives the empty and full set") {
    const auto g = parse_permutation("(1,2)", 2);
    std::vector<std::uint64_t> subsets;
    for (auto mask : invariant_subsets(g)) subsets.push_back(mask);
    std::sort(subsets.begin(), subsets.end());
    CHECK(subsets == std::vector<std::uint64_t>({0b00, 0b11}));
  }
  SUBCASE("count matches invariant_subset_count on random permutations") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const unsigned n = 2 + static_cast<unsigned>(rng() % 15);
      const auto g = random_permutation(n, rng);
      const auto range = invariant_subsets(g);
      std::uint64_t count = 0;
      for (auto mask : range) {
        CHECK(g.apply_mask(mask) == mask);
        ++count;
      }
      CHECK(invariant_subset_count(g) == count);
    }
  }
  SUBCASE("enumeration limit is enforced") {
    CHECK_THROWS_AS(invariant_subsets(Permutation(31)), LimitError);
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(to_cycle_string(Permutation(4)) == "()");
  const auto g = parse_permutation(" (1, 2,3) (4,5) ", 6);
  CHECK(to_cycle_string(g) == "(1,2,3)(4,5)");
  CHECK(parse_permutation(to_cycle_string(g), 6) == g);
  // fixed points may be listed explicitly
  CHECK(parse_permutation("(1,2,3)(4,5)(6)", 6) == g);
}

TEST_CASE("cycle notation parse errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_permutation("(1,2", 4),
                       doctest::Contains("position"), InputError);
  CHECK_THROWS_AS(parse_permutation("(0,1)", 4), InputError);
  CHECK_THROWS_AS(parse_permutation("(1,5)", 4), InputError);
  CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", 4), InputError);
  CHECK_THROWS_AS(parse_permutation("", 4), InputError);
}

TEST_CASE("subset helpers") {
  CHECK(binomial_u64(21, 10) == 352716);
  CHECK(full_mask(5) == 0b11111);
  // unrank enumerates k-subsets in increasing mask order
  std::uint64_t mask = full_mask(3);
  for (std::uint64_t i = 0; i < binomial_u64(6, 3); ++i) {
    CHECK(unrank_subset(6, 3, i) == mask);
    mask = next_same_popcount(mask);
  }
}
