#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "primaut/hypergraph.hpp"
#include "primaut/search.hpp"
#include "primaut/subsets.hpp"

using namespace primaut;

namespace {

PermutationGroup sym(unsigned n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermutationGroup::from_generators(
      n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})});
}

PermutationGroup cyclic(unsigned n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermutationGroup::from_generators(n, {Permutation::from_cycles(n, {cyc})});
}

PermutationGroup dihedral(unsigned n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  std::vector<Point> flip(n);
  for (Point p = 0; p < n; ++p) flip[p] = static_cast<Point>((n - p) % n);
  return PermutationGroup::from_generators(
      n, {Permutation::from_cycles(n, {cyc}), Permutation::from_images(flip)});
}

PermutationGroup agl1_5() {
  // x -> x+1 and x -> 2x on F5; order 20
  return PermutationGroup::from_generators(
      5, {parse_permutation("(1,2,3,4,5)", 5), parse_permutation("(2,3,5,4)", 5)});
}

// Oracle: subsets fixed setwise by some non-identity element, by scanning
// all 2^n subsets against the full element list.
mpz_class brute_fixed_total(const std::vector<PermutationGroup>& groups) {
  const unsigned n = groups.front().degree();
  REQUIRE(n <= 12);
  std::vector<Permutation> elements;
  for (const auto& g : groups)
    g.for_each_element([&](const Permutation& x) {
      if (!x.is_identity()) elements.push_back(x);
    });
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (const auto& x : elements)
      if (x.apply_mask(s) == s) {
        ++count;
        break;
      }
  }
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace

TEST_CASE("random search rejects symmetric and alternating inputs") {
  SearchConfig cfg;
  CHECK_THROWS_AS(random_search(sym(6), cfg), InputError);
}

TEST_CASE("random search finds nothing for C5") {
  SearchConfig cfg;
  cfg.trials = 16;
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    cfg.seed = seed;
    auto result = random_search(cyclic(5), cfg);
    CHECK(result.status == RealizationStatus::inconclusive);
    CHECK_FALSE(result.witness.has_value());
  }
}

TEST_CASE("random search realizes D7 and is deterministic") {
  SearchConfig cfg;
  cfg.seed = 7;
  auto first = random_search(dihedral(7), cfg);
  auto second = random_search(dihedral(7), cfg);
  REQUIRE(first.status == RealizationStatus::realized);
  REQUIRE(first.witness.has_value());
  CHECK(realizes(dihedral(7), *first.witness));
  CHECK(first.witness == second.witness);
  CHECK(first.trials_used == second.trials_used);
}

TEST_CASE("exhaustive certification: C5 and AGL(1,5) are exceptions") {
  SearchConfig cfg;
  auto c5 = exhaustive_certify(cyclic(5), cfg);
  CHECK(c5.status == RealizationStatus::exception_certified);
  REQUIRE(c5.ranks_realizable.has_value());
  CHECK(c5.ranks_realizable->empty());

  auto agl = exhaustive_certify(agl1_5(), cfg);
  CHECK(agl.status == RealizationStatus::exception_certified);
}

TEST_CASE("exhaustive certification: D5 and D7 are realized") {
  SearchConfig cfg;
  auto d5 = exhaustive_certify(dihedral(5), cfg);
  REQUIRE(d5.status == RealizationStatus::realized);
  CHECK(realizes(dihedral(5), *d5.witness));

  auto d7 = exhaustive_certify(dihedral(7), cfg, /*rank_profile=*/true);
  REQUIRE(d7.status == RealizationStatus::realized);
  REQUIRE(d7.ranks_realizable.has_value());
  CHECK_FALSE(d7.ranks_realizable->empty());
  // complement duality in the profile
  for (unsigned r : *d7.ranks_realizable)
    CHECK(d7.ranks_realizable->count(7 - r) == 1);
}

TEST_CASE("rank profile mirrors a direct scan of large sizes") {
  // check r and n-r agree by testing the complement witness directly
  SearchConfig cfg;
  auto result = exhaustive_certify(dihedral(7), cfg, true);
  REQUIRE(result.witness.has_value());
  const std::uint64_t complement = full_mask(7) & ~*result.witness;
  CHECK(realizes(dihedral(7), complement));
}

TEST_CASE("random and exhaustive searches never disagree") {
  SearchConfig cfg;
  cfg.trials = 24;
  for (unsigned n : {5u, 6u, 7u}) {
    auto g = dihedral(n);
    if (!g.is_primitive()) continue;
    auto random_result = random_search(g, cfg);
    auto exhaustive_result = exhaustive_certify(g, cfg);
    if (random_result.status == RealizationStatus::realized)
      CHECK(exhaustive_result.status == RealizationStatus::realized);
  }
}

TEST_CASE("realized status is stable under conjugation") {
  std::mt19937_64 rng(99);
  SearchConfig cfg;
  for (const auto& g : {dihedral(7), cyclic(7)}) {
    const auto base = exhaustive_certify(g, cfg);
    std::vector<Point> images(7);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 7; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    const Permutation sigma = Permutation::from_images(images);
    std::vector<Permutation> conj_gens;
    for (const auto& gen : g.generators())
      conj_gens.push_back(sigma.inverse() * gen * sigma);
    auto conj = PermutationGroup::from_generators(7, conj_gens);
    const auto conj_result = exhaustive_certify(conj, cfg);
    CHECK(base.status == conj_result.status);
    if (base.witness && conj_result.witness)
      CHECK(popcount(*base.witness) == popcount(*conj_result.witness));
    // the conjugated witness realizes the conjugated group
    if (base.witness) CHECK(realizes(conj, sigma.apply_mask(*base.witness)));
  }
}

TEST_CASE("fixed family of C5") {
  auto report = fixed_family(cyclic(5));
  CHECK(report.total_fixed == 2);  // only {} and the full set
  CHECK(report.has_regular_orbit);
  REQUIRE(report.regular_subset_witness.has_value());
  // the witness has a trivial setwise stabilizer
  auto stab = cyclic(5).set_stabilizer(*report.regular_subset_witness);
  CHECK(stab.order() == 1);
}

TEST_CASE("fixed family of AGL(1,5) and Sym(4): no regular orbit") {
  auto agl = fixed_family(agl1_5());
  CHECK_FALSE(agl.has_regular_orbit);
  CHECK(agl.total_fixed == 32);

  auto s4 = fixed_family(sym(4));
  CHECK_FALSE(s4.has_regular_orbit);
  CHECK(s4.total_fixed == 16);
}

TEST_CASE("fixed family totals match the exhaustive subset scan") {
  for (const auto& g : {cyclic(6), dihedral(7), agl1_5(), sym(5)}) {
    auto report = fixed_family(g);
    CHECK(report.total_fixed == brute_fixed_total({g}));
    // Lemma-style envelope: total <= sum of 2^orb over prime-order classes
    mpz_class envelope = 0;
    for (const auto& c : report.by_class) envelope += c.invariant_sum;
    CHECK(report.total_fixed <= envelope);
    CHECK(report.total_fixed >= 2);
    mpz_class all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, g.degree());
    CHECK(report.has_regular_orbit == (report.total_fixed < all));
  }
}

TEST_CASE("fixed family rejects the trivial group") {
  CHECK_THROWS_AS(fixed_family(PermutationGroup::trivial(4)), InputError);
}

TEST_CASE("s_family with the group itself equals fixed_family") {
  auto g = dihedral(6);
  auto a = fixed_family(g);
  auto b = s_family(g, {g});
  CHECK(a.total_fixed == b.total_fixed);
  CHECK(a.has_regular_orbit == b.has_regular_orbit);
}

TEST_CASE("s_family with Sym(n) marks every subset") {
  for (unsigned n : {4u, 6u}) {
    auto g = cyclic(n);
    auto report = s_family(g, {sym(n)});
    mpz_class all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, n);
    CHECK(report.total_fixed == all);
    CHECK_FALSE(report.has_regular_orbit);
  }
}

TEST_CASE("s_family union matches the direct bitmap oracle") {
  auto g = cyclic(6);
  std::vector<PermutationGroup> overgroups = {cyclic(6), dihedral(6)};
  auto report = s_family(g, overgroups);
  CHECK(report.total_fixed == brute_fixed_total(overgroups));
  // per-overgroup classes are tagged
  bool saw_second = false;
  for (const auto& c : report.by_class)
    if (c.overgroup_index == 1) saw_second = true;
  CHECK(saw_second);
}

TEST_CASE("s_family rejects non-overgroups") {
  CHECK_THROWS_AS(s_family(cyclic(6), {dihedral(5)}), InputError);
  CHECK_THROWS_AS(s_family(sym(5), {agl1_5()}), InputError);
}

TEST_CASE("orbit minimality") {
  auto c6 = cyclic(6);
  CHECK(is_orbit_minimal(c6, 0b000011));
  CHECK_FALSE(is_orbit_minimal(c6, 0b000110));  // shift down is smaller
  // each orbit has exactly one minimal element
  for (unsigned r = 1; r <= 3; ++r) {
    unsigned minima = 0;
    std::uint64_t mask = full_mask(r);
    for (std::uint64_t i = 0; i < binomial_u64(6, r); ++i) {
      if (is_orbit_minimal(c6, mask)) ++minima;
      mask = next_same_popcount(mask);
    }
    std::set<std::vector<std::uint64_t>> orbits;
    mask = full_mask(r);
    for (std::uint64_t i = 0; i < binomial_u64(6, r); ++i) {
      orbits.insert(c6.subset_orbit(mask));
      mask = next_same_popcount(mask);
    }
    CHECK(minima == orbits.size());
  }
}

TEST_CASE("exhaustive certification respects parallel jobs") {
  SearchConfig cfg1, cfg4;
  cfg4.jobs = 4;
  auto a = exhaustive_certify(dihedral(7), cfg1, true);
  auto b = exhaustive_certify(dihedral(7), cfg4, true);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
  CHECK(a.ranks_realizable == b.ranks_realizable);
}
