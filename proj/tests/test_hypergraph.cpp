#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "primaut/hypergraph.hpp"
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

// Exhaustive oracle: filter all n! permutations for edge preservation.
std::uint64_t brute_aut_order(const Hypergraph& h) {
  const unsigned n = h.vertex_count();
  REQUIRE(n <= 8);
  std::unordered_set<std::uint64_t> edge_set(h.edges().begin(), h.edges().end());
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::uint64_t count = 0;
  do {
    const Permutation g = Permutation::from_images(images);
    bool ok = true;
    for (std::uint64_t e : h.edges())
      if (!edge_set.count(g.apply_mask(e))) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

std::vector<std::uint64_t> all_k_subsets(unsigned n, unsigned k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < binomial_u64(n, k); ++i)
    out.push_back(unrank_subset(n, k, i));
  return out;
}

}  // namespace

TEST_CASE("hypergraph construction and rank") {
  Hypergraph h(5, {0b00011, 0b00110, 0b00011});
  CHECK(h.edges().size() == 2);  // duplicates removed
  CHECK(h.rank() == 2);
  Hypergraph mixed(5, {0b00011, 0b00111});
  CHECK_FALSE(mixed.is_uniform());
  CHECK_THROWS_AS(Hypergraph(5, {0}), InputError);
}

TEST_CASE("orbit hypergraph basics") {
  auto s4 = sym(4);
  auto whole = orbit_hypergraph(s4, full_mask(4));
  CHECK(whole.edges() == std::vector<std::uint64_t>{full_mask(4)});

  auto singletons = orbit_hypergraph(s4, 0b0001);
  CHECK(singletons.edges().size() == 4);
  CHECK(singletons.rank() == 1);

  CHECK_THROWS_AS(orbit_hypergraph(s4, 0), InputError);
}

TEST_CASE("automorphism group of the complete k-uniform hypergraph is Sym(n)") {
  for (unsigned n : {4u, 5u, 6u}) {
    for (unsigned k = 1; k < n; ++k) {
      Hypergraph h(n, all_k_subsets(n, k));
      auto aut = automorphism_group(h);
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), n);
      CHECK(aut.order() == fact);
    }
  }
}

TEST_CASE("automorphism group of a single edge") {
  Hypergraph h(4, {0b0011});
  CHECK(automorphism_group(h).order() == 4);  // Sym(2) x Sym(2)
}

TEST_CASE("automorphism order matches the exhaustive filter on random orbit hypergraphs") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 4 + static_cast<unsigned>(rng() % 5);  // 4..8
    // random 2-generator group
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), 0u);
      for (unsigned i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    auto g = PermutationGroup::from_generators(n, gens);
    const std::uint64_t delta = (rng() & full_mask(n)) | 1u;
    auto h = orbit_hypergraph(g, delta);
    CHECK(automorphism_group(h).order() == brute_aut_order(h));
  }
}

TEST_CASE("group is contained in the automorphism group of its orbit hypergraph") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 5 + static_cast<unsigned>(rng() % 4);
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    auto g = PermutationGroup::from_generators(
        n, {Permutation::from_images(std::move(images)),
            Permutation::from_cycles(n, {{0, 1, 2}})});
    const std::uint64_t delta = (rng() & full_mask(n)) | 1u;
    auto aut = automorphism_group(orbit_hypergraph(g, delta));
    for (const auto& gen : g.generators()) CHECK(aut.contains(gen));
  }
}

TEST_CASE("automorphism order is invariant under vertex relabeling") {
  std::mt19937_64 rng(606);
  auto d7 = dihedral(7);
  auto h = orbit_hypergraph(d7, 0b0001011);
  const auto order = automorphism_group(h).order();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> images(7);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 7; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    Permutation relabel = Permutation::from_images(images);
    std::vector<std::uint64_t> edges;
    for (std::uint64_t e : h.edges()) edges.push_back(relabel.apply_mask(e));
    CHECK(automorphism_group(Hypergraph(7, std::move(edges))).order() == order);
  }
}

TEST_CASE("complement duality: Aut(H) = Aut(H-bar)") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned n = 5 + static_cast<unsigned>(rng() % 3);
    auto g = cyclic(n);
    const std::uint64_t delta = (rng() & full_mask(n)) | 1u;
    if (delta == full_mask(n)) continue;
    auto h = orbit_hypergraph(g, delta);
    std::vector<std::uint64_t> complement;
    for (std::uint64_t e : h.edges()) complement.push_back(full_mask(n) & ~e);
    auto aut_h = automorphism_group(h);
    auto aut_c = automorphism_group(Hypergraph(n, std::move(complement)));
    CHECK(aut_h.order() == aut_c.order());
    for (const auto& gen : aut_h.generators()) CHECK(aut_c.contains(gen));
  }
}

TEST_CASE("edge transitivity") {
  auto c6 = cyclic(6);
  auto h = orbit_hypergraph(c6, 0b000011);
  CHECK(is_edge_transitive(h, c6));  // true by construction

  // two edges from different orbits
  Hypergraph two(6, {0b000011, 0b000101});
  CHECK_FALSE(is_edge_transitive(two, c6));

  // complete graph under Sym(n)
  Hypergraph complete(5, all_k_subsets(5, 2));
  CHECK(is_edge_transitive(complete, sym(5)));

  // non-uniform input is rejected with the dedicated error
  Hypergraph mixed(5, {0b00011, 0b00111});
  CHECK_THROWS_AS(is_edge_transitive(mixed, sym(5)), NonUniformError);
}

TEST_CASE("realizes: symmetric group always, C5 never") {
  auto s5 = sym(5);
  CHECK(realizes(s5, 0b00111));
  CHECK(realizes(s5, 0b00001));

  auto c5 = cyclic(5);
  for (std::uint64_t delta = 1; delta < full_mask(5); ++delta)
    CHECK_FALSE(realizes(c5, delta));  // C5 is a genuine exception
}

TEST_CASE("realizes agrees with the brute-force automorphism order") {
  std::mt19937_64 rng(808);
  auto d7 = dihedral(7);
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::uint64_t delta : all_k_subsets(7, k)) {
      auto h = orbit_hypergraph(d7, delta);
      const bool expected = mpz_class(brute_aut_order(h)) == d7.order();
      CHECK(realizes(d7, delta) == expected);
    }
  }
  // D7 is not an exception: some 3-subset realizes it
  bool any = false;
  for (std::uint64_t delta : all_k_subsets(7, 3))
    if (realizes(d7, delta)) any = true;
  CHECK(any);
}

TEST_CASE("hypergraph text round trip") {
  auto h = orbit_hypergraph(cyclic(6), 0b000101);
  auto text = to_text(h);
  CHECK(parse_hypergraph_text(text) == h);
  CHECK_THROWS_AS(parse_hypergraph_text("nope"), InputError);
  CHECK_THROWS_AS(parse_hypergraph_text("n 4 2\n1,2\n"), InputError);
}
