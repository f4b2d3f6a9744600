#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "primaut/group.hpp"
#include "primaut/subsets.hpp"

using namespace primaut;

namespace {

// Brute-force closure of a generator set; the oracle for order().
std::set<std::vector<Point>> brute_elements(const PermutationGroup& g,
                                            std::size_t cap = 200000) {
  std::set<std::vector<Point>> elements;
  std::vector<Permutation> queue = {Permutation(g.degree())};
  elements.insert(queue.front().images());
  while (!queue.empty()) {
    Permutation x = queue.back();
    queue.pop_back();
    for (const auto& s : g.generators()) {
      Permutation y = x * s;
      if (elements.insert(y.images()).second) {
        REQUIRE(elements.size() <= cap);
        queue.push_back(std::move(y));
      }
    }
  }
  return elements;
}

std::vector<Permutation> sym_gens(unsigned n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})};
}

std::vector<Permutation> alt_gens(unsigned n) {
  REQUIRE(n >= 4);
  std::vector<Point> cyc;
  if (n % 2 == 1) {
    for (Point p = 0; p < n; ++p) cyc.push_back(p);
  } else {
    for (Point p = 1; p < n; ++p) cyc.push_back(p);
  }
  return {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cyc})};
}

PermutationGroup sym(unsigned n) {
  return PermutationGroup::from_generators(n, sym_gens(n));
}

PermutationGroup cyclic(unsigned n) {
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermutationGroup::from_generators(n, {Permutation::from_cycles(n, {cyc})});
}

// Sym(3) wr Sym(2) in product action on 9 points, (a,b) -> 3a+b.
PermutationGroup s3_wr_s2_product_action() {
  auto coord_perm = [](const Permutation& h) {
    std::vector<Point> images(9);
    for (Point a = 0; a < 3; ++a)
      for (Point b = 0; b < 3; ++b) images[3 * a + b] = 3 * h(a) + b;
    return Permutation::from_images(images);
  };
  std::vector<Point> swap_images(9);
  for (Point a = 0; a < 3; ++a)
    for (Point b = 0; b < 3; ++b) swap_images[3 * a + b] = 3 * b + a;
  return PermutationGroup::from_generators(
      9, {coord_perm(Permutation::from_cycles(3, {{0, 1}})),
          coord_perm(Permutation::from_cycles(3, {{0, 1, 2}})),
          Permutation::from_images(swap_images)});
}

// All nontrivial proper G-invariant partitions, by scanning every set
// partition of the domain (restricted growth strings); n <= 9.
std::set<std::vector<Point>> brute_block_systems(const PermutationGroup& g) {
  const unsigned n = g.degree();
  REQUIRE(n <= 9);
  std::set<std::vector<Point>> systems;
  std::vector<Point> label(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned maxl) {
    if (pos == n) {
      const unsigned classes = maxl + 1;
      if (classes <= 1 || classes >= n) return;
      std::vector<std::set<Point>> blocks(classes);
      for (Point p = 0; p < n; ++p) blocks[label[p]].insert(p);
      for (const auto& gen : g.generators()) {
        for (const auto& block : blocks) {
          std::set<Point> image;
          for (Point p : block) image.insert(gen(p));
          if (std::find(blocks.begin(), blocks.end(), image) == blocks.end())
            return;
        }
      }
      systems.insert(label);
      return;
    }
    for (unsigned l = 0; l <= maxl + 1; ++l) {
      label[pos] = l;
      rec(pos + 1, std::max(maxl, l));
    }
  };
  label[0] = 0;
  rec(1, 0);
  return systems;
}

std::vector<Point> system_labels(const BlockSystem& bs, unsigned n) {
  std::vector<Point> label(n);
  for (unsigned i = 0; i < bs.blocks.size(); ++i)
    for (Point p : bs.blocks[i]) label[p] = static_cast<Point>(i);
  std::map<Point, Point> renumber;
  std::vector<Point> out(n);
  for (Point p = 0; p < n; ++p) {
    auto it = renumber.find(label[p]);
    if (it == renumber.end())
      it = renumber.emplace(label[p], static_cast<Point>(renumber.size())).first;
    out[p] = it->second;
  }
  return out;
}

}  // namespace

TEST_CASE("orders of elementary groups") {
  CHECK(cyclic(5).order() == 5);  // C5 of degree 5
  CHECK(PermutationGroup::trivial(4).order() == 1);
  CHECK(sym(5).order() == 120);
  CHECK(PermutationGroup::from_generators(6, alt_gens(6)).order() == 360);
}

TEST_CASE("PSL(2,7) on 8 points has order 168") {
  // Moebius generators on F7 u {inf}: x -> x+1 and x -> -1/x,
  // with points 1..7 the field elements 0..6 and point 8 = infinity.
  // Independent check: q(q^2-1)/gcd(2,q-1) = 7*48/2 = 168.
  auto t = parse_permutation("(1,2,3,4,5,6,7)", 8);
  auto s = parse_permutation("(1,8)(2,7)(3,4)(5,6)", 8);
  auto g = PermutationGroup::from_generators(8, {t, s});
  CHECK(g.order() == 168);
  CHECK(g.is_transitive());
  CHECK(g.is_primitive());
}

TEST_CASE("order equals brute-force closure on random subgroups") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned n = 5 + static_cast<unsigned>(rng() % 3);
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), 0u);
      for (unsigned i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    auto g = PermutationGroup::from_generators(n, gens);
    CHECK(g.order() == brute_elements(g).size());
  }
}

TEST_CASE("membership") {
  auto g = cyclic(5);
  for (const auto& gen : g.generators()) CHECK(g.contains(gen));
  // a different power of a 5-cycle lies in the cyclic closure
  auto other = parse_permutation("(1,3,5,2,4)", 5);
  CHECK(g.contains(other));
  auto a6 = PermutationGroup::from_generators(6, alt_gens(6));
  CHECK_FALSE(a6.contains(parse_permutation("(1,2)", 6)));
}

TEST_CASE("element enumeration visits each element once") {
  auto g = sym(5);
  std::set<std::vector<Point>> seen;
  g.for_each_element([&](const Permutation& x) {
    CHECK(seen.insert(x.images()).second);
  });
  CHECK(seen.size() == 120);
  CHECK(seen == brute_elements(g));
}

TEST_CASE("transitivity and primitivity of small groups") {
  auto c5 = cyclic(5);
  CHECK(c5.is_transitive());
  CHECK(c5.is_primitive());  // prime degree

  auto c4 = cyclic(4);
  CHECK(c4.is_transitive());
  CHECK_FALSE(c4.is_primitive());  // blocks {0,2},{1,3}

  auto wreath = s3_wr_s2_product_action();
  CHECK(wreath.order() == 72);
  CHECK(wreath.is_transitive());
  const bool brute_primitive = brute_block_systems(wreath).empty();
  CHECK(wreath.is_primitive() == brute_primitive);
  CHECK(wreath.is_primitive());
}

TEST_CASE("block systems of C6") {
  auto systems = cyclic(6).block_systems();
  REQUIRE(systems.size() == 2);
  CHECK(systems[0].block_size == 2);
  CHECK(systems[0].block_count == 3);
  CHECK(systems[1].block_size == 3);
  CHECK(systems[1].block_count == 2);
}

TEST_CASE("block systems match the exhaustive partition scan") {
  std::vector<PermutationGroup> cases;
  for (unsigned n : {4u, 6u, 8u}) cases.push_back(cyclic(n));
  {
    std::vector<Permutation> gens;
    for (unsigned bit : {1u, 2u, 4u}) {
      std::vector<Point> images(8);
      for (Point p = 0; p < 8; ++p) images[p] = p ^ bit;
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    cases.push_back(PermutationGroup::from_generators(8, gens));
  }
  cases.push_back(PermutationGroup::from_generators(
      8, {parse_permutation("(1,2,3,4)(5,6,7,8)", 8),
          parse_permutation("(1,5)(2,6)(3,7)(4,8)", 8)}));
  for (const auto& g : cases) {
    auto expected = brute_block_systems(g);
    auto got = g.block_systems();
    std::set<std::vector<Point>> got_labels;
    for (const auto& bs : got) got_labels.insert(system_labels(bs, g.degree()));
    CHECK(got_labels == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("C2^3 regular has 14 block systems") {
  // 7 subgroups of order 2 and 7 of order 4; the order-4 systems only
  // appear through the join closure, not as pairwise-minimal blocks.
  std::vector<Permutation> gens;
  for (unsigned bit : {1u, 2u, 4u}) {
    std::vector<Point> images(8);
    for (Point p = 0; p < 8; ++p) images[p] = p ^ bit;
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  auto g = PermutationGroup::from_generators(8, gens);
  CHECK(g.block_systems().size() == 14);
}

TEST_CASE("subset orbits") {
  auto g = sym(4);
  CHECK(g.subset_orbit(full_mask(4)) == std::vector<std::uint64_t>{full_mask(4)});
  CHECK(g.subset_orbit(0b0001).size() == 4);

  // orbit-stabilizer identity on random subsets
  std::mt19937_64 rng(202);
  std::vector<PermutationGroup> groups;
  groups.push_back(sym(5));
  groups.push_back(cyclic(6));
  groups.push_back(s3_wr_s2_product_action());
  for (const auto& grp : groups) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint64_t delta = rng() & full_mask(grp.degree());
      const auto orbit = grp.subset_orbit(delta);
      const auto stab = grp.set_stabilizer(delta);
      CHECK(mpz_class(static_cast<unsigned long>(orbit.size())) * stab.order() ==
            grp.order());
    }
  }
}

TEST_CASE("set stabilizer basic cases") {
  auto s4 = sym(4);
  CHECK(s4.set_stabilizer(0).order() == s4.order());
  CHECK(s4.set_stabilizer(full_mask(4)).order() == s4.order());
  auto stab = s4.set_stabilizer(0b0011);
  CHECK(stab.order() == 4);  // Sym(2) x Sym(2)
  for (const auto& gen : stab.generators())
    CHECK(gen.apply_mask(0b0011) == 0b0011);
}

TEST_CASE("set stabilizer equals brute-force element filter") {
  std::mt19937_64 rng(303);
  std::vector<PermutationGroup> groups;
  groups.push_back(sym(6));
  groups.push_back(PermutationGroup::from_generators(7, alt_gens(7)));
  groups.push_back(s3_wr_s2_product_action());
  groups.push_back(PermutationGroup::from_generators(
      8, {parse_permutation("(1,2,3,4,5,6,7)", 8),
          parse_permutation("(1,8)(2,7)(3,4)(5,6)", 8)}));
  for (const auto& g : groups) {
    const auto elements = brute_elements(g);
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint64_t delta = rng() & full_mask(g.degree());
      std::size_t expected = 0;
      for (const auto& images : elements) {
        Permutation x = Permutation::from_images(images);
        if (x.apply_mask(delta) == delta) ++expected;
      }
      auto stab = g.set_stabilizer(delta);
      CHECK(stab.order() == expected);
      for (const auto& gen : stab.generators()) {
        CHECK(gen.apply_mask(delta) == delta);
        CHECK(g.contains(gen));
      }
    }
  }
}

TEST_CASE("k-set transitivity") {
  auto c5 = cyclic(5);
  CHECK(c5.is_k_set_transitive(1));
  CHECK_FALSE(c5.is_k_set_transitive(2));  // orbit of a 2-set has length 5 < 10
  CHECK_FALSE(c5.is_set_transitive());
  CHECK(sym(6).is_set_transitive());
  CHECK(PermutationGroup::from_generators(7, alt_gens(7)).is_set_transitive());
}

TEST_CASE("set-transitive implies k-set-transitive for every k") {
  auto s5 = sym(5);
  REQUIRE(s5.is_set_transitive());
  for (unsigned k = 1; k < 5; ++k) CHECK(s5.is_k_set_transitive(k));
}

TEST_CASE("prime order classes of C5") {
  auto table = cyclic(5).prime_order_classes();
  REQUIRE(table.entries.size() == 1);
  CHECK(table.entries[0].prime == 5);
  CHECK(table.entries[0].subgroup_count == 1);
  CHECK(table.entries[0].fix_count == 0);
  CHECK(table.entries[0].orbit_count == 1);
  CHECK(table.total_subgroups == 1);
}

TEST_CASE("prime order class totals match element counts") {
  std::vector<PermutationGroup> groups;
  groups.push_back(sym(5));
  groups.push_back(s3_wr_s2_product_action());
  groups.push_back(PermutationGroup::from_generators(
      8, {parse_permutation("(1,2,3,4,5,6,7)", 8),
          parse_permutation("(1,8)(2,7)(3,4)(5,6)", 8)}));
  for (const auto& g : groups) {
    std::map<unsigned, std::size_t> order_counts;
    g.for_each_element([&](const Permutation& x) {
      if (x.is_identity()) return;
      const auto cd = cycle_data(x);
      if (cd.order == *cd.smallest_prime) order_counts[*cd.smallest_prime]++;
    });
    mpz_class expected_total = 0;
    for (auto [p, count] : order_counts) {
      CHECK(count % (p - 1) == 0);
      expected_total += static_cast<unsigned long>(count / (p - 1));
    }
    const auto table = g.prime_order_classes();
    CHECK(table.total_subgroups == expected_total);
    for (const auto& entry : table.entries) {
      const auto cd = cycle_data(entry.representative);
      CHECK(cd.order == entry.prime);
      CHECK(cd.fix_count == entry.fix_count);
      CHECK(cd.orbit_count == entry.orbit_count);
      CHECK(g.contains(entry.representative));
    }
  }
}

TEST_CASE("group text format") {
  auto g = parse_group_text("degree 5\n(1,2,3,4,5)\n(2,5)(3,4)\n");
  CHECK(g.degree() == 5);
  CHECK(g.order() == 10);
  CHECK_THROWS_AS(parse_group_text("(1,2)\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 4\n(1,5)\n"), InputError);
}

TEST_CASE("contains_alternating by order") {
  CHECK(sym(6).contains_alternating());
  CHECK(PermutationGroup::from_generators(6, alt_gens(6)).contains_alternating());
  CHECK_FALSE(cyclic(6).contains_alternating());
}
