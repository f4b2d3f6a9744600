#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primaut/perm.hpp"

namespace primaut {

/// One level of a stabilizer chain: a base point, generators of the
/// corresponding stabilizer, and a transversal of its orbit.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> gens;
  std::vector<int> where;  // point -> orbit index, -1 if outside
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;      // maps base_point to orbit[j]
  std::vector<Permutation> transversal_inv;  // inverse of transversal[j]
};

/// Base and strong generating set. Construction runs a randomized Schreier
/// fill (fixed seed) followed by a deterministic Schreier-Sims completion
/// pass, so the result is reproducible and always verified.
class StabilizerChain {
public:
  static StabilizerChain build(unsigned degree, std::vector<Permutation> gens,
                               const std::vector<Point>& base_hint = {});

  unsigned degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const mpz_class& order() const { return order_; }

  /// Sifts g through the chain; returns the residue and the level at which
  /// sifting stopped (levels().size() when the residue is the identity).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

  /// Calls fn for every group element exactly once.
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

private:
  unsigned degree_ = 1;
  std::vector<ChainLevel> levels_;
  mpz_class order_;
};

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // sorted blocks, ordered by minimum
  unsigned block_count = 0;
  unsigned block_size = 0;
};

struct PrimeOrderClassEntry {
  unsigned prime = 0;
  Permutation representative{1};  // canonical generator of one class member
  mpz_class subgroup_count;
  unsigned fix_count = 0;
  unsigned orbit_count = 0;
};

/// Census of the subgroups of prime order, grouped by
/// (prime, fixed points, cycle count) of their generators.
struct PrimeOrderClassTable {
  std::vector<PrimeOrderClassEntry> entries;
  mpz_class total_subgroups;
};

/// A finite permutation group, immutable after construction.
class PermutationGroup {
public:
  static PermutationGroup from_generators(unsigned degree,
                                          std::vector<Permutation> gens,
                                          const std::vector<Point>& base_hint = {});
  static PermutationGroup trivial(unsigned degree);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return *chain_; }
  const mpz_class& order() const { return chain_->order(); }
  bool is_trivial() const { return chain_->order() == 1; }

  bool contains(const Permutation& g) const;
  bool is_transitive() const;
  bool is_primitive() const;
  bool contains_alternating() const;

  /// All nontrivial proper block systems, each exactly once. The minimal
  /// systems come from point-pair closures; the rest are generated by
  /// closing the minimal ones under partition joins.
  std::vector<BlockSystem> block_systems() const;

  /// The orbit of a subset (bitmask), as a sorted deduplicated list.
  std::vector<std::uint64_t> subset_orbit(std::uint64_t delta) const;

  /// Orbit size with an early stop once it exceeds cap (returns cap + 1).
  std::uint64_t subset_orbit_size_capped(std::uint64_t delta,
                                         std::uint64_t cap) const;

  /// Setwise stabilizer of delta, by backtracking over the stabilizer chain
  /// with orbit-count pruning.
  PermutationGroup set_stabilizer(std::uint64_t delta) const;

  bool is_k_set_transitive(unsigned k) const;
  bool is_set_transitive() const;

  void for_each_element(const std::function<void(const Permutation&)>& fn) const {
    chain_->for_each_element(fn);
  }

  /// Visits one canonical generator per subgroup of prime order.
  /// Requires order() <= element_limit.
  void for_each_prime_order_subgroup(
      const std::function<void(const Permutation&, const CycleData&)>& fn,
      std::uint64_t element_limit = 10'000'000) const;

  PrimeOrderClassTable prime_order_classes(
      std::uint64_t element_limit = 10'000'000) const;

private:
  PermutationGroup() = default;
  unsigned degree_ = 1;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Finest G-congruence merging alpha and beta, as a block id per point.
/// Standard union-find refinement.
std::vector<Point> minimal_block_partition(unsigned degree,
                                           const std::vector<Permutation>& gens,
                                           Point alpha, Point beta);

/// Parses the plain-text group format: first line "degree n", then one
/// generator per line in cycle notation.
PermutationGroup parse_group_text(const std::string& text);

}  // namespace primaut
