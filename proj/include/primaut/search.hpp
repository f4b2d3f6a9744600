#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primaut/group.hpp"

namespace primaut {

struct SearchConfig {
  unsigned max_subset_size = 6;  // cap on |delta| in the random phase
  unsigned trials = 64;          // random trials per size
  std::uint64_t seed = 0;
  unsigned exhaustive_limit = 24;  // max degree for exhaustive scans
  unsigned jobs = 1;
};

enum class RealizationStatus { realized, exception_certified, inconclusive };

std::string to_string(RealizationStatus status);

struct RealizationResult {
  RealizationStatus status = RealizationStatus::inconclusive;
  std::optional<std::uint64_t> witness;  // realizing subset, when found
  std::optional<std::set<unsigned>> ranks_realizable;
  std::map<unsigned, unsigned> trials_used;  // per subset size (random phase)
};

/// Seeded random subset search for a realizing delta, sizes 1..max_subset_size.
/// Requires a primitive group not containing Alt(n).
RealizationResult random_search(const PermutationGroup& g, const SearchConfig& cfg);

/// Deterministic scan over orbit representatives of every subset size up to
/// n/2 (complements cover the rest). Certifies exceptions exhaustively; with
/// rank_profile, reports every realizable edge size.
RealizationResult exhaustive_certify(const PermutationGroup& g,
                                     const SearchConfig& cfg,
                                     bool rank_profile = false);

struct FixedFamilyClass {
  std::size_t overgroup_index = 0;  // position in the supplied list; 0 for fixed_family
  unsigned prime = 0;
  unsigned fix_count = 0;
  unsigned orbit_count = 0;
  mpz_class subgroup_count;
  mpz_class invariant_sum;  // subgroup_count * 2^orbit_count
};

/// Exact census of the subsets fixed setwise by some non-identity element.
struct FixedFamilyReport {
  mpz_class total_fixed;
  std::vector<FixedFamilyClass> by_class;
  bool has_regular_orbit = false;  // true iff some subset has trivial stabilizer
  std::optional<std::uint64_t> regular_subset_witness;
};

FixedFamilyReport fixed_family(const PermutationGroup& m,
                               unsigned bitmap_limit = 24,
                               std::uint64_t element_limit = 10'000'000);

/// Union of the fixed families of the supplied overgroups (each must
/// contain g). A witness outside the union realizes g via its orbit
/// hypergraph whenever the list covers all maximal overgroups.
FixedFamilyReport s_family(const PermutationGroup& g,
                           const std::vector<PermutationGroup>& overgroups,
                           unsigned bitmap_limit = 24,
                           std::uint64_t element_limit = 10'000'000);

/// True iff mask is the numerically least element of its orbit.
bool is_orbit_minimal(const PermutationGroup& g, std::uint64_t mask);

/// Scans all orbit representatives of size r; returns the numerically least
/// realizing representative, if any. The unit of work behind
/// exhaustive_certify, exposed so long scans can checkpoint between sizes.
std::optional<std::uint64_t> scan_size_for_witness(const PermutationGroup& g,
                                                   unsigned r, unsigned jobs);

}  // namespace primaut
