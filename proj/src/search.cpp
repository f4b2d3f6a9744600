#include "primaut/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "primaut/hypergraph.hpp"
#include "primaut/parallel.hpp"
#include "primaut/subsets.hpp"

namespace primaut {

std::string to_string(RealizationStatus status) {
  switch (status) {
    case RealizationStatus::realized:
      return "realized";
    case RealizationStatus::exception_certified:
      return "exception_certified";
    case RealizationStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

bool is_orbit_minimal(const PermutationGroup& g, std::uint64_t mask) {
  std::unordered_set<std::uint64_t> seen = {mask};
  std::vector<std::uint64_t> queue = {mask};
  while (!queue.empty()) {
    const std::uint64_t m = queue.back();
    queue.pop_back();
    for (const auto& gen : g.generators()) {
      const std::uint64_t img = gen.apply_mask(m);
      if (img < mask) return false;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return true;
}

namespace {

void require_not_alternating(const PermutationGroup& g) {
  if (g.contains_alternating())
    throw InputError(
        "groups containing Alt(n) are not automorphism groups of any "
        "hypergraph");
}

}  // namespace

RealizationResult random_search(const PermutationGroup& g, const SearchConfig& cfg) {
  require_not_alternating(g);
  if (!g.is_primitive())
    throw InputError("random search expects a primitive group");
  if (cfg.trials == 0) throw InputError("trials must be at least 1");
  const unsigned n = g.degree();
  require_mask_domain(n);

  RealizationResult result;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Point> points(n);
  const unsigned size_cap = std::min(cfg.max_subset_size, n / 2);
  for (unsigned k = 1; k <= size_cap; ++k) {
    for (unsigned t = 1; t <= cfg.trials; ++t) {
      // seeded Fisher-Yates prefix: uniform k-subset
      std::iota(points.begin(), points.end(), 0u);
      for (unsigned i = 0; i < k; ++i) {
        const unsigned j = i + static_cast<unsigned>(rng() % (n - i));
        std::swap(points[i], points[j]);
      }
      std::uint64_t delta = 0;
      for (unsigned i = 0; i < k; ++i) delta |= std::uint64_t{1} << points[i];
      result.trials_used[k] = t;
      if (realizes(g, delta)) {
        result.status = RealizationStatus::realized;
        result.witness = delta;
        return result;
      }
    }
  }
  result.status = RealizationStatus::inconclusive;
  return result;
}

std::optional<std::uint64_t> scan_size_for_witness(const PermutationGroup& g,
                                                   unsigned r, unsigned jobs) {
  const unsigned n = g.degree();
  require_mask_domain(n);
  if (r == 0 || r > n) throw InputError("subset size out of range");
  const std::uint64_t total = binomial_u64(n, r);
  const std::size_t chunk_count =
      jobs > 1 ? static_cast<std::size_t>(jobs) * 4 : 1;
  std::vector<std::optional<std::uint64_t>> chunk_min(
      std::max<std::size_t>(chunk_count, 1));
  parallel_chunks(total, jobs, chunk_count,
                  [&](std::size_t ci, std::uint64_t lo, std::uint64_t hi) {
                    std::uint64_t mask = unrank_subset(n, r, lo);
                    for (std::uint64_t idx = lo; idx < hi; ++idx) {
                      if (is_orbit_minimal(g, mask) && realizes(g, mask)) {
                        if (!chunk_min[ci] || mask < *chunk_min[ci])
                          chunk_min[ci] = mask;
                      }
                      mask = next_same_popcount(mask);
                    }
                  });
  std::optional<std::uint64_t> size_witness;
  for (const auto& m : chunk_min)
    if (m && (!size_witness || *m < *size_witness)) size_witness = m;
  return size_witness;
}

RealizationResult exhaustive_certify(const PermutationGroup& g,
                                     const SearchConfig& cfg, bool rank_profile) {
  require_not_alternating(g);
  const unsigned n = g.degree();
  if (n > cfg.exhaustive_limit)
    throw LimitError("degree exceeds the exhaustive scan limit");
  require_mask_domain(n);

  RealizationResult result;
  std::set<unsigned> ranks;
  for (unsigned r = 1; r <= n / 2; ++r) {
    const auto size_witness = scan_size_for_witness(g, r, cfg.jobs);
    if (size_witness) {
      ranks.insert(r);
      ranks.insert(n - r);  // complement duality
      if (!result.witness) result.witness = size_witness;
      if (!rank_profile) break;
    }
  }
  if (result.witness) {
    result.status = RealizationStatus::realized;
    if (rank_profile) result.ranks_realizable = ranks;
  } else {
    result.status = RealizationStatus::exception_certified;
    result.ranks_realizable = std::set<unsigned>{};
  }
  return result;
}

namespace {

struct FixedFamilyAccumulator {
  unsigned n;
  std::vector<std::uint64_t> bitmap;  // one bit per subset of the domain

  explicit FixedFamilyAccumulator(unsigned degree) : n(degree) {
    bitmap.assign((std::uint64_t{1} << n) / 64 + 1, 0);
  }

  void mark(std::uint64_t subset) {
    bitmap[subset >> 6] |= std::uint64_t{1} << (subset & 63);
  }

  // Marks every union of cycles of the subgroup generator, via Gray-code
  // steps so each mark costs O(1).
  void mark_invariant_sets(const CycleData& cd) {
    std::vector<std::uint64_t> cycle_masks;
    for (const auto& cyc : cd.cycles) {
      std::uint64_t m = 0;
      for (Point p : cyc) m |= std::uint64_t{1} << p;
      cycle_masks.push_back(m);
    }
    const std::uint64_t count = std::uint64_t{1} << cycle_masks.size();
    std::uint64_t current = 0;
    mark(0);
    for (std::uint64_t i = 1; i < count; ++i) {
      current ^= cycle_masks[static_cast<std::size_t>(std::countr_zero(i))];
      mark(current);
    }
  }

  mpz_class total() const {
    std::uint64_t count = 0;
    for (std::uint64_t word : bitmap) count += static_cast<std::uint64_t>(std::popcount(word));
    return mpz_class(static_cast<unsigned long>(count));
  }

  std::optional<std::uint64_t> first_unmarked() const {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < subsets; ++s)
      if (!((bitmap[s >> 6] >> (s & 63)) & 1)) return s;
    return std::nullopt;
  }
};

void accumulate_group(const PermutationGroup& m, std::size_t overgroup_index,
                      FixedFamilyAccumulator& acc,
                      std::vector<FixedFamilyClass>& by_class,
                      std::uint64_t element_limit) {
  std::map<std::tuple<unsigned, unsigned, unsigned>, FixedFamilyClass> classes;
  m.for_each_prime_order_subgroup(
      [&](const Permutation&, const CycleData& cd) {
        acc.mark_invariant_sets(cd);
        const auto key = std::make_tuple(*cd.smallest_prime, cd.fix_count,
                                         cd.orbit_count);
        auto it = classes.find(key);
        if (it == classes.end()) {
          FixedFamilyClass c;
          c.overgroup_index = overgroup_index;
          c.prime = *cd.smallest_prime;
          c.fix_count = cd.fix_count;
          c.orbit_count = cd.orbit_count;
          c.subgroup_count = 1;
          classes.emplace(key, std::move(c));
        } else {
          it->second.subgroup_count += 1;
        }
      },
      element_limit);
  for (auto& [key, entry] : classes) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, entry.orbit_count);
    entry.invariant_sum = entry.subgroup_count * pow2;
    by_class.push_back(std::move(entry));
  }
}

FixedFamilyReport finish_report(const FixedFamilyAccumulator& acc,
                                std::vector<FixedFamilyClass> by_class,
                                unsigned n) {
  FixedFamilyReport report;
  report.total_fixed = acc.total();
  report.by_class = std::move(by_class);
  mpz_class all;
  mpz_ui_pow_ui(all.get_mpz_t(), 2, n);
  report.has_regular_orbit = report.total_fixed < all;
  if (report.has_regular_orbit) report.regular_subset_witness = acc.first_unmarked();
  return report;
}

}  // namespace

FixedFamilyReport fixed_family(const PermutationGroup& m, unsigned bitmap_limit,
                               std::uint64_t element_limit) {
  if (m.degree() > bitmap_limit || bitmap_limit > 30)
    throw LimitError("fixed-family census limited to degree " +
                     std::to_string(std::min(bitmap_limit, 30u)));
  if (m.is_trivial())
    throw InputError("fixed family needs a non-identity element");
  FixedFamilyAccumulator acc(m.degree());
  std::vector<FixedFamilyClass> by_class;
  accumulate_group(m, 0, acc, by_class, element_limit);
  return finish_report(acc, std::move(by_class), m.degree());
}

FixedFamilyReport s_family(const PermutationGroup& g,
                           const std::vector<PermutationGroup>& overgroups,
                           unsigned bitmap_limit, std::uint64_t element_limit) {
  if (g.degree() > bitmap_limit || bitmap_limit > 30)
    throw LimitError("fixed-family census limited to degree " +
                     std::to_string(std::min(bitmap_limit, 30u)));
  if (overgroups.empty()) throw InputError("no overgroups supplied");
  for (std::size_t i = 0; i < overgroups.size(); ++i) {
    const auto& m = overgroups[i];
    if (m.degree() != g.degree())
      throw InputError("overgroup degree mismatch at index " + std::to_string(i));
    for (const auto& gen : g.generators())
      if (!m.contains(gen))
        throw InputError("overgroup at index " + std::to_string(i) +
                         " does not contain the group");
    if (m.is_trivial())
      throw InputError("fixed family needs a non-identity element");
  }
  FixedFamilyAccumulator acc(g.degree());
  std::vector<FixedFamilyClass> by_class;
  for (std::size_t i = 0; i < overgroups.size(); ++i)
    accumulate_group(overgroups[i], i, acc, by_class, element_limit);
  return finish_report(acc, std::move(by_class), g.degree());
}

}  // namespace primaut
