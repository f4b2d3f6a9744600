#include "primaut/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "primaut/subsets.hpp"

namespace primaut {

namespace {

struct ChainBuilder {
  unsigned n;
  std::vector<Point> base_hint;  // exact base prefix when nonempty
  std::vector<ChainLevel> levels;

  void recompute_orbit(ChainLevel& lv) {
    lv.where.assign(n, -1);
    lv.orbit.clear();
    lv.transversal.clear();
    lv.transversal_inv.clear();
    lv.orbit.push_back(lv.base_point);
    lv.transversal.emplace_back(n);
    lv.transversal_inv.emplace_back(n);
    lv.where[lv.base_point] = 0;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (const auto& s : lv.gens) {
        const Point img = s(lv.orbit[i]);
        if (lv.where[img] < 0) {
          lv.where[img] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(img);
          Permutation t = lv.transversal[i] * s;
          lv.transversal_inv.push_back(t.inverse());
          lv.transversal.push_back(std::move(t));
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const Point img = g(levels[i].base_point);
      const int w = levels[i].where[img];
      if (w < 0) return {std::move(g), i};
      g = g * levels[i].transversal_inv[static_cast<std::size_t>(w)];
    }
    return {std::move(g), levels.size()};
  }

  Point pick_base_point(const Permutation& h) const {
    for (Point p : base_hint)
      if (h(p) != p) return p;
    for (Point p = 0; p < n; ++p)
      if (h(p) != p) return p;
    throw std::logic_error("no moved point for a non-identity residue");
  }

  void append_level(Point beta) {
    ChainLevel lv;
    lv.base_point = beta;
    levels.push_back(std::move(lv));
    recompute_orbit(levels.back());
  }

  bool try_add(const Permutation& g) {
    auto [h, lev] = sift(g);
    if (h.is_identity()) return false;
    if (lev == levels.size()) append_level(pick_base_point(h));
    // A strong generator fixing the first `lev` base points belongs to the
    // generator sets of every level up to lev.
    for (std::size_t i = 0; i <= lev; ++i) levels[i].gens.push_back(h);
    for (std::size_t i = lev + 1; i-- > 0;) recompute_orbit(levels[i]);
    return true;
  }

  // One deterministic Schreier-generator sweep; returns true if the chain
  // was extended (caller repeats until a clean pass).
  bool closure_pass() {
    for (std::size_t i = levels.size(); i-- > 0;) {
      ChainLevel& lv = levels[i];
      for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
        for (std::size_t s = 0; s < lv.gens.size(); ++s) {
          const Point img = lv.gens[s](lv.orbit[j]);
          const int w = lv.where[img];
          Permutation schreier =
              lv.transversal[j] * lv.gens[s] * lv.transversal_inv[static_cast<std::size_t>(w)];
          if (try_add(schreier)) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

StabilizerChain StabilizerChain::build(unsigned degree,
                                       std::vector<Permutation> gens,
                                       const std::vector<Point>& base_hint) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generator degree does not match the group degree");

  ChainBuilder builder;
  builder.n = degree;
  builder.base_hint = base_hint;
  if (!base_hint.empty()) {
    // Exact base prefix: redundant levels (orbit size 1) are harmless and
    // keep the chain aligned with the requested point order.
    for (Point p : base_hint) {
      if (p >= degree) throw InputError("base point out of range");
      builder.append_level(p);
    }
  }

  std::vector<const Permutation*> seeds;
  for (const auto& g : gens)
    if (!g.is_identity()) seeds.push_back(&g);

  for (const auto* g : seeds) builder.try_add(*g);

  if (!seeds.empty()) {
    // Randomized Schreier fill with a fixed seed; purely an accelerator,
    // the deterministic closure below verifies and completes the chain.
    std::mt19937_64 rng(0x5eedba5eULL);
    for (int round = 0; round < 24; ++round) {
      Permutation w(degree);
      const unsigned len = 2 + static_cast<unsigned>(rng() % 5);
      for (unsigned i = 0; i < len; ++i)
        w = w * *seeds[static_cast<std::size_t>(rng() % seeds.size())];
      builder.try_add(w);
    }
  }

  while (builder.closure_pass()) {
  }

  StabilizerChain chain;
  chain.degree_ = degree;
  chain.levels_ = std::move(builder.levels);
  chain.order_ = 1;
  for (const auto& lv : chain.levels_)
    chain.order_ *= static_cast<unsigned long>(lv.orbit.size());
  return chain;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g) const {
  Permutation h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Point img = h(levels_[i].base_point);
    const int w = levels_[i].where[img];
    if (w < 0) return {std::move(h), i};
    h = h * levels_[i].transversal_inv[static_cast<std::size_t>(w)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, lev] = sift(g);
  (void)lev;
  return h.is_identity();
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& fn) const {
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t level, const Permutation& partial) {
        if (level == levels_.size()) {
          fn(partial);
          return;
        }
        for (const auto& u : levels_[level].transversal) rec(level + 1, u * partial);
      };
  rec(0, Permutation(degree_));
}

PermutationGroup PermutationGroup::from_generators(
    unsigned degree, std::vector<Permutation> gens,
    const std::vector<Point>& base_hint) {
  PermutationGroup group;
  group.degree_ = degree;
  group.chain_ = std::make_shared<StabilizerChain>(
      StabilizerChain::build(degree, gens, base_hint));
  group.generators_ = std::move(gens);
  return group;
}

PermutationGroup PermutationGroup::trivial(unsigned degree) {
  return from_generators(degree, {});
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return chain_->contains(g);
}

bool PermutationGroup::is_transitive() const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> queue = {0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Point p = queue.back();
    queue.pop_back();
    for (const auto& g : generators_) {
      const Point q = g(p);
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        queue.push_back(q);
      }
    }
  }
  return count == degree_;
}

bool PermutationGroup::contains_alternating() const {
  if (degree_ < 3) return 2 * order() >= 2;  // Alt(1), Alt(2) are trivial
  mpz_class half_factorial;
  mpz_fac_ui(half_factorial.get_mpz_t(), degree_);
  half_factorial /= 2;
  return order() >= half_factorial;
}

std::vector<Point> minimal_block_partition(unsigned degree,
                                           const std::vector<Permutation>& gens,
                                           Point alpha, Point beta) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  };
  unite(alpha, beta);
  // Iterate to a fixpoint: whenever p ~ rep(p), their generator images must
  // be merged as well. Simple and robust at the domain sizes used here.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gens) {
      for (Point p = 0; p < degree; ++p) {
        const Point r = find(p);
        if (r == p) continue;
        if (unite(g(p), g(r))) changed = true;
      }
    }
  }
  std::vector<Point> label(degree);
  std::map<Point, Point> renumber;
  for (Point p = 0; p < degree; ++p) {
    const Point root = find(p);
    auto it = renumber.find(root);
    if (it == renumber.end()) it = renumber.emplace(root, static_cast<Point>(renumber.size())).first;
    label[p] = it->second;
  }
  return label;
}

bool PermutationGroup::is_primitive() const {
  if (!is_transitive()) return false;
  if (degree_ <= 2) return true;
  for (Point beta = 1; beta < degree_; ++beta) {
    const auto label = minimal_block_partition(degree_, generators_, 0, beta);
    const Point classes = 1 + *std::max_element(label.begin(), label.end());
    if (classes != 1) return false;  // proper nontrivial system found
  }
  return true;
}

namespace {

std::vector<Point> join_partitions(unsigned degree, const std::vector<Point>& a,
                                   const std::vector<Point>& b) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto merge_by = [&](const std::vector<Point>& lab) {
    std::map<Point, Point> anchor;
    for (Point p = 0; p < degree; ++p) {
      auto it = anchor.find(lab[p]);
      if (it == anchor.end())
        anchor.emplace(lab[p], p);
      else {
        Point ra = find(it->second), rb = find(p);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  };
  merge_by(a);
  merge_by(b);
  std::vector<Point> label(degree);
  std::map<Point, Point> renumber;
  for (Point p = 0; p < degree; ++p) {
    const Point root = find(p);
    auto it = renumber.find(root);
    if (it == renumber.end()) it = renumber.emplace(root, static_cast<Point>(renumber.size())).first;
    label[p] = it->second;
  }
  return label;
}

unsigned class_count(const std::vector<Point>& label) {
  return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

}  // namespace

std::vector<BlockSystem> PermutationGroup::block_systems() const {
  if (!is_transitive())
    throw InputError("block systems are defined for transitive groups only");
  std::set<std::vector<Point>> systems;
  std::vector<std::vector<Point>> worklist;
  for (Point beta = 1; beta < degree_; ++beta) {
    auto label = minimal_block_partition(degree_, generators_, 0, beta);
    const unsigned c = class_count(label);
    if (c > 1 && c < degree_ && systems.insert(label).second)
      worklist.push_back(std::move(label));
  }
  // Every block system is a join of minimal ones; close under pairwise joins.
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    const std::vector<Point> current = worklist[i];
    std::vector<std::vector<Point>> snapshot(systems.begin(), systems.end());
    for (const auto& other : snapshot) {
      auto joined = join_partitions(degree_, current, other);
      const unsigned c = class_count(joined);
      if (c > 1 && c < degree_ && systems.insert(joined).second)
        worklist.push_back(std::move(joined));
    }
  }
  std::vector<BlockSystem> result;
  for (const auto& label : systems) {
    BlockSystem bs;
    bs.block_count = class_count(label);
    bs.blocks.assign(bs.block_count, {});
    for (Point p = 0; p < degree_; ++p) bs.blocks[label[p]].push_back(p);
    bs.block_size = static_cast<unsigned>(bs.blocks.front().size());
    result.push_back(std::move(bs));
  }
  std::sort(result.begin(), result.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size != b.block_size) return a.block_size < b.block_size;
    return a.blocks < b.blocks;
  });
  return result;
}

std::vector<std::uint64_t> PermutationGroup::subset_orbit(std::uint64_t delta) const {
  require_mask_domain(degree_);
  std::unordered_set<std::uint64_t> seen = {delta};
  std::vector<std::uint64_t> queue = {delta};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators_) {
      const std::uint64_t img = g.apply_mask(queue[i]);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::uint64_t PermutationGroup::subset_orbit_size_capped(std::uint64_t delta,
                                                         std::uint64_t cap) const {
  require_mask_domain(degree_);
  std::unordered_set<std::uint64_t> seen = {delta};
  std::vector<std::uint64_t> queue = {delta};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators_) {
      const std::uint64_t img = g.apply_mask(queue[i]);
      if (seen.insert(img).second) {
        if (seen.size() > cap) return cap + 1;
        queue.push_back(img);
      }
    }
  }
  return seen.size();
}

namespace {

// Backtrack search for the setwise stabilizer of delta inside the group,
// over a stabilizer chain whose base starts with the points of delta.
// Prunes candidates by per-orbit intersection counts, explores the diagonal
// (identity-image) branch first, and keeps one representative per coset of
// the prefix stabilizer once an element is found.
struct SetStabilizerSearch {
  unsigned n;
  std::uint64_t delta;
  const StabilizerChain* chain;
  std::vector<Point> base_seq;
  std::vector<std::vector<std::uint64_t>> level_orbit_masks;

  std::vector<Permutation> found;
  std::unique_ptr<StabilizerChain> kchain;
  bool kchain_dirty = false;

  void rebuild_kchain() {
    kchain = std::make_unique<StabilizerChain>(
        StabilizerChain::build(n, found, base_seq));
    kchain_dirty = false;
  }

  std::uint64_t stabilizer_orbit_mask(std::size_t level, Point t) const {
    // Orbit of t under the found subgroup's pointwise stabilizer of the
    // first `level` base points; kchain levels align with base_seq.
    std::uint64_t mask = std::uint64_t{1} << t;
    if (level >= kchain->levels().size()) return mask;
    const auto& gens = kchain->levels()[level].gens;
    std::vector<Point> queue = {t};
    while (!queue.empty()) {
      const Point p = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        const Point q = g(p);
        if (!(mask >> q & 1)) {
          mask |= std::uint64_t{1} << q;
          queue.push_back(q);
        }
      }
    }
    return mask;
  }

  // Returns -1 to continue, otherwise the level to unwind to.
  int search(std::size_t level, const Permutation& suffix, std::uint64_t pull,
             int first_offdiag) {
    const auto& levels = chain->levels();
    if (level == levels.size()) {
      if (pull != delta) return -1;
      if (suffix.is_identity()) return -1;
      if (kchain_dirty) rebuild_kchain();
      if (!kchain->contains(suffix)) {
        found.push_back(suffix);
        kchain_dirty = true;
      }
      return first_offdiag;  // one representative per off-diagonal coset
    }
    for (const std::uint64_t orbit_mask : level_orbit_masks[level]) {
      if (popcount(delta & orbit_mask) != popcount(pull & orbit_mask)) return -1;
    }
    const ChainLevel& lv = levels[level];
    const bool beta_in = (delta >> lv.base_point) & 1;

    // Diagonal candidate first, then the rest in ascending point order.
    std::vector<Point> candidates;
    candidates.reserve(lv.orbit.size());
    candidates.push_back(lv.base_point);
    std::vector<Point> rest(lv.orbit.begin(), lv.orbit.end());
    std::sort(rest.begin(), rest.end());
    for (Point p : rest)
      if (p != lv.base_point) candidates.push_back(p);

    std::uint64_t covered = 0;  // K-orbit pruning on the diagonal prefix
    for (Point p : candidates) {
      if (((pull >> p) & 1) != static_cast<std::uint64_t>(beta_in)) continue;
      if (first_offdiag < 0) {
        if ((covered >> p) & 1) continue;
      }
      const int w = lv.where[p];
      const Permutation& u = lv.transversal[static_cast<std::size_t>(w)];
      const Permutation& u_inv = lv.transversal_inv[static_cast<std::size_t>(w)];
      const int child_offdiag =
          (first_offdiag >= 0) ? first_offdiag
                               : (p == lv.base_point ? -1 : static_cast<int>(level));
      const int unwind = search(level + 1, u * suffix,
                                u_inv.apply_mask(pull), child_offdiag);
      if (unwind >= 0 && unwind < static_cast<int>(level)) return unwind;
      if (first_offdiag < 0) {
        if (kchain_dirty) rebuild_kchain();
        covered |= stabilizer_orbit_mask(level, p);
      }
    }
    return -1;
  }
};

}  // namespace

PermutationGroup PermutationGroup::set_stabilizer(std::uint64_t delta) const {
  require_mask_domain(degree_);
  const std::uint64_t full = full_mask(degree_);
  if ((delta & ~full) != 0) throw InputError("subset exceeds the domain");
  if (delta == 0 || delta == full || is_trivial()) return *this;

  SetStabilizerSearch search;
  search.n = degree_;
  search.delta = delta;
  search.base_seq = mask_to_points(delta);
  StabilizerChain rebased =
      StabilizerChain::build(degree_, generators_, search.base_seq);
  search.chain = &rebased;
  search.base_seq.clear();
  for (const auto& lv : rebased.levels()) search.base_seq.push_back(lv.base_point);

  // Orbits of each level's stabilizer, as masks, for the counting prune.
  for (const auto& lv : rebased.levels()) {
    std::vector<std::uint64_t> masks;
    std::vector<int> orbit_id(degree_, -1);
    for (Point start = 0; start < degree_; ++start) {
      if (orbit_id[start] >= 0) continue;
      std::uint64_t mask = std::uint64_t{1} << start;
      orbit_id[start] = static_cast<int>(masks.size());
      std::vector<Point> queue = {start};
      while (!queue.empty()) {
        const Point p = queue.back();
        queue.pop_back();
        for (const auto& g : lv.gens) {
          const Point q = g(p);
          if (orbit_id[q] < 0) {
            orbit_id[q] = static_cast<int>(masks.size());
            mask |= std::uint64_t{1} << q;
            queue.push_back(q);
          }
        }
      }
      masks.push_back(mask);
    }
    search.level_orbit_masks.push_back(std::move(masks));
  }

  search.rebuild_kchain();
  search.search(0, Permutation(degree_), delta, -1);
  return PermutationGroup::from_generators(degree_, std::move(search.found));
}

bool PermutationGroup::is_k_set_transitive(unsigned k) const {
  if (k > degree_) throw InputError("k exceeds the degree");
  if (k == 0 || k == degree_) return true;
  const unsigned kk = std::min(k, degree_ - k);
  if (degree_ >= 3 && contains_alternating()) return true;
  mpz_class subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), degree_, kk);
  if (order() < subsets) return false;
  if (subsets > (1u << 22))
    throw LimitError("set-transitivity check too large for this degree");
  require_mask_domain(degree_);
  const std::uint64_t cap = subsets.get_ui();
  const std::uint64_t start = full_mask(kk);
  return subset_orbit_size_capped(start, cap) == cap;
}

bool PermutationGroup::is_set_transitive() const {
  for (unsigned k = 1; k <= degree_ / 2; ++k)
    if (!is_k_set_transitive(k)) return false;
  return true;
}

namespace {

struct PointVectorHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Point p : v) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

void PermutationGroup::for_each_prime_order_subgroup(
    const std::function<void(const Permutation&, const CycleData&)>& fn,
    std::uint64_t element_limit) const {
  if (order() > static_cast<unsigned long>(element_limit))
    throw LimitError("group too large for element enumeration");
  std::unordered_set<std::vector<Point>, PointVectorHash> seen;
  for_each_element([&](const Permutation& g) {
    if (g.is_identity()) return;
    const CycleData cd = cycle_data(g);
    const unsigned p = *cd.smallest_prime;
    if (mpz_cmp_ui(cd.order.get_mpz_t(), p) != 0) return;
    // Canonical generator of <g>: the lexicographically least power.
    Permutation best = g;
    Permutation h = g;
    for (unsigned k = 2; k < p; ++k) {
      h = h * g;
      if (h.images() < best.images()) best = h;
    }
    if (!seen.insert(best.images()).second) return;
    fn(best, cycle_data(best));
  });
}

PrimeOrderClassTable PermutationGroup::prime_order_classes(
    std::uint64_t element_limit) const {
  std::map<std::tuple<unsigned, unsigned, unsigned>, PrimeOrderClassEntry> classes;
  for_each_prime_order_subgroup(
      [&](const Permutation& rep, const CycleData& cd) {
        const auto key = std::make_tuple(*cd.smallest_prime, cd.fix_count,
                                         cd.orbit_count);
        auto it = classes.find(key);
        if (it == classes.end()) {
          PrimeOrderClassEntry entry;
          entry.prime = *cd.smallest_prime;
          entry.representative = rep;
          entry.subgroup_count = 1;
          entry.fix_count = cd.fix_count;
          entry.orbit_count = cd.orbit_count;
          classes.emplace(key, std::move(entry));
        } else {
          it->second.subgroup_count += 1;
        }
      },
      element_limit);
  PrimeOrderClassTable table;
  table.total_subgroups = 0;
  for (auto& [key, entry] : classes) {
    table.total_subgroups += entry.subgroup_count;
    table.entries.push_back(std::move(entry));
  }
  return table;
}

PermutationGroup parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    const std::string trimmed = line.substr(first, last - first + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (!have_degree) {
      std::istringstream head(trimmed);
      std::string word;
      head >> word;
      if (word != "degree") throw InputError("expected first line \"degree n\"");
      if (!(head >> degree) || degree == 0)
        throw InputError("invalid degree in group header");
      have_degree = true;
      continue;
    }
    gens.push_back(parse_permutation(trimmed, degree));
  }
  if (!have_degree) throw InputError("missing \"degree n\" header line");
  return PermutationGroup::from_generators(degree, std::move(gens));
}

}  // namespace primaut
