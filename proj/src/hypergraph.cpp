#include "primaut/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "primaut/subsets.hpp"

namespace primaut {

Hypergraph::Hypergraph(unsigned n, std::vector<std::uint64_t> edges) : n_(n) {
  require_mask_domain(n);
  const std::uint64_t full = full_mask(n);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::uint64_t e : edges) {
    if (e == 0) throw InputError("hypergraph edges must be nonempty");
    if (e & ~full) throw InputError("edge exceeds the vertex set");
  }
  edges_ = std::move(edges);
  if (!edges_.empty()) {
    const unsigned r = popcount(edges_.front());
    bool uniform = true;
    for (std::uint64_t e : edges_)
      if (popcount(e) != r) {
        uniform = false;
        break;
      }
    if (uniform) rank_ = r;
  }
}

Hypergraph orbit_hypergraph(const PermutationGroup& g, std::uint64_t delta) {
  if (delta == 0) throw InputError("orbit hypergraph needs a nonempty subset");
  if (delta & ~full_mask(g.degree()))
    throw InputError("subset exceeds the domain");
  return Hypergraph(g.degree(), g.subset_orbit(delta));
}

namespace {

// Backtracking automorphism search on the vertex set.
//
// Vertices are refined by an equitable-colouring loop driven by the pairwise
// common-edge counts, with individualized vertices receiving sentinel
// colours. The search individualizes along a canonical base sequence; the
// diagonal branch (every vertex mapped to itself) is explored first, known
// automorphism orbits prune sibling candidates there, and off-diagonal
// subtrees are abandoned after their first success since the remaining
// elements lie in an already-generated coset.
struct AutSearch {
  static constexpr int kAbort = -2;

  unsigned n = 0;
  const Hypergraph* h = nullptr;
  std::unordered_set<std::uint64_t> edge_set;
  std::vector<std::vector<std::uint32_t>> common;  // common edges per pair
  std::vector<unsigned> init_color;

  std::vector<Point> base_seq;
  std::vector<std::vector<unsigned>> src_colors;  // stable colouring per level
  std::vector<std::vector<unsigned>> src_hist;    // its colour histogram

  std::vector<Permutation> found;
  std::unique_ptr<StabilizerChain> kchain;
  bool kchain_dirty = false;
  bool abort_on_new = false;
  bool aborted = false;

  void init(const Hypergraph& hg) {
    h = &hg;
    n = hg.vertex_count();
    for (std::uint64_t e : hg.edges()) edge_set.insert(e);
    common.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::uint64_t e : hg.edges()) {
      auto points = mask_to_points(e);
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
          common[points[i]][points[j]]++;  // diagonal = vertex degree
    }
    // initial colours: (rank, count) membership profile per vertex
    std::map<std::vector<std::uint64_t>, unsigned> profile_ids;
    std::vector<std::vector<std::uint64_t>> profiles(n);
    for (Point v = 0; v < n; ++v) {
      std::map<unsigned, std::uint64_t> per_rank;
      for (std::uint64_t e : hg.edges())
        if ((e >> v) & 1) per_rank[popcount(e)]++;
      for (auto [rank, count] : per_rank) {
        profiles[v].push_back(rank);
        profiles[v].push_back(count);
      }
    }
    std::vector<std::vector<std::uint64_t>> sorted = profiles;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    init_color.resize(n);
    for (Point v = 0; v < n; ++v)
      init_color[v] = static_cast<unsigned>(
          std::lower_bound(sorted.begin(), sorted.end(), profiles[v]) -
          sorted.begin());
  }

  // Equitable refinement with canonical colour numbering, so that two
  // compatible colourings receive identical ids cell by cell.
  std::vector<unsigned> refine(std::vector<unsigned> colors) const {
    while (true) {
      std::vector<std::vector<std::uint64_t>> sig(n);
      for (Point v = 0; v < n; ++v) {
        std::vector<std::uint64_t> pairs;
        pairs.reserve(n);
        for (Point u = 0; u < n; ++u) {
          if (u == v) continue;
          pairs.push_back((std::uint64_t{colors[u]} << 32) | common[v][u]);
        }
        std::sort(pairs.begin(), pairs.end());
        sig[v].push_back(colors[v]);
        sig[v].insert(sig[v].end(), pairs.begin(), pairs.end());
      }
      std::vector<std::vector<std::uint64_t>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<unsigned> next(n);
      for (Point v = 0; v < n; ++v)
        next[v] = static_cast<unsigned>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
            sorted.begin());
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  static std::vector<unsigned> histogram(const std::vector<unsigned>& colors) {
    std::vector<unsigned> hist;
    for (unsigned c : colors) {
      if (c >= hist.size()) hist.resize(c + 1, 0);
      hist[c]++;
    }
    return hist;
  }

  static bool discrete(const std::vector<unsigned>& hist) {
    for (unsigned c : hist)
      if (c > 1) return false;
    return true;
  }

  // Individualize v with the sentinel colour for `level` and refine.
  std::vector<unsigned> individualize(const std::vector<unsigned>& colors,
                                      Point v, std::size_t level) const {
    std::vector<unsigned> next = colors;
    next[v] = static_cast<unsigned>(n + level + 1);
    return refine(std::move(next));
  }

  // Canonical base sequence: repeatedly individualize the lowest-index
  // vertex in the first largest cell until the colouring is discrete.
  void build_base() {
    std::vector<unsigned> colors = refine(init_color);
    src_colors.push_back(colors);
    src_hist.push_back(histogram(colors));
    while (!discrete(src_hist.back())) {
      const auto& hist = src_hist.back();
      unsigned best_color = 0, best_size = 0;
      for (unsigned c = 0; c < hist.size(); ++c)
        if (hist[c] > best_size) {
          best_size = hist[c];
          best_color = c;
        }
      Point base = 0;
      for (Point v = 0; v < n; ++v)
        if (src_colors.back()[v] == best_color) {
          base = v;
          break;
        }
      base_seq.push_back(base);
      auto next = individualize(src_colors.back(), base, base_seq.size() - 1);
      src_hist.push_back(histogram(next));
      src_colors.push_back(std::move(next));
    }
  }

  void rebuild_kchain() {
    kchain = std::make_unique<StabilizerChain>(
        StabilizerChain::build(n, found, base_seq));
    kchain_dirty = false;
  }

  std::uint64_t stabilizer_orbit_mask(std::size_t level, Point t) {
    if (kchain_dirty) rebuild_kchain();
    std::uint64_t mask = std::uint64_t{1} << t;
    if (level >= kchain->levels().size()) return mask;
    const auto& gens = kchain->levels()[level].gens;
    std::vector<Point> queue = {t};
    while (!queue.empty()) {
      const Point p = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        const Point q = g(p);
        if (!((mask >> q) & 1)) {
          mask |= std::uint64_t{1} << q;
          queue.push_back(q);
        }
      }
    }
    return mask;
  }

  bool is_automorphism(const Permutation& g) const {
    for (std::uint64_t e : h->edges())
      if (!edge_set.count(g.apply_mask(e))) return false;
    return true;
  }

  // Returns kAbort, -1 to continue, or a level to unwind to.
  int search(std::size_t level, const std::vector<unsigned>& tgt_colors,
             int first_offdiag) {
    if (level == base_seq.size()) {
      // both sides discrete: read off the candidate mapping
      std::vector<Point> by_color_src(n), images(n);
      const auto& src = src_colors[level];
      for (Point v = 0; v < n; ++v) by_color_src[src[v]] = v;
      for (Point v = 0; v < n; ++v) images[by_color_src[tgt_colors[v]]] = v;
      Permutation g = Permutation::from_images(std::move(images));
      if (g.is_identity() || !is_automorphism(g)) return -1;
      if (kchain_dirty) rebuild_kchain();
      if (!kchain->contains(g)) {
        found.push_back(g);
        kchain_dirty = true;
        if (abort_on_new) {
          aborted = true;
          return kAbort;
        }
      }
      return first_offdiag;
    }
    const Point base = base_seq[level];
    const unsigned cell_color = src_colors[level][base];
    std::vector<Point> candidates;
    for (Point v = 0; v < n; ++v)
      if (tgt_colors[v] == cell_color) candidates.push_back(v);
    // diagonal candidate first when available
    auto it = std::find(candidates.begin(), candidates.end(), base);
    if (it != candidates.end()) std::rotate(candidates.begin(), it, it + 1);

    std::uint64_t covered = 0;
    for (Point t : candidates) {
      if (first_offdiag < 0 && ((covered >> t) & 1)) continue;
      auto child = individualize(tgt_colors, t, level);
      const int child_offdiag =
          (first_offdiag >= 0)
              ? first_offdiag
              : (t == base ? -1 : static_cast<int>(level));
      if (histogram(child) == src_hist[level + 1]) {
        const int unwind = search(level + 1, child, child_offdiag);
        if (unwind == kAbort) return kAbort;
        if (unwind >= 0 && unwind < static_cast<int>(level)) return unwind;
      }
      if (first_offdiag < 0) covered |= stabilizer_orbit_mask(level, t);
    }
    return -1;
  }
};

}  // namespace

PermutationGroup automorphism_group_seeded(const Hypergraph& h,
                                           const std::vector<Permutation>& seed,
                                           bool abort_on_new_generator,
                                           bool* aborted) {
  if (h.vertex_count() > 40)
    throw LimitError("automorphism search limited to 40 vertices");
  AutSearch search;
  search.init(h);
  for (const auto& g : seed) {
    if (g.degree() != h.vertex_count())
      throw InputError("seed automorphism has the wrong degree");
    if (!search.is_automorphism(g))
      throw InputError("seed permutation is not an automorphism");
  }
  search.found = seed;
  search.abort_on_new = abort_on_new_generator;
  search.build_base();
  search.rebuild_kchain();
  search.search(0, search.src_colors[0], -1);
  if (aborted) *aborted = search.aborted;
  return PermutationGroup::from_generators(h.vertex_count(),
                                           std::move(search.found));
}

PermutationGroup automorphism_group(const Hypergraph& h) {
  return automorphism_group_seeded(h, {});
}

bool is_edge_transitive(const Hypergraph& h, const PermutationGroup& a) {
  if (a.degree() != h.vertex_count())
    throw InputError("group degree does not match the vertex count");
  if (!h.is_uniform())
    throw NonUniformError(
        "edge-transitivity requires a uniform hypergraph (every "
        "edge-transitive hypergraph is uniform)");
  if (h.edges().empty()) throw InputError("hypergraph has no edges");
  std::unordered_set<std::uint64_t> edge_set(h.edges().begin(), h.edges().end());
  std::unordered_set<std::uint64_t> seen = {h.edges().front()};
  std::vector<std::uint64_t> queue = {h.edges().front()};
  while (!queue.empty()) {
    const std::uint64_t e = queue.back();
    queue.pop_back();
    for (const auto& g : a.generators()) {
      const std::uint64_t img = g.apply_mask(e);
      if (!edge_set.count(img)) return false;  // orbit leaves the edge set
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen.size() == h.edges().size();
}

bool realizes(const PermutationGroup& g, std::uint64_t delta) {
  const Hypergraph h = orbit_hypergraph(g, delta);
  bool found_outside = false;
  automorphism_group_seeded(h, g.generators(), /*abort_on_new_generator=*/true,
                            &found_outside);
  return !found_outside;
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << "n " << h.vertex_count() << ' ' << h.edges().size() << '\n';
  for (std::uint64_t e : h.edges()) {
    const auto points = mask_to_points(e);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) out << ',';
      out << points[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  unsigned n = 0;
  std::size_t expected_edges = 0;
  bool have_header = false, have_count = false;
  std::vector<std::uint64_t> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!have_header) {
      std::string word;
      if (!(ls >> word)) continue;
      if (word != "n" || !(ls >> n) || n == 0)
        throw InputError("expected hypergraph header \"n <count>\"");
      if (ls >> expected_edges) have_count = true;
      have_header = true;
      continue;
    }
    std::vector<Point> points;
    std::string token;
    while (std::getline(ls, token, ',')) {
      if (token.find_first_not_of(" \t\r") == std::string::npos) continue;
      const unsigned long v = std::stoul(token);
      if (v == 0 || v > n) throw InputError("edge vertex out of range");
      points.push_back(static_cast<Point>(v - 1));
    }
    if (!points.empty()) edges.push_back(points_to_mask(points, n));
  }
  if (!have_header) throw InputError("missing hypergraph header line");
  Hypergraph h(n, std::move(edges));
  if (have_count && h.edges().size() != expected_edges)
    throw InputError("edge count in header does not match the edge list");
  return h;
}

}  // namespace primaut
