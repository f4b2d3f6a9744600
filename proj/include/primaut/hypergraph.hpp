#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primaut/group.hpp"
#include "primaut/perm.hpp"

namespace primaut {

class NonUniformError : public InputError {
public:
  explicit NonUniformError(const std::string& what) : InputError(what) {}
};

/// Edge family on a vertex set; edges are stored as deduplicated bitmasks
/// sorted ascending, which doubles as the canonical representation.
class Hypergraph {
public:
  Hypergraph(unsigned n, std::vector<std::uint64_t> edges);

  unsigned vertex_count() const { return n_; }
  const std::vector<std::uint64_t>& edges() const { return edges_; }
  bool is_uniform() const { return rank_.has_value(); }
  std::optional<unsigned> rank() const { return rank_; }

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

private:
  unsigned n_;
  std::vector<std::uint64_t> edges_;
  std::optional<unsigned> rank_;
};

/// The hypergraph with edge set = orbit of delta under G. Uniform of rank
/// |delta| by construction, and G acts on it by automorphisms.
Hypergraph orbit_hypergraph(const PermutationGroup& g, std::uint64_t delta);

/// Full automorphism group of the edge family inside Sym(n), computed by
/// partition-refinement backtracking on the vertex set. Requires n <= 40.
PermutationGroup automorphism_group(const Hypergraph& h);

/// Variant used by the realization tests: the search starts from a known
/// subgroup of Aut(H) and may abort as soon as a generator outside that
/// subgroup appears (*aborted reports whether that happened).
PermutationGroup automorphism_group_seeded(const Hypergraph& h,
                                           const std::vector<Permutation>& seed,
                                           bool abort_on_new_generator = false,
                                           bool* aborted = nullptr);

/// True iff the edge set is a single orbit under A. Rejects non-uniform
/// hypergraphs (an edge-transitive hypergraph is always uniform).
bool is_edge_transitive(const Hypergraph& h, const PermutationGroup& a);

/// True iff Aut(orbit_hypergraph(g, delta)) equals g; since g always acts,
/// this reduces to "the search finds no automorphism outside g".
bool realizes(const PermutationGroup& g, std::uint64_t delta);

std::string to_text(const Hypergraph& h);
Hypergraph parse_hypergraph_text(const std::string& text);

}  // namespace primaut
