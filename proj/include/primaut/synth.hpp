#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "primaut/group.hpp"

namespace primaut::synth {

/// A synthesized catalog group together with the facts verified during
/// synthesis. Synthesis throws if any expected invariant fails, so a recipe
/// can never silently produce the wrong group.
struct Recipe {
  std::string name;
  unsigned degree = 0;
  std::vector<Permutation> generators;
  mpz_class order;
  bool primitive = true;
  std::string onan_scott;
  bool table1 = false;
  std::string notes;
};

/// All catalog recipes: every primitive group of degrees 5..12, the
/// degree-21 actions used by the class-sum identities, and the wreath
/// product on 25 points. Deterministic output.
std::vector<Recipe> synthesize_catalog();

// building blocks (also used directly by tests)
PermutationGroup symmetric(unsigned n);
PermutationGroup alternating(unsigned n);
PermutationGroup wreath_product_action(unsigned m, unsigned l);
PermutationGroup pairs_action_group(unsigned m);
Permutation pair_action_of(unsigned m, const Permutation& g);
unsigned pair_index(unsigned m, Point a, Point b);

}  // namespace primaut::synth
