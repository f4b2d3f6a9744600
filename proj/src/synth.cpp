#include "primaut/synth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "primaut/gf.hpp"

namespace primaut::synth {

namespace {

[[noreturn]] void synth_fail(const std::string& name, const std::string& what) {
  throw std::logic_error("catalog synthesis failed for " + name + ": " + what);
}

void check(bool ok, const std::string& name, const std::string& what) {
  if (!ok) synth_fail(name, what);
}

// ---- Moebius action on the projective line over GF(q) --------------------
// Points 0..q-1 are the field elements, point q is infinity.

Permutation moebius(const GF& f, unsigned a, unsigned b, unsigned c, unsigned d) {
  const unsigned q = f.size();
  const unsigned det = f.sub(f.mul(a, d), f.mul(b, c));
  if (det == 0) throw InputError("moebius map needs a nonzero determinant");
  std::vector<Point> images(q + 1);
  for (unsigned x = 0; x < q; ++x) {
    const unsigned denom = f.add(f.mul(c, x), d);
    const unsigned numer = f.add(f.mul(a, x), b);
    images[x] = denom == 0 ? q : f.mul(numer, f.inv(denom));
  }
  images[q] = c == 0 ? q : f.mul(a, f.inv(c));
  return Permutation::from_images(std::move(images));
}

Permutation frobenius_on_line(const GF& f) {
  const unsigned q = f.size();
  std::vector<Point> images(q + 1);
  for (unsigned x = 0; x < q; ++x) images[x] = f.frobenius(x);
  images[q] = q;
  return Permutation::from_images(std::move(images));
}

// ---- affine actions -------------------------------------------------------

// field encoding: element value is the point index
Permutation field_translation(const GF& f, unsigned a) {
  std::vector<Point> images(f.size());
  for (unsigned x = 0; x < f.size(); ++x) images[x] = f.add(x, a);
  return Permutation::from_images(std::move(images));
}

Permutation field_scaling(const GF& f, unsigned s) {
  std::vector<Point> images(f.size());
  for (unsigned x = 0; x < f.size(); ++x) images[x] = f.mul(x, s);
  return Permutation::from_images(std::move(images));
}

Permutation field_frobenius(const GF& f) {
  std::vector<Point> images(f.size());
  for (unsigned x = 0; x < f.size(); ++x) images[x] = f.frobenius(x);
  return Permutation::from_images(std::move(images));
}

// vector space GF(p)^d with points encoded base p
std::vector<unsigned> decode_vec(unsigned v, unsigned p, unsigned d) {
  std::vector<unsigned> out(d);
  for (unsigned i = 0; i < d; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

unsigned encode_vec(const std::vector<unsigned>& v, unsigned p) {
  unsigned out = 0;
  for (std::size_t i = v.size(); i-- > 0;) out = out * p + v[i];
  return out;
}

Permutation linear_map(unsigned p, unsigned d, const std::vector<int>& matrix) {
  unsigned q = 1;
  for (unsigned i = 0; i < d; ++i) q *= p;
  std::vector<Point> images(q);
  for (unsigned v = 0; v < q; ++v) {
    const auto vec = decode_vec(v, p, d);
    std::vector<unsigned> out(d, 0);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        const int entry = ((matrix[i * d + j] % static_cast<int>(p)) +
                           static_cast<int>(p)) %
                          static_cast<int>(p);
        out[i] = (out[i] + static_cast<unsigned>(entry) * vec[j]) % p;
      }
    images[v] = encode_vec(out, p);
  }
  return Permutation::from_images(std::move(images));
}

Permutation vector_translation(unsigned p, unsigned d, unsigned basis_index) {
  unsigned q = 1;
  for (unsigned i = 0; i < d; ++i) q *= p;
  std::vector<Point> images(q);
  for (unsigned v = 0; v < q; ++v) {
    auto vec = decode_vec(v, p, d);
    vec[basis_index] = (vec[basis_index] + 1) % p;
    images[v] = encode_vec(vec, p);
  }
  return Permutation::from_images(std::move(images));
}

// ---- PG(2,4) for PSL(3,4) --------------------------------------------------

struct ProjectivePlane {
  const GF& f;
  std::vector<std::array<unsigned, 3>> points;  // normalized representatives
  std::map<std::array<unsigned, 3>, unsigned> index;

  explicit ProjectivePlane(const GF& field) : f(field) {
    for (unsigned code = 1; code < f.size() * f.size() * f.size(); ++code) {
      std::array<unsigned, 3> v = {code % f.size(), code / f.size() % f.size(),
                                   code / (f.size() * f.size())};
      const auto rep = normalize(v);
      if (!index.count(rep)) {
        index.emplace(rep, static_cast<unsigned>(points.size()));
        points.push_back(rep);
      }
    }
  }

  std::array<unsigned, 3> normalize(std::array<unsigned, 3> v) const {
    for (unsigned i = 0; i < 3; ++i)
      if (v[i] != 0) {
        const unsigned s = f.inv(v[i]);
        for (unsigned j = 0; j < 3; ++j) v[j] = f.mul(v[j], s);
        return v;
      }
    throw InputError("zero vector has no projective point");
  }

  Permutation action(const std::array<std::array<unsigned, 3>, 3>& m) const {
    std::vector<Point> images(points.size());
    for (unsigned i = 0; i < points.size(); ++i) {
      const auto& v = points[i];
      std::array<unsigned, 3> w = {0, 0, 0};
      for (unsigned r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 3; ++c)
          w[r] = f.add(w[r], f.mul(m[r][c], v[c]));
      images[i] = index.at(normalize(w));
    }
    return Permutation::from_images(std::move(images));
  }
};

// ---- coset actions ---------------------------------------------------------

// Right-coset action of g on the cosets of h; requires |g:h| small.
PermutationGroup coset_action(const PermutationGroup& g,
                              const PermutationGroup& h,
                              const std::string& name) {
  std::vector<Permutation> all;
  g.for_each_element([&](const Permutation& x) { all.push_back(x); });
  std::vector<Permutation> reps;
  std::vector<int> coset_of(all.size(), -1);
  std::map<std::vector<Point>, std::size_t> element_index;
  for (std::size_t i = 0; i < all.size(); ++i)
    element_index.emplace(all[i].images(), i);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(all[i]);
    // mark the whole coset H * rep
    h.for_each_element([&](const Permutation& x) {
      const auto it = element_index.find((x * all[i]).images());
      check(it != element_index.end(), name, "coset element escaped the group");
      coset_of[it->second] = id;
    });
  }
  const unsigned degree = static_cast<unsigned>(reps.size());
  std::vector<Permutation> action_gens;
  for (const auto& gen : g.generators()) {
    std::vector<Point> images(degree);
    for (unsigned c = 0; c < degree; ++c) {
      const auto it = element_index.find((reps[c] * gen).images());
      check(it != element_index.end(), name, "generator image escaped");
      images[c] = static_cast<Point>(coset_of[it->second]);
    }
    action_gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermutationGroup::from_generators(degree, std::move(action_gens));
}

mpz_class element_order(const Permutation& g) { return cycle_data(g).order; }

std::uint64_t count_elements_of_order(const PermutationGroup& g, unsigned k) {
  std::uint64_t count = 0;
  g.for_each_element([&](const Permutation& x) {
    if (element_order(x) == k) ++count;
  });
  return count;
}

}  // namespace

PermutationGroup symmetric(unsigned n) {
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  std::vector<Permutation> gens = {Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {cyc}));
  return PermutationGroup::from_generators(n, std::move(gens));
}

PermutationGroup alternating(unsigned n) {
  if (n <= 2) return PermutationGroup::trivial(n);
  if (n == 3)
    return PermutationGroup::from_generators(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  std::vector<Point> cyc;
  if (n % 2 == 1)
    for (Point p = 0; p < n; ++p) cyc.push_back(p);
  else
    for (Point p = 1; p < n; ++p) cyc.push_back(p);
  return PermutationGroup::from_generators(
      n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cyc})});
}

unsigned pair_index(unsigned m, Point a, Point b) {
  if (a > b) std::swap(a, b);
  if (a == b || b >= m) throw InputError("invalid 2-subset");
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

Permutation pair_action_of(unsigned m, const Permutation& g) {
  const unsigned degree = m * (m - 1) / 2;
  std::vector<Point> images(degree);
  for (Point a = 0; a < m; ++a)
    for (Point b = a + 1; b < m; ++b)
      images[pair_index(m, a, b)] = pair_index(m, g(a), g(b));
  return Permutation::from_images(std::move(images));
}

PermutationGroup pairs_action_group(unsigned m) {
  std::vector<Permutation> gens;
  for (const auto& g : symmetric(m).generators())
    gens.push_back(pair_action_of(m, g));
  return PermutationGroup::from_generators(m * (m - 1) / 2, std::move(gens));
}

PermutationGroup wreath_product_action(unsigned m, unsigned l) {
  if (m < 2 || l < 2) throw InputError("wreath product action needs m, l >= 2");
  unsigned degree = 1;
  for (unsigned i = 0; i < l; ++i) degree *= m;
  // point <-> tuple (t_0, ..., t_{l-1}) base-m, coordinate 0 least significant
  auto coord_perm = [&](const Permutation& h) {
    std::vector<Point> images(degree);
    for (unsigned v = 0; v < degree; ++v)
      images[v] = v - (v % m) + h(v % m);
    return Permutation::from_images(std::move(images));
  };
  auto coords_rotate = [&] {  // (t_0, ..., t_{l-1}) -> (t_1, ..., t_{l-1}, t_0)
    std::vector<Point> images(degree);
    for (unsigned v = 0; v < degree; ++v) {
      std::vector<unsigned> t(l);
      unsigned x = v;
      for (unsigned i = 0; i < l; ++i) {
        t[i] = x % m;
        x /= m;
      }
      std::rotate(t.begin(), t.begin() + 1, t.end());
      unsigned out = 0;
      for (unsigned i = l; i-- > 0;) out = out * m + t[i];
      images[v] = out;
    }
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& g : symmetric(m).generators()) gens.push_back(coord_perm(g));
  gens.push_back(coords_rotate());
  if (l > 2) {
    // a coordinate transposition on top of the rotation
    std::vector<Point> images(degree);
    for (unsigned v = 0; v < degree; ++v) {
      std::vector<unsigned> t(l);
      unsigned x = v;
      for (unsigned i = 0; i < l; ++i) {
        t[i] = x % m;
        x /= m;
      }
      std::swap(t[0], t[1]);
      unsigned out = 0;
      for (unsigned i = l; i-- > 0;) out = out * m + t[i];
      images[v] = out;
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermutationGroup::from_generators(degree, std::move(gens));
}

namespace {

struct RecipeBuilder {
  std::vector<Recipe> recipes;

  void add(std::string name, PermutationGroup group, unsigned long order,
           std::string onan_scott, bool table1, std::string notes,
           bool expect_primitive = true) {
    check(group.order() == order, name,
          "order " + group.order().get_str() + ", expected " +
              std::to_string(order));
    check(group.is_transitive(), name, "not transitive");
    check(group.is_primitive() == expect_primitive, name, "primitivity flag");
    Recipe r;
    r.name = std::move(name);
    r.degree = group.degree();
    r.generators = group.generators();
    r.order = group.order();
    r.primitive = expect_primitive;
    r.onan_scott = std::move(onan_scott);
    r.table1 = table1;
    r.notes = std::move(notes);
    recipes.push_back(std::move(r));
  }

  void add_big(std::string name, PermutationGroup group, const mpz_class& order,
               std::string onan_scott, std::string notes) {
    check(group.order() == order, name, "order mismatch");
    check(group.is_transitive(), name, "not transitive");
    check(group.is_primitive(), name, "not primitive");
    Recipe r;
    r.name = std::move(name);
    r.degree = group.degree();
    r.generators = group.generators();
    r.order = group.order();
    r.primitive = true;
    r.onan_scott = std::move(onan_scott);
    r.table1 = false;
    r.notes = std::move(notes);
    recipes.push_back(std::move(r));
  }
};

PermutationGroup prime_affine(unsigned p, unsigned multiplier) {
  const GF f(p, 1);
  std::vector<Permutation> gens = {field_translation(f, 1)};
  if (multiplier != 1) gens.push_back(field_scaling(f, multiplier));
  return PermutationGroup::from_generators(p, std::move(gens));
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

std::vector<Recipe> synthesize_catalog() {
  RecipeBuilder b;

  // ---- degree 5 ----
  b.add("C5", prime_affine(5, 1), 5, "HA", true, "x -> x+1 on F5");
  b.add("D5", prime_affine(5, 4), 10, "HA", false, "x -> x+1, x -> -x on F5");
  b.add("AGL(1,5)", prime_affine(5, 2), 20, "HA", true,
        "x -> x+1, x -> 2x on F5; sharply 2-transitive and set-transitive");
  b.add("Alt(5)", alternating(5), 60, "AS", false, "natural action");
  b.add("Sym(5)", symmetric(5), 120, "AS", false, "natural action");

  // ---- degree 6 ----
  {
    const GF f5(5, 1);
    auto psl = PermutationGroup::from_generators(
        6, {moebius(f5, 1, 1, 0, 1), moebius(f5, 4, 0, 0, 1),
            moebius(f5, 0, 4, 1, 0)});
    b.add("PSL(2,5)", psl, 60, "AS", false, "Moebius action on PG(1,5)");
    auto pgl = PermutationGroup::from_generators(
        6, {moebius(f5, 1, 1, 0, 1), moebius(f5, 2, 0, 0, 1),
            moebius(f5, 0, 1, 1, 0)});
    b.add("PGL(2,5)", pgl, 120, "AS", true,
          "Moebius action on PG(1,5); set-transitive");
  }
  b.add("Alt(6)", alternating(6), 360, "AS", false, "natural action");
  b.add("Sym(6)", symmetric(6), 720, "AS", false, "natural action");

  // ---- degree 7 ----
  b.add("C7", prime_affine(7, 1), 7, "HA", true, "x -> x+1 on F7");
  b.add("D7", prime_affine(7, 6), 14, "HA", false, "x -> x+1, x -> -x on F7");
  b.add("C7:C3", prime_affine(7, 2), 21, "HA", true,
        "x -> x+1, x -> 2x on F7 (2 has order 3 mod 7)");
  b.add("AGL(1,7)", prime_affine(7, 3), 42, "HA", false,
        "x -> x+1, x -> 3x on F7");
  {
    auto t = linear_map(2, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto c = linear_map(2, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    // restrict to the 7 nonzero vectors (point v <-> index v-1)
    auto restrict_nonzero = [](const Permutation& g) {
      std::vector<Point> images(7);
      for (Point v = 1; v < 8; ++v) images[v - 1] = g(v) - 1;
      return Permutation::from_images(std::move(images));
    };
    auto psl32 = PermutationGroup::from_generators(
        7, {restrict_nonzero(t), restrict_nonzero(c)});
    b.add("PSL(2,7)", psl32, 168, "AS", false,
          "PSL(3,2) on the seven points of PG(2,2); isomorphic to the "
          "degree-8 Moebius action as an abstract group");
  }
  b.add("Alt(7)", alternating(7), 2520, "AS", false, "natural action");
  b.add("Sym(7)", symmetric(7), 5040, "AS", false, "natural action");

  // ---- degree 8 ----
  {
    const GF f8(2, 3);
    const unsigned g = f8.primitive_element();
    auto agl = PermutationGroup::from_generators(
        8, {field_translation(f8, 1), field_scaling(f8, g)});
    b.add("AGL(1,8)", agl, 56, "HA", true, "x -> x+1, x -> gx on F8");
    auto agammal = PermutationGroup::from_generators(
        8, {field_translation(f8, 1), field_scaling(f8, g), field_frobenius(f8)});
    b.add("AGammaL(1,8)", agammal, 168, "HA", true,
          "AGL(1,8) extended by the Frobenius x -> x^2");
  }
  {
    const GF f7(7, 1);
    auto psl = PermutationGroup::from_generators(
        8, {moebius(f7, 1, 1, 0, 1), moebius(f7, 2, 0, 0, 1),
            moebius(f7, 0, 6, 1, 0)});
    b.add("PSL(2,7)", psl, 168, "AS", true, "Moebius action on PG(1,7)");
    auto pgl = PermutationGroup::from_generators(
        8, {moebius(f7, 1, 1, 0, 1), moebius(f7, 3, 0, 0, 1),
            moebius(f7, 0, 1, 1, 0)});
    b.add("PGL(2,7)", pgl, 336, "AS", false, "Moebius action on PG(1,7)");
  }
  {
    auto agl32 = PermutationGroup::from_generators(
        8, {vector_translation(2, 3, 0),
            linear_map(2, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}),
            linear_map(2, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0})});
    b.add("AGL(3,2)", agl32, 1344, "HA", false, "affine space AG(3,2)");
  }
  b.add("Alt(8)", alternating(8), 20160, "AS", false, "natural action");
  b.add("Sym(8)", symmetric(8), 40320, "AS", false, "natural action");

  // ---- degree 9 ----
  {
    auto t = vector_translation(3, 2, 0);
    const std::vector<int> rot = {0, -1, 1, 0};     // order 4, irreducible
    const std::vector<int> refl = {1, 0, 0, -1};    // diag(1,-1)
    const std::vector<int> bq = {1, 1, 1, -1};      // completes Q8 with rot
    const std::vector<int> transvection = {1, 1, 0, 1};

    auto c4 = PermutationGroup::from_generators(9, {t, linear_map(3, 2, rot)});
    b.add("3^2:4", c4, 36, "HA", true,
          "affine plane F_3^2 with cyclic point stabilizer of order 4");

    auto d8 = PermutationGroup::from_generators(
        9, {t, linear_map(3, 2, rot), linear_map(3, 2, refl)});
    check(count_elements_of_order(d8, 2) == 21, "3^2:D8",
          "involution count distinguishes the dihedral stabilizer");
    b.add("3^2:D8", d8, 72, "HA", false,
          "affine plane F_3^2 with dihedral point stabilizer (21 involutions)");

    auto q8 = PermutationGroup::from_generators(
        9, {t, linear_map(3, 2, rot), linear_map(3, 2, bq)});
    check(count_elements_of_order(q8, 2) == 9, "3^2:Q8",
          "involution count distinguishes the quaternion stabilizer");
    check(count_elements_of_order(q8, 8) == 0, "3^2:Q8", "no elements of order 8");
    b.add("3^2:Q8", q8, 72, "HA", true,
          "affine plane F_3^2 with quaternion point stabilizer "
          "(9 involutions, no order-8 elements)");

    const GF f9(3, 2);
    const unsigned g = f9.primitive_element();
    auto agl19 = PermutationGroup::from_generators(
        9, {field_translation(f9, 1), field_scaling(f9, g)});
    check(count_elements_of_order(agl19, 8) == 36, "AGL(1,9)",
          "Singer stabilizer has 36 elements of order 8");
    b.add("AGL(1,9)", agl19, 72, "HA", true,
          "x -> x+1, x -> gx on F9 (36 elements of order 8)");

    auto agammal19 = PermutationGroup::from_generators(
        9, {field_translation(f9, 1), field_scaling(f9, g), field_frobenius(f9)});
    b.add("AGammaL(1,9)", agammal19, 144, "HA", false,
          "AGL(1,9) extended by the Frobenius x -> x^3");

    auto asl23 = PermutationGroup::from_generators(
        9, {t, linear_map(3, 2, rot), linear_map(3, 2, transvection)});
    b.add("ASL(2,3)", asl23, 216, "HA", true, "affine plane with SL(2,3)");

    auto agl23 = PermutationGroup::from_generators(
        9, {t, linear_map(3, 2, rot), linear_map(3, 2, transvection),
            linear_map(3, 2, refl)});
    b.add("AGL(2,3)", agl23, 432, "HA", false, "affine plane with GL(2,3)");
  }
  {
    const GF f8(2, 3);
    const unsigned g = f8.primitive_element();
    auto psl28 = PermutationGroup::from_generators(
        9, {moebius(f8, 1, 1, 0, 1), moebius(f8, g, 0, 0, 1),
            moebius(f8, 0, 1, 1, 0)});
    b.add("PSL(2,8)", psl28, 504, "AS", true,
          "Moebius action on PG(1,8); set-transitive");
    auto pgammal28 = PermutationGroup::from_generators(
        9, {moebius(f8, 1, 1, 0, 1), moebius(f8, g, 0, 0, 1),
            moebius(f8, 0, 1, 1, 0), frobenius_on_line(f8)});
    b.add("PGammaL(2,8)", pgammal28, 1512, "AS", true,
          "PSL(2,8) extended by the field automorphisms; set-transitive");
  }
  b.add("Alt(9)", alternating(9), 181440, "AS", false, "natural action");
  b.add("Sym(9)", symmetric(9), 362880, "AS", false, "natural action");

  // ---- degree 10 ----
  {
    std::vector<Permutation> a5_pairs, s5_pairs;
    for (const auto& g : alternating(5).generators())
      a5_pairs.push_back(pair_action_of(5, g));
    for (const auto& g : symmetric(5).generators())
      s5_pairs.push_back(pair_action_of(5, g));
    b.add("Alt(5)", PermutationGroup::from_generators(10, a5_pairs), 60, "AS",
          false, "action on the 2-subsets of 5 points (Petersen graph)");
    b.add("Sym(5)", PermutationGroup::from_generators(10, s5_pairs), 120, "AS",
          false, "action on the 2-subsets of 5 points");
  }
  {
    const GF f9(3, 2);
    const unsigned g = f9.primitive_element();
    const unsigned g2 = f9.mul(g, g);
    auto translation = moebius(f9, 1, 1, 0, 1);
    auto neg_inv = moebius(f9, 0, f9.neg(1), 1, 0);
    auto psl = PermutationGroup::from_generators(
        10, {translation, moebius(f9, g2, 0, 0, 1), neg_inv});
    b.add("PSL(2,9)", psl, 360, "AS", true, "Moebius action on PG(1,9)");

    auto pgl = PermutationGroup::from_generators(
        10, {translation, moebius(f9, g, 0, 0, 1), moebius(f9, 0, 1, 1, 0)});
    b.add("PGL(2,9)", pgl, 720, "AS", true, "Moebius action on PG(1,9)");

    auto frob = frobenius_on_line(f9);
    auto psigmal = PermutationGroup::from_generators(
        10, {translation, moebius(f9, g2, 0, 0, 1), neg_inv, frob});
    check(!psigmal.contains(moebius(f9, g, 0, 0, 1)), "PSigmaL(2,9)",
          "must not contain the full scaling");
    b.add("PSigmaL(2,9)", psigmal, 720, "AS", false,
          "PSL(2,9) extended by the Frobenius (isomorphic to Sym(6))");

    // M10: extend PSL(2,9) by (x -> g x^3), a product of the Frobenius and
    // a non-square scaling; its square x -> g^4 x lies in PSL(2,9).
    const unsigned q = f9.size();
    std::vector<Point> images(q + 1);
    for (unsigned x = 0; x < q; ++x) images[x] = f9.mul(g, f9.frobenius(x));
    images[q] = q;
    auto twisted = Permutation::from_images(std::move(images));
    auto m10 = PermutationGroup::from_generators(
        10, {translation, moebius(f9, g2, 0, 0, 1), neg_inv, twisted});
    check(!pgl.contains(twisted), "M10", "coset element must avoid PGL(2,9)");
    check(!psigmal.contains(twisted), "M10",
          "coset element must avoid PSigmaL(2,9)");
    b.add("M10", m10, 720, "AS", false,
          "PSL(2,9) extended by x -> g x^3 (the third index-2 extension)");

    auto pgammal = PermutationGroup::from_generators(
        10, {translation, moebius(f9, g, 0, 0, 1), moebius(f9, 0, 1, 1, 0), frob});
    b.add("PGammaL(2,9)", pgammal, 1440, "AS", false,
          "the full automorphism extension over PG(1,9)");
  }
  b.add("Alt(10)", alternating(10), 1814400, "AS", false, "natural action");
  b.add("Sym(10)", symmetric(10), 3628800, "AS", false, "natural action");

  // ---- degree 11 ----
  b.add("C11", prime_affine(11, 1), 11, "HA", true, "x -> x+1 on F11");
  b.add("D11", prime_affine(11, 10), 22, "HA", false, "x -> x+1, x -> -x");
  b.add("C11:C5", prime_affine(11, 3), 55, "HA", true,
        "x -> x+1, x -> 3x on F11 (3 has order 5 mod 11)");
  b.add("AGL(1,11)", prime_affine(11, 2), 110, "HA", false,
        "x -> x+1, x -> 2x on F11");

  PermutationGroup psl2_11_deg12 = PermutationGroup::trivial(1);
  {
    const GF f11(11, 1);
    auto translation = moebius(f11, 1, 1, 0, 1);
    auto scale4 = moebius(f11, 4, 0, 0, 1);  // 4 = 2^2 generates the squares
    auto neg_inv = moebius(f11, 0, 10, 1, 0);
    psl2_11_deg12 = PermutationGroup::from_generators(
        12, {translation, scale4, neg_inv});

    // the icosahedral subgroup from the presentation
    // <s, t | s^5 = t^2 = (st)^3 = 1>: any nontrivial quotient is Alt(5)
    auto s = moebius(f11, 3, 0, 0, 1);
    auto t = moebius(f11, 3, 1, 1, 8);  // trace 0 involution; 8 = -3 mod 11
    check(element_order(s) == 5, "PSL(2,11)@11", "s must have order 5");
    check(element_order(t) == 2, "PSL(2,11)@11", "t must have order 2");
    check(element_order(s * t) == 3, "PSL(2,11)@11", "st must have order 3");
    auto a5 = PermutationGroup::from_generators(12, {s, t});
    check(a5.order() == 60, "PSL(2,11)@11", "icosahedral subgroup order");
    auto exotic = coset_action(psl2_11_deg12, a5, "PSL(2,11)@11");
    b.add("PSL(2,11)", exotic, 660, "AS", false,
          "action on the 11 cosets of an icosahedral subgroup of PSL(2,11)");
  }

  PermutationGroup m11 = PermutationGroup::trivial(1);
  {
    auto c11 = parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 11);
    auto extra = parse_permutation("(3,7,11,8)(4,10,5,6)", 11);
    m11 = PermutationGroup::from_generators(11, {c11, extra});
    b.add("M11", m11, 7920, "AS", false,
          "Mathieu group on 11 points, classical generators");
  }
  b.add("Alt(11)", alternating(11), 19958400, "AS", false, "natural action");
  b.add_big("Sym(11)", symmetric(11), factorial(11), "AS", "natural action");

  // ---- degree 12 ----
  {
    // transitive PSL(2,11) inside M11: extend the Sylow-11 normalizer by the
    // smallest involution that keeps the order at 660, then act on cosets
    const auto c11 = m11.generators()[0];
    std::vector<Permutation> involutions;
    m11.for_each_element([&](const Permutation& x) {
      if (!x.is_identity() && element_order(x) == 2) involutions.push_back(x);
    });
    std::sort(involutions.begin(), involutions.end());
    PermutationGroup l2_11 = PermutationGroup::trivial(11);
    bool found = false;
    for (const auto& t : involutions) {
      auto candidate = PermutationGroup::from_generators(11, {c11, t});
      if (candidate.order() == 660) {
        l2_11 = candidate;
        found = true;
        break;
      }
    }
    check(found, "M11@12", "no PSL(2,11) subgroup found in M11");
    auto m11_on_12 = coset_action(m11, l2_11, "M11@12");
    b.add("M11", m11_on_12, 7920, "AS", false,
          "Mathieu group of degree 11 acting on the 12 cosets of PSL(2,11)");
  }
  {
    auto c11 = parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 12);
    auto extra = parse_permutation("(3,7,11,8)(4,10,5,6)", 12);
    auto outer = parse_permutation("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12);
    auto m12 = PermutationGroup::from_generators(12, {c11, extra, outer});
    b.add("M12", m12, 95040, "AS", false,
          "Mathieu group on 12 points, classical generators");
  }
  b.add("PSL(2,11)", psl2_11_deg12, 660, "AS", false,
        "Moebius action on PG(1,11)");
  {
    const GF f11(11, 1);
    auto pgl = PermutationGroup::from_generators(
        12, {moebius(f11, 1, 1, 0, 1), moebius(f11, 2, 0, 0, 1),
             moebius(f11, 0, 1, 1, 0)});
    b.add("PGL(2,11)", pgl, 1320, "AS", false, "Moebius action on PG(1,11)");
  }
  b.add_big("Alt(12)", alternating(12), factorial(12) / 2, "AS",
            "natural action");
  b.add_big("Sym(12)", symmetric(12), factorial(12), "AS", "natural action");

  // ---- degree 21 ----
  {
    const GF f4(2, 2);
    ProjectivePlane plane(f4);
    check(plane.points.size() == 21, "PSL(3,4)", "PG(2,4) has 21 points");
    const unsigned w = f4.primitive_element();
    const unsigned w2 = f4.mul(w, w);
    auto t = plane.action({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
    auto c = plane.action({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
    auto d = plane.action({{{w, 0, 0}, {0, w2, 0}, {0, 0, 1}}});
    auto psl34 = PermutationGroup::from_generators(21, {t, c, d});
    b.add("PSL(3,4)", psl34, 20160, "AS", false,
          "action on the 21 points of PG(2,4)");
  }
  {
    std::vector<Permutation> gens;
    for (const auto& g : symmetric(7).generators())
      gens.push_back(pair_action_of(7, g));
    b.add("Sym(7)", PermutationGroup::from_generators(21, gens), 5040, "AS",
          false, "action on the 2-subsets of 7 points");
  }

  // ---- degree 25 ----
  b.add("Sym(5)wrSym(2)", wreath_product_action(5, 2), 28800, "PA", false,
        "product action on 5^2 points");

  return b.recipes;
}

}  // namespace primaut::synth
