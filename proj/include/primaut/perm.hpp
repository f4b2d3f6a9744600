#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "primaut/errors.hpp"

namespace primaut {

using Point = std::uint32_t;

/// A permutation of {0..n-1}, stored as its image table.
///
/// Composition is left-to-right throughout: (a * b) maps x to b(a(x)),
/// so exponent notation chains as x^(ab) = (x^a)^b.
class Permutation {
public:
  /// Identity on n points.
  explicit Permutation(unsigned n);

  /// Builds from an image table; validates that it is a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Builds from disjoint cycles over 0-indexed points.
  static Permutation from_cycles(unsigned n,
                                 const std::vector<std::vector<Point>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Image of a subset given as a bitmask (degree <= 64).
  std::uint64_t apply_mask(std::uint64_t mask) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<Point> images_;
};

/// Full cycle decomposition of a permutation, fixed points included.
struct CycleData {
  std::vector<std::vector<Point>> cycles;  // partition of the domain
  unsigned fix_count = 0;                  // number of length-1 cycles
  unsigned orbit_count = 0;                // total number of cycles
  mpz_class order;                         // lcm of cycle lengths
  std::optional<unsigned> smallest_prime;  // smallest prime dividing the order;
                                           // empty for the identity
};

CycleData cycle_data(const Permutation& g);

/// Number of subsets of the domain invariant under g, i.e. 2^(cycle count).
mpz_class invariant_subset_count(const Permutation& g);

/// Lazily enumerates the g-invariant subsets (exactly the unions of cycles
/// of g) as bitmasks. Requires degree <= limit <= 64.
class InvariantSubsetRange {
public:
  InvariantSubsetRange(const Permutation& g, unsigned limit);

  class iterator {
  public:
    using value_type = std::uint64_t;
    std::uint64_t operator*() const;
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return index_ != o.index_; }

  private:
    friend class InvariantSubsetRange;
    iterator(const InvariantSubsetRange* r, std::uint64_t index)
        : range_(r), index_(index) {}
    const InvariantSubsetRange* range_;
    std::uint64_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  std::uint64_t size() const { return count_; }

private:
  std::vector<std::uint64_t> cycle_masks_;
  std::uint64_t count_;
};

InvariantSubsetRange invariant_subsets(const Permutation& g, unsigned limit = 30);

/// Disjoint cycle notation with 1-indexed points, e.g. "(1,2,3)(4,5)".
/// The identity prints as "()".
std::string to_cycle_string(const Permutation& g);

/// Parses 1-indexed cycle notation on a domain of the given size.
/// Whitespace is permitted; fixed points may be listed or omitted.
/// Throws InputError with a character position on malformed input.
Permutation parse_permutation(std::string_view text, unsigned degree);

}  // namespace primaut
