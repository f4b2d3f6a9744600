#include "primaut/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace primaut {

Permutation::Permutation(unsigned n) : images_(n) {
  if (n == 0) throw InputError("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw InputError("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw InputError("image table is not a bijection");
    seen[v] = true;
  }
  Permutation g(static_cast<unsigned>(images.size()));
  g.images_ = std::move(images);
  return g;
}

Permutation Permutation::from_cycles(
    unsigned n, const std::vector<std::vector<Point>>& cycles) {
  Permutation g(n);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point a = cyc[i];
      Point b = cyc[(i + 1) % cyc.size()];
      if (a >= n || b >= n) throw InputError("cycle point out of range");
      if (used[a]) throw InputError("point repeated across cycles");
      used[a] = true;
      g.images_[a] = b;
    }
  }
  return g;
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation g(degree());
  g.images_ = std::move(inv);
  return g;
}

std::uint64_t Permutation::apply_mask(std::uint64_t mask) const {
  if (degree() > 64) throw LimitError("bitmask subsets require degree <= 64");
  std::uint64_t out = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << images_[static_cast<Point>(b)];
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InputError("cannot compose permutations on different domains");
  std::vector<Point> images(a.degree());
  for (Point i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  Permutation g(a.degree());
  g.images_ = std::move(images);
  return g;
}

namespace {

unsigned smallest_prime_factor(unsigned v) {
  for (unsigned p = 2; p * p <= v; ++p)
    if (v % p == 0) return p;
  return v;
}

}  // namespace

CycleData cycle_data(const Permutation& g) {
  CycleData data;
  const unsigned n = g.degree();
  std::vector<bool> seen(n, false);
  data.order = 1;
  unsigned smallest = 0;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    Point x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = g(x);
    } while (x != start);
    const unsigned len = static_cast<unsigned>(cycle.size());
    if (len == 1) {
      ++data.fix_count;
    } else {
      mpz_class l = len;
      mpz_lcm(data.order.get_mpz_t(), data.order.get_mpz_t(), l.get_mpz_t());
      const unsigned p = smallest_prime_factor(len);
      if (smallest == 0 || p < smallest) smallest = p;
    }
    data.cycles.push_back(std::move(cycle));
  }
  data.orbit_count = static_cast<unsigned>(data.cycles.size());
  if (smallest != 0) data.smallest_prime = smallest;
  return data;
}

mpz_class invariant_subset_count(const Permutation& g) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, cycle_data(g).orbit_count);
  return result;
}

InvariantSubsetRange::InvariantSubsetRange(const Permutation& g, unsigned limit) {
  if (g.degree() > limit || limit > 64)
    throw LimitError("invariant subset enumeration limited to degree " +
                     std::to_string(std::min(limit, 64u)));
  for (const auto& cyc : cycle_data(g).cycles) {
    std::uint64_t mask = 0;
    for (Point p : cyc) mask |= std::uint64_t{1} << p;
    cycle_masks_.push_back(mask);
  }
  count_ = std::uint64_t{1} << cycle_masks_.size();
}

std::uint64_t InvariantSubsetRange::iterator::operator*() const {
  std::uint64_t mask = 0;
  std::uint64_t bits = index_;
  while (bits) {
    const int b = std::countr_zero(bits);
    bits &= bits - 1;
    mask |= range_->cycle_masks_[static_cast<std::size_t>(b)];
  }
  return mask;
}

InvariantSubsetRange invariant_subsets(const Permutation& g, unsigned limit) {
  return InvariantSubsetRange(g, limit);
}

std::string to_cycle_string(const Permutation& g) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycle_data(g).cycles) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ',';
      out << cyc[i] + 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation parse_permutation(std::string_view text, unsigned degree) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> void {
    throw InputError("cycle notation error at position " + std::to_string(pos) +
                     ": " + msg);
  };
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip_ws = [&] {
    while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < len) {
    if (text[i] != '(') fail(i, "expected '('");
    ++i;
    saw_cycle = true;
    std::vector<Point> cycle;
    skip_ws();
    while (i < len && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(i, "expected a point number");
      unsigned long v = 0;
      const std::size_t start = i;
      while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > degree) fail(start, "point exceeds the degree");
        ++i;
      }
      if (v == 0) fail(start, "points are 1-indexed");
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < len && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i >= len) fail(len, "unterminated cycle");
    ++i;  // consume ')'
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (!saw_cycle) fail(0, "expected at least \"()\"");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InputError& e) {
    throw InputError(std::string("cycle notation error: ") + e.what());
  }
}

}  // namespace primaut
