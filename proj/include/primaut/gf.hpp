#pragma once

#include <vector>

#include "primaut/errors.hpp"

namespace primaut {

/// Arithmetic in a small finite field GF(p^k), k <= 3. Elements are encoded
/// as integers 0..p^k-1 via base-p digits (polynomial coefficients); a monic
/// irreducible polynomial is found at construction.
class GF {
public:
  GF(unsigned p, unsigned k);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned size() const { return q_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const { return mul_table_[a * q_ + b]; }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  /// A fixed generator of the multiplicative group (smallest by encoding).
  unsigned primitive_element() const { return primitive_; }

private:
  unsigned p_, k_, q_;
  std::vector<unsigned> mul_table_;
  unsigned primitive_ = 0;
};

}  // namespace primaut
