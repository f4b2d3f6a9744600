#include "primaut/gf.hpp"

namespace primaut {

namespace {

// polynomial coefficient access for the base-p digit encoding
std::vector<unsigned> digits(unsigned v, unsigned p, unsigned k) {
  std::vector<unsigned> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

unsigned encode(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

GF::GF(unsigned p, unsigned k) : p_(p), k_(k) {
  if (p < 2 || k == 0 || k > 3) throw InputError("GF supports p^k with k <= 3");
  for (unsigned d = 2; d < p; ++d)
    if (p % d == 0) throw InputError("GF characteristic must be prime");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;

  // Find a monic irreducible polynomial x^k + c_{k-1} x^{k-1} + ... + c_0.
  // For k in {2,3} irreducibility over GF(p) is equivalent to having no root.
  std::vector<unsigned> modulus(k, 0);
  if (k == 1) {
    modulus[0] = 0;  // x; unused
  } else {
    bool found = false;
    for (unsigned code = 0; code < q_ && !found; ++code) {
      const auto c = digits(code, p, k);
      bool has_root = false;
      for (unsigned x = 0; x < p && !has_root; ++x) {
        unsigned long value = 1;  // x^k
        for (unsigned i = 0; i < k; ++i) value = value * x % p;
        for (unsigned i = k; i-- > 0;) {
          unsigned long xi = 1;
          for (unsigned t = 0; t < i; ++t) xi = xi * x % p;
          value = (value + static_cast<unsigned long>(c[i]) * xi) % p;
        }
        if (value % p == 0) has_root = true;
      }
      if (!has_root) {
        modulus = c;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  // full multiplication table by polynomial multiplication mod the modulus
  mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p, k);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p, k);
      std::vector<unsigned> prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // reduce: x^k = -modulus tail
      for (unsigned deg = 2 * k - 2; deg >= k && deg < prod.size(); --deg) {
        const unsigned coeff = prod[deg];
        if (coeff) {
          prod[deg] = 0;
          for (unsigned i = 0; i < k; ++i) {
            const unsigned sub = (coeff * modulus[i]) % p;
            prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
          }
        }
        if (deg == k) break;
      }
      prod.resize(k);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = encode(prod, p);
    }
  }

  // smallest multiplicative generator
  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g;
    unsigned order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned GF::add(unsigned a, unsigned b) const {
  const auto da = digits(a, p_, k_);
  const auto db = digits(b, p_, k_);
  std::vector<unsigned> sum(k_);
  for (unsigned i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
  return encode(sum, p_);
}

unsigned GF::neg(unsigned a) const {
  const auto da = digits(a, p_, k_);
  std::vector<unsigned> out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = (p_ - da[i]) % p_;
  return encode(out, p_);
}

unsigned GF::inv(unsigned a) const {
  if (a == 0) throw InputError("zero has no inverse");
  for (unsigned b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("inverse not found");
}

unsigned GF::pow(unsigned a, unsigned long e) const {
  unsigned result = 1;
  unsigned base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace primaut
