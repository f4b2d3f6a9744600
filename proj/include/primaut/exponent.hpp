#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primaut/interval.hpp"

namespace primaut {

/// Exact symbolic exponent: a rational constant plus a polynomial with
/// rational coefficients in the variables log2(p), p prime. log2 of any
/// positive rational normalizes onto these variables, with powers of two
/// folding into the constant, so equal values get equal normal forms.
class ExponentExpr {
public:
  /// A monomial is a sorted multiset of primes; {3,3} stands for log2(3)^2.
  using Monomial = std::vector<unsigned long>;

  ExponentExpr() : constant_(0) {}

  static ExponentExpr constant(const mpq_class& c);
  static ExponentExpr log2_of(unsigned long v);
  static ExponentExpr log2_of_rational(const mpq_class& v);

  ExponentExpr& operator+=(const ExponentExpr& o);
  ExponentExpr& operator-=(const ExponentExpr& o);
  friend ExponentExpr operator+(ExponentExpr a, const ExponentExpr& b) {
    a += b;
    return a;
  }
  friend ExponentExpr operator-(ExponentExpr a, const ExponentExpr& b) {
    a -= b;
    return a;
  }
  ExponentExpr& scale(const mpq_class& s);
  friend ExponentExpr operator*(const ExponentExpr& a, const ExponentExpr& b);

  bool operator==(const ExponentExpr& o) const {
    return constant_ == o.constant_ && terms_ == o.terms_;
  }

  const mpq_class& constant_part() const { return constant_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  Interval evaluate(mpfr_prec_t prec) const;

  /// 2^(this expression) as an exact rational: available when the constant
  /// is an integer and every term is an integer multiple of a single
  /// log2(prime).
  std::optional<mpq_class> exact_pow2() const;

  /// Sign of the expression, certified: -1, 0, +1. Exact for rational
  /// expressions, interval-based with precision escalation otherwise.
  int certified_sign(mpfr_prec_t max_prec = 4096) const;

  /// Floor with the same certification discipline; escalates precision and
  /// refuses to guess when the value straddles an integer.
  mpz_class certified_floor(mpfr_prec_t max_prec = 4096) const;

  std::string to_string() const;

private:
  void add_term(Monomial m, const mpq_class& coeff);
  mpq_class constant_;
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace primaut
