#pragma once

#include <mpfr.h>

#include <string>

#include <gmpxx.h>

#include "primaut/errors.hpp"

namespace primaut {

/// Closed interval [lower, upper] of arbitrary-precision binary floats with
/// outward rounding at every step, so the true value is always bracketed.
class Interval {
public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval exact_ui(unsigned long v, mpfr_prec_t prec);
  static Interval exact_int(const mpz_class& v, mpfr_prec_t prec);
  static Interval from_rational(const mpq_class& v, mpfr_prec_t prec);
  /// Exactly 2^e.
  static Interval pow2_int(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return precision_; }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);

  static Interval exp2(const Interval& x);
  /// Requires a certainly positive argument.
  static Interval log2(const Interval& x);
  /// base^expo for a certainly positive base.
  static Interval pow(const Interval& base, const Interval& expo);
  static Interval nth_root(const Interval& x, unsigned long k);

  bool certainly_less(const Interval& o) const;
  bool certainly_positive() const;
  bool is_finite() const;

  double lower_approx() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_approx() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  std::string to_string() const;

private:
  mpfr_prec_t precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace primaut
