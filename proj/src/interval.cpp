#include "primaut/interval.hpp"

#include <sstream>

namespace primaut {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : precision_(o.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : precision_(o.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  std::swap(precision_, o.precision_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact_ui(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::exact_int(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pow2_int(long e, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui_2exp(r.lo_, 1, e, MPFR_RNDD);
  mpfr_set_ui_2exp(r.hi_, 1, e, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision_, b.precision_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision_, b.precision_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
  Interval r(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  bool first = true;
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_mul(tmp, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(tmp, r.lo_) < 0) mpfr_set(r.lo_, tmp, MPFR_RNDD);
    mpfr_mul(tmp, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(tmp, r.hi_) > 0) mpfr_set(r.hi_, tmp, MPFR_RNDU);
    first = false;
  };
  consider(a.lo_, b.lo_);
  consider(a.lo_, b.hi_);
  consider(a.hi_, b.lo_);
  consider(a.hi_, b.hi_);
  mpfr_clear(tmp);
  return r;
}

Interval Interval::exp2(const Interval& x) {
  Interval r(x.precision_);
  mpfr_exp2(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp2(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2(const Interval& x) {
  if (!x.certainly_positive())
    throw UndecidedError("log2 of an interval not certainly positive");
  Interval r(x.precision_);
  mpfr_log2(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(const Interval& base, const Interval& expo) {
  return exp2(expo * log2(base));
}

Interval Interval::nth_root(const Interval& x, unsigned long k) {
  if (mpfr_sgn(x.lo_) < 0) throw UndecidedError("root of a negative interval");
  Interval r(x.precision_);
  mpfr_rootn_ui(r.lo_, x.lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, x.hi_, k, MPFR_RNDU);
  return r;
}

bool Interval::certainly_less(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::is_finite() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

std::string Interval::to_string() const {
  char* lo_str = nullptr;
  char* hi_str = nullptr;
  mpfr_asprintf(&lo_str, "%.8Rg", lo_);
  mpfr_asprintf(&hi_str, "%.8Rg", hi_);
  std::string out = std::string("[") + lo_str + ", " + hi_str + "]";
  mpfr_free_str(lo_str);
  mpfr_free_str(hi_str);
  return out;
}

}  // namespace primaut
