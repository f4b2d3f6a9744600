#include "primaut/exponent.hpp"

#include <algorithm>
#include <sstream>

namespace primaut {

ExponentExpr ExponentExpr::constant(const mpq_class& c) {
  ExponentExpr e;
  e.constant_ = c;
  e.constant_.canonicalize();
  return e;
}

void ExponentExpr::add_term(Monomial m, const mpq_class& coeff) {
  if (coeff == 0) return;
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentExpr ExponentExpr::log2_of(unsigned long v) {
  if (v == 0) throw InputError("log2 argument must be positive");
  ExponentExpr e;
  unsigned long rest = v;
  long twos = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  e.constant_ = twos;
  for (unsigned long p = 3; p * p <= rest; p += 2) {
    unsigned long mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    if (mult) e.add_term({p}, mpq_class(mult));
  }
  if (rest > 1) e.add_term({rest}, 1);
  return e;
}

ExponentExpr ExponentExpr::log2_of_rational(const mpq_class& v) {
  if (v <= 0) throw InputError("log2 argument must be positive");
  if (!v.get_num().fits_ulong_p() || !v.get_den().fits_ulong_p())
    throw InputError("log2 argument too large to factor");
  ExponentExpr num = log2_of(v.get_num().get_ui());
  ExponentExpr den = log2_of(v.get_den().get_ui());
  num -= den;
  return num;
}

ExponentExpr& ExponentExpr::operator+=(const ExponentExpr& o) {
  constant_ += o.constant_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExponentExpr& ExponentExpr::operator-=(const ExponentExpr& o) {
  constant_ -= o.constant_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExponentExpr& ExponentExpr::scale(const mpq_class& s) {
  if (s == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ExponentExpr operator*(const ExponentExpr& a, const ExponentExpr& b) {
  ExponentExpr r;
  r.constant_ = a.constant_ * b.constant_;
  for (const auto& [m, c] : a.terms_) r.add_term(m, c * b.constant_);
  for (const auto& [m, c] : b.terms_) r.add_term(m, c * a.constant_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ExponentExpr::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

Interval ExponentExpr::evaluate(mpfr_prec_t prec) const {
  Interval result = Interval::from_rational(constant_, prec);
  std::map<unsigned long, Interval> log_cache;
  for (const auto& [monomial, coeff] : terms_) {
    Interval term = Interval::from_rational(coeff, prec);
    for (unsigned long p : monomial) {
      auto it = log_cache.find(p);
      if (it == log_cache.end())
        it = log_cache.emplace(p, Interval::log2(Interval::exact_ui(p, prec))).first;
      term = term * it->second;
    }
    result = result + term;
  }
  return result;
}

std::optional<mpq_class> ExponentExpr::exact_pow2() const {
  mpz_class c_int;
  if (constant_.get_den() != 1) return std::nullopt;
  c_int = constant_.get_num();
  mpq_class value;
  if (c_int >= 0) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, c_int.get_ui());
    value = num;
  } else {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, mpz_class(-c_int).get_ui());
    value = mpq_class(1) / mpq_class(den);
  }
  for (const auto& [monomial, coeff] : terms_) {
    if (monomial.size() != 1 || coeff.get_den() != 1) return std::nullopt;
    const mpz_class& e = coeff.get_num();
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), monomial[0],
                  mpz_class(abs(e)).get_ui());
    if (e >= 0)
      value *= power;
    else
      value /= power;
  }
  value.canonicalize();
  return value;
}

int ExponentExpr::certified_sign(mpfr_prec_t max_prec) const {
  if (is_rational()) return sgn(constant_);
  for (mpfr_prec_t prec = 128; prec <= max_prec; prec *= 2) {
    const Interval v = evaluate(prec);
    if (mpfr_sgn(v.lower()) > 0) return 1;
    if (mpfr_sgn(v.upper()) < 0) return -1;
  }
  throw UndecidedError("sign undecided at maximum precision: " + to_string());
}

mpz_class ExponentExpr::certified_floor(mpfr_prec_t max_prec) const {
  if (is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), constant_.get_num().get_mpz_t(),
               constant_.get_den().get_mpz_t());
    return q;
  }
  for (mpfr_prec_t prec = 128; prec <= max_prec; prec *= 2) {
    const Interval v = evaluate(prec);
    mpz_class lo_floor, hi_floor;
    mpfr_t tmp;
    mpfr_init2(tmp, prec);
    mpfr_floor(tmp, v.lower());
    mpfr_get_z(lo_floor.get_mpz_t(), tmp, MPFR_RNDD);
    mpfr_floor(tmp, v.upper());
    mpfr_get_z(hi_floor.get_mpz_t(), tmp, MPFR_RNDU);
    mpfr_clear(tmp);
    if (lo_floor == hi_floor) return lo_floor;
  }
  throw UndecidedError("floor straddles an integer at maximum precision: " +
                       to_string());
}

std::string ExponentExpr::to_string() const {
  std::ostringstream out;
  out << constant_;
  for (const auto& [monomial, coeff] : terms_) {
    out << " + " << coeff;
    for (unsigned long p : monomial) out << "*log2(" << p << ")";
  }
  return out.str();
}

}  // namespace primaut
