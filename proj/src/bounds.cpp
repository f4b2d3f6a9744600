#include "primaut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include <nlohmann/json.hpp>

#include "primaut/catalog.hpp"
#include "primaut/embedded.hpp"
#include "primaut/parallel.hpp"
#include "primaut/search.hpp"

namespace primaut::bounds {

namespace {

mpz_class factorial(unsigned long m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

unsigned long require_square(unsigned long n) {
  const auto m = static_cast<unsigned long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (unsigned long c = (m > 1 ? m - 1 : 1); c <= m + 1; ++c)
    if (c * c == n) return c;
  throw InputError("parameter must be a perfect square");
}

bool is_square(unsigned long n, unsigned long* root = nullptr) {
  const auto m = static_cast<unsigned long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (unsigned long c = (m > 1 ? m - 1 : 1); c <= m + 1; ++c)
    if (c * c == n) {
      if (root) *root = c;
      return true;
    }
  return false;
}

const mpq_class& eps_wreath() {  // 0.3967, exact
  static const mpq_class v(3967, 10000);
  return v;
}

const mpq_class& eps_pairs() {  // 0.4, exact
  static const mpq_class v(2, 5);
  return v;
}

const mpq_class& stirling_c() {  // 0.5211, exact
  static const mpq_class v(5211, 10000);
  return v;
}

}  // namespace

mpz_class ExactPow2::to_integer() const {
  mpq_class v = factor;
  if (exponent >= 0) {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), mpz_class(1).get_mpz_t(),
                 static_cast<unsigned long>(exponent));
    v *= p;
  } else {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), mpz_class(1).get_mpz_t(),
                 static_cast<unsigned long>(-exponent));
    v /= p;
  }
  v.canonicalize();
  if (v.get_den() != 1) throw InputError("class-sum value is not integral");
  return v.get_num();
}

Interval ExactPow2::to_interval(mpfr_prec_t prec) const {
  return Interval::from_rational(factor, prec) * Interval::pow2_int(exponent, prec);
}

ExponentExpr F0_exponent(unsigned long m) {
  const unsigned long n = m * m;
  ExponentExpr e = ExponentExpr::constant(mpq_class(n, 2) + mpq_class(m, 2));
  ExponentExpr lg = ExponentExpr::log2_of(m);
  lg.scale(mpq_class(m - 1));
  e += lg;
  return e;
}

ExponentExpr F_prime_exponent(unsigned long m) {
  const unsigned long n = m * m;
  ExponentExpr e = ExponentExpr::constant(mpq_class(n) - mpq_class(11 * m, 2));
  ExponentExpr lg = ExponentExpr::log2_of(m);
  ExponentExpr sq = lg * lg;
  sq.scale(8);
  e += sq;
  lg.scale(-4);
  e += lg;
  return e;
}

ExponentExpr F_double_prime_exponent(unsigned long m) {
  const unsigned long n = m * m;
  ExponentExpr e = ExponentExpr::constant(mpq_class(n) + mpq_class(m));
  ExponentExpr lg = ExponentExpr::log2_of_rational(eps_wreath());
  lg.scale(mpq_class(2 * m));
  e += lg;
  return e;
}

BoundValue F0(unsigned long n, mpfr_prec_t prec) {
  return Interval::exp2(F0_exponent(require_square(n)).evaluate(prec));
}

BoundValue F_prime(unsigned long n, mpfr_prec_t prec) {
  return Interval::exp2(F_prime_exponent(require_square(n)).evaluate(prec));
}

BoundValue F_double_prime(unsigned long n, mpfr_prec_t prec) {
  return Interval::exp2(F_double_prime_exponent(require_square(n)).evaluate(prec));
}

std::vector<std::tuple<unsigned, unsigned, unsigned>> valid_pij(unsigned long m) {
  std::vector<std::tuple<unsigned, unsigned, unsigned>> out;
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned i = 0; p * i < 11; ++i) {
      for (unsigned j = 0; p * (i + j) < 11; ++j) {
        if (i + j == 0) continue;
        if (p * i > m || p * j > m) continue;
        out.emplace_back(p, i, j);
      }
    }
  }
  return out;
}

ExactPow2 F_pij(unsigned long n, unsigned p, unsigned i, unsigned j) {
  const unsigned long m = require_square(n);
  if (i + j == 0 || p * (i + j) >= 11)
    throw InputError("class parameters must satisfy 0 < p(i+j) < 11");
  if (p * i > m || p * j > m)
    throw InputError("class parameters exceed the factor degree");
  ExactPow2 r;
  r.exponent = static_cast<long>(n) -
               static_cast<long>((i + j) * (p - 1) * m) +
               static_cast<long>(i) * j * p * (p - 1);
  mpq_class denom(p - 1);
  denom *= factorial(m - p * i);
  denom *= factorial(m - p * j);
  denom *= pow_ui(p, i + j);
  denom *= factorial(i);
  denom *= factorial(j);
  r.factor = mpq_class(factorial(m) * factorial(m)) / denom;
  r.factor.canonicalize();
  return r;
}

BoundValue F_sum(unsigned long n, mpfr_prec_t prec) {
  const unsigned long m = require_square(n);
  if (m < 5) throw InputError("the census bound needs sqrt(n) >= 5");
  Interval total = F0(n, prec) + F_prime(n, prec) + F_double_prime(n, prec);
  for (const auto& [p, i, j] : valid_pij(m))
    total = total + F_pij(n, p, i, j).to_interval(prec);
  return total;
}

ExponentExpr G_prime_exponent(unsigned long m) {
  const mpq_class pairs = mpq_class(m * (m - 1), 2);
  ExponentExpr e =
      ExponentExpr::constant(pairs - mpq_class(11 * m, 2) + 33);
  ExponentExpr lg = ExponentExpr::log2_of(m);
  ExponentExpr sq = lg * lg;
  sq.scale(2);
  e += sq;
  e += lg;
  return e;
}

ExponentExpr G_double_prime_exponent(unsigned long m) {
  const mpq_class pairs = mpq_class(m * (m - 1), 2);
  ExponentExpr e = ExponentExpr::constant(pairs - mpq_class(m, 2) + mpq_class(3, 4));
  ExponentExpr le = ExponentExpr::log2_of_rational(eps_pairs());
  le.scale(mpq_class(m));
  e += le;
  ExponentExpr lg = ExponentExpr::log2_of(m);
  ExponentExpr sq = lg * lg;
  e += sq;
  lg.scale(2);
  e += lg;
  return e;
}

std::vector<std::pair<unsigned, unsigned>> valid_ip(unsigned long m) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned i = 1; i * p < 11; ++i)
      if (p * i <= m) out.emplace_back(p, i);
  return out;
}

ExactPow2 G_ip(unsigned long m, unsigned p, unsigned i) {
  if (i == 0 || i * p >= 11) throw InputError("class parameters must satisfy 0 < ip < 11");
  if (p * i > m) throw InputError("class parameters exceed the degree");
  const long pairs = static_cast<long>(m) * static_cast<long>(m - 1) / 2;
  ExactPow2 r;
  mpq_class denom;
  if (p > 2) {
    r.exponent = pairs - static_cast<long>(i * (p - 1) * m) +
                 static_cast<long>(i) * i * p * (p - 1) / 2 +
                 static_cast<long>(i) * (p - 1) / 2;
    denom = mpq_class(p - 1);
    denom *= factorial(m - p * i);
    denom *= pow_ui(p, i);
    denom *= factorial(i);
  } else {
    r.exponent = pairs - static_cast<long>(i * m) + static_cast<long>(i) * i + i;
    denom = factorial(m - 2 * i);
    denom *= pow_ui(2, i);
    denom *= factorial(i);
  }
  r.factor = mpq_class(factorial(m)) / denom;
  r.factor.canonicalize();
  return r;
}

BoundValue G_sum(unsigned long m, mpfr_prec_t prec) {
  if (m < 5) throw InputError("the pairs-action bound needs m >= 5");
  Interval total = Interval::exp2(G_prime_exponent(m).evaluate(prec)) +
                   Interval::exp2(G_double_prime_exponent(m).evaluate(prec));
  for (const auto& [p, i] : valid_ip(m))
    total = total + G_ip(m, p, i).to_interval(prec);
  return total;
}

BoundValue cube_branch_bound(unsigned long n, mpfr_prec_t prec) {
  const Interval nn = Interval::exact_ui(n, prec);
  const Interval n13 = Interval::nth_root(nn, 3);
  const Interval n23 = n13 * n13;
  const Interval log2n = Interval::log2(nn);
  Interval log_eps =
      Interval::log2(Interval::from_rational(stirling_c(), prec));
  Interval e = Interval::exact_ui(n, prec) - n23 +
               n13 * (log2n + Interval::exact_ui(3, prec) * log_eps) +
               Interval::exact_ui(2, prec) *
                   Interval::log2(Interval::exact_ui(3, prec));
  return Interval::exp2(e);
}

bool stirling_check(const mpq_class& c, unsigned long m_low,
                    unsigned long m_high, unsigned long* first_failure) {
  if (m_low == 0) throw InputError("m_low must be at least 1");
  mpq_class canon = c;
  canon.canonicalize();
  const mpz_class num = canon.get_num();
  const mpz_class den = canon.get_den();
  mpz_class fact = factorial(m_low - 1);
  for (unsigned long m = m_low; m <= m_high; ++m) {
    fact *= static_cast<unsigned long>(m);
    // m! <= (c m)^m  <=>  m! * den^m <= (num * m)^m
    mpz_class lhs, rhs, den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), m);
    lhs = fact * den_pow;
    mpz_class base = num * static_cast<unsigned long>(m);
    mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), m);
    if (lhs > rhs) {
      if (first_failure) *first_failure = m;
      return false;
    }
  }
  return true;
}

mpz_class gaussian_binomial(unsigned d, unsigned k, const mpz_class& q) {
  if (k > d) throw InputError("subspace dimension exceeds the space dimension");
  if (q < 2) throw InputError("field size must be at least 2");
  mpq_class value = 1;
  for (unsigned i = 0; i < k; ++i) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_mpz_t(), d - i);
    num -= 1;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), i + 1);
    den -= 1;
    value *= mpq_class(num) / mpq_class(den);
  }
  value.canonicalize();
  if (value.get_den() != 1)
    throw std::logic_error("Gaussian binomial must be integral");
  return value.get_num();
}

bool is_prime(unsigned long v) {
  if (v < 2) return false;
  for (unsigned long p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

namespace {

bool is_prime_power(unsigned long q) {
  if (q < 2) return false;
  unsigned long base = q;
  for (unsigned long p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      base = p;
      break;
    }
  while (q % base == 0) q /= base;
  return q == 1;
}

}  // namespace

std::vector<std::pair<unsigned long, unsigned>> prime_form_solutions(
    unsigned long p) {
  if (!is_prime(p)) throw InputError("parameter must be prime");
  std::vector<std::pair<unsigned long, unsigned>> out;
  const mpz_class target(static_cast<unsigned long>(p));
  for (unsigned l = 2;; ++l) {
    // smallest possible value at this l is with q = 2
    mpz_class smallest = pow_ui(2, l) - 1;
    if (smallest > target) break;
    unsigned long lo = 2, hi = p;
    while (lo <= hi) {
      const unsigned long mid = lo + (hi - lo) / 2;
      mpz_class value = 0;
      mpz_class qpow = 1;
      for (unsigned i = 0; i < l; ++i) {
        value += qpow;
        qpow *= static_cast<unsigned long>(mid);
      }
      if (value == target) {
        if (is_prime_power(mid)) out.emplace_back(mid, l);
        break;
      }
      if (value < target)
        lo = mid + 1;
      else {
        if (mid == 2) break;
        hi = mid - 1;
      }
    }
  }
  return out;
}

std::vector<unsigned long> primes_of_form_below(unsigned long bound,
                                                unsigned long min_p) {
  std::vector<unsigned long> out;
  for (unsigned long p = min_p; p < bound; ++p)
    if (is_prime(p) && !prime_form_solutions(p).empty()) out.push_back(p);
  return out;
}

// ---- registry ------------------------------------------------------------

namespace {

struct RegistryOrders {
  mpz_class aut_hs;
  mpz_class aut_g2_3;
  mpz_class aut_pomega7_3;
};

const RegistryOrders& registry_orders() {
  static RegistryOrders orders;
  static std::once_flag flag;
  std::call_once(flag, [] {
    const auto doc = nlohmann::json::parse(embedded::primaut_registry_json);
    const auto& table = doc.at("orders");
    orders.aut_hs = mpz_class(table.at("Aut(HS)").get<std::string>());
    orders.aut_g2_3 = mpz_class(table.at("Aut(G2(3))").get<std::string>());
    orders.aut_pomega7_3 =
        mpz_class(table.at("Aut(POmega7(3))").get<std::string>());
  });
  return orders;
}

mpz_class agl2_order(unsigned d) {  // |AGL_d(2)|
  mpz_class order = pow_ui(2, d);
  const mpz_class qd = pow_ui(2, d);
  for (unsigned i = 0; i < d; ++i) order *= qd - pow_ui(2, i);
  return order;
}

mpz_class sp2_order(unsigned r) {  // |Sp_{2r}(2)|
  mpz_class order = pow_ui(2, r * r);
  for (unsigned i = 1; i <= r; ++i) order *= pow_ui(4, i) - 1;
  return order;
}

mpz_class aut_sp4_order(unsigned k) {  // |Aut(Sp_4(2^k))|, k >= 2
  const mpz_class q = pow_ui(2, k);
  const mpz_class q2 = q * q;
  const mpz_class q4 = q2 * q2;
  return q4 * (q2 - 1) * (q4 - 1) * (2 * k);
}

Interval pow2_rational(const mpq_class& e, mpfr_prec_t prec) {
  return Interval::exp2(Interval::from_rational(e, prec));
}

// 2^(n/2 + 2n/7), the generic fixed-point-ratio term.
Interval fixed_ratio_term(unsigned long n, mpfr_prec_t prec) {
  return pow2_rational(mpq_class(n, 2) + mpq_class(2 * n, 7), prec);
}

}  // namespace

std::vector<std::string> registry_names() {
  return {"TW",          "HA-prime", "HA-general", "PA",
          "PA-PSL2(7)",  "PA-decomposable", "AS-G2(3)", "AS-HS",
          "AS-Sz",       "AS-Sp4",   "F-cutoff",   "G-cutoff",
          "basic3"};
}

namespace {

// Interval for x^y with x given as an interval > 1.
Interval ipow(const Interval& x, const Interval& y) { return Interval::pow(x, y); }

Interval lhs_tw(unsigned long n, mpfr_prec_t prec) {
  const Interval log2n = Interval::log2(Interval::exact_ui(n, prec));
  const Interval log2_60 = Interval::log2(Interval::exact_ui(60, prec));
  // log_60(n) = log2(n)/log2(60); compute as exp2(log2(log2 n) - log2(log2 60))
  const Interval l60 = Interval::exp2(Interval::log2(log2n) - Interval::log2(log2_60));
  return ipow(l60, Interval::log2(l60)) * F_sum(n, prec);
}

Interval lhs_ha_prime(unsigned long p, mpfr_prec_t prec) {
  const Interval pi = Interval::exact_ui(p, prec);
  const Interval sqrt_p = Interval::nth_root(pi, 2);
  const Interval half = Interval::from_rational(mpq_class(1, 2), prec);
  const Interval log2p = Interval::log2(pi);
  const Interval term1 =
      pow2_rational(mpq_class(p + 1, 2), prec) *
      Interval::exact_ui(p * (p - 1), prec);
  const Interval term2 =
      Interval::exp2((pi + sqrt_p + Interval::exact_ui(1, prec)) * half) *
      Interval::exp2(log2p * log2p) *
      Interval::from_rational(mpq_class((p - 1) * (p - 1), 4), prec);
  return term1 + term2;
}

Interval lhs_ha_general(unsigned long n, mpfr_prec_t prec) {
  const Interval log2n = Interval::log2(Interval::exact_ui(n, prec));
  const Interval t1 =
      pow2_rational(mpq_class(3 * n, 4), prec) *
      Interval::exp2((Interval::exact_ui(1, prec) + log2n) * log2n);
  const Interval t2 =
      Interval::exp2(log2n * log2n * Interval::from_rational(mpq_class(1, 2), prec)) *
      F_sum(n, prec);
  return t1 + t2;
}

Interval lhs_pa_decomposable(unsigned long n, mpfr_prec_t prec) {
  const Interval log2n = Interval::log2(Interval::exact_ui(n, prec));
  return Interval::exp2(log2n * log2n *
                        Interval::from_rational(mpq_class(1, 2), prec)) *
         F_sum(n, prec);
}

// The per-overgroup census bound for a perfect power n: the pair bound
// F(n) at perfect squares (with B3 <= F certified so higher even powers are
// covered), the three-factor bound otherwise.
Interval census_bound_for_power(unsigned long n, mpfr_prec_t prec,
                                std::string* branch, bool* b3_leq_f) {
  unsigned long root = 0;
  if (is_square(n, &root) && root >= 36) {
    if (branch) *branch = "F";
    const Interval f = F_sum(n, prec);
    if (b3_leq_f) {
      const Interval b3 = cube_branch_bound(n, prec);
      *b3_leq_f = mpfr_cmp(b3.upper(), f.lower()) <= 0;
    }
    return f;
  }
  if (branch) *branch = "B3";
  if (b3_leq_f) *b3_leq_f = true;
  return cube_branch_bound(n, prec);
}

bool is_perfect_power_base5(unsigned long n, unsigned* exponent_out = nullptr) {
  for (unsigned long m = 5; m * m <= n; ++m) {
    unsigned long v = m * m;
    unsigned l = 2;
    while (v < n && v <= n / m) {
      v *= m;
      ++l;
    }
    if (v == n) {
      if (exponent_out) *exponent_out = l;
      return true;
    }
  }
  return false;
}

Interval lhs_pa(unsigned long n, mpfr_prec_t prec, std::string* branch,
                bool* dispatch_ok) {
  const Interval census = census_bound_for_power(n, prec, branch, dispatch_ok);
  const Interval log2n = Interval::log2(Interval::exact_ui(n, prec));
  const Interval log2_5 = Interval::log2(Interval::exact_ui(5, prec));
  const Interval l = Interval::exp2(Interval::log2(log2n) - Interval::log2(log2_5));
  return ipow(l, Interval::log2(l)) * census;
}

Interval lhs_pa_psl27(unsigned ell, mpfr_prec_t prec, std::string* branch,
                      bool* dispatch_ok) {
  unsigned long n = 1;
  for (unsigned i = 0; i < ell; ++i) n *= 8;
  const mpz_class structure = agl2_order(3 * ell) * pow_ui(32, ell);
  const Interval t1 = pow2_rational(mpq_class(3) * mpq_class(n) / 4, prec) *
                      Interval::exact_int(structure, prec);
  const Interval census = census_bound_for_power(n, prec, branch, dispatch_ok);
  const Interval elli = Interval::exact_ui(ell, prec);
  const Interval t2 = ipow(elli, Interval::log2(elli)) * census;
  return t1 + t2;
}

double certified_margin(const Interval& lhs, long rhs_n, bool holds) {
  mpfr_t l2, diff;
  mpfr_init2(l2, lhs.precision());
  mpfr_init2(diff, 64);
  double result;
  if (holds) {
    mpfr_log2(l2, lhs.upper(), MPFR_RNDU);
    mpfr_si_sub(diff, rhs_n, l2, MPFR_RNDD);
    result = mpfr_get_d(diff, MPFR_RNDD);
  } else {
    mpfr_log2(l2, lhs.lower(), MPFR_RNDD);
    mpfr_si_sub(diff, rhs_n, l2, MPFR_RNDU);
    result = mpfr_get_d(diff, MPFR_RNDU);
  }
  mpfr_clear(l2);
  mpfr_clear(diff);
  return result;
}

InequalityVerdict strict_upper_verdict(
    const std::string& name, long parameter,
    const std::function<Interval(mpfr_prec_t, std::string*, bool*)>& lhs_fn,
    long rhs_n) {
  InequalityVerdict verdict;
  verdict.name = name;
  verdict.parameter = parameter;
  for (mpfr_prec_t prec : {mpfr_prec_t(128), mpfr_prec_t(256), mpfr_prec_t(1024)}) {
    std::string branch;
    bool dispatch_ok = true;
    const Interval lhs = lhs_fn(prec, &branch, &dispatch_ok);
    const Interval rhs = Interval::pow2_int(rhs_n, prec);
    verdict.precision_bits = prec;
    verdict.branch = branch;
    if (!dispatch_ok) continue;  // branch comparison undecided; escalate
    if (!lhs.is_finite()) continue;
    if (lhs.certainly_less(rhs)) {
      verdict.outcome = InequalityVerdict::Outcome::holds;
      verdict.margin_log2 = certified_margin(lhs, rhs_n, true);
      return verdict;
    }
    if (mpfr_cmp(lhs.lower(), rhs.upper()) >= 0) {
      verdict.outcome = InequalityVerdict::Outcome::fails;
      verdict.margin_log2 = certified_margin(lhs, rhs_n, false);
      return verdict;
    }
  }
  verdict.outcome = InequalityVerdict::Outcome::undecided;
  return verdict;
}

// certifies lhs <= rhs at the exponent level; exact where symbolic
bool certified_exponent_leq(const ExponentExpr& lhs, const ExponentExpr& rhs) {
  ExponentExpr diff = rhs - lhs;
  if (diff.is_zero()) return true;
  return diff.certified_sign() >= 0;
}

InequalityVerdict check_f_cutoff(long m_param) {
  InequalityVerdict verdict;
  verdict.name = "F-cutoff";
  verdict.parameter = m_param;
  if (m_param < 36) throw InputError("F-cutoff is stated for m >= 36");
  const auto m = static_cast<unsigned long>(m_param);
  const unsigned long n = m * m;

  ExponentExpr logm = ExponentExpr::log2_of(m);
  ExponentExpr cexpr = ExponentExpr::constant(mpq_class(m) + 3);
  {
    ExponentExpr t = logm;
    t.scale(-4);
    cexpr += t;
  }
  const mpz_class c = cexpr.certified_floor();
  verdict.precision_bits = 128;
  verdict.branch = "c=" + c.get_str();

  bool ok = c >= 0 && c <= mpz_class(m) - 11;
  // rare-class side: 2(m-c)log2(m) <= 8 log2(m)^2 - 4 log2(m)
  {
    ExponentExpr lhs = logm;
    lhs.scale(mpq_class(2) * (mpq_class(m) - mpq_class(c)));
    ExponentExpr rhs = logm * logm;
    rhs.scale(8);
    ExponentExpr t = logm;
    t.scale(-4);
    rhs += t;
    ok = ok && certified_exponent_leq(lhs, rhs);
  }
  // low-fix side: n/2 + (c-1)m/2 + 2m(log2 m + log2 eps) <= F'' exponent
  {
    ExponentExpr lhs = ExponentExpr::constant(
        mpq_class(n, 2) + (mpq_class(c) - 1) * mpq_class(m, 2));
    ExponentExpr t = logm;
    t.scale(mpq_class(2 * m));
    lhs += t;
    ExponentExpr te = ExponentExpr::log2_of_rational(eps_wreath());
    te.scale(mpq_class(2 * m));
    lhs += te;
    ok = ok && certified_exponent_leq(lhs, F_double_prime_exponent(m));
  }
  // the Stirling constant used on this side
  ok = ok && stirling_check(eps_wreath(), m, m);
  verdict.outcome = ok ? InequalityVerdict::Outcome::holds
                       : InequalityVerdict::Outcome::fails;
  verdict.margin_log2 = 0.0;
  return verdict;
}

InequalityVerdict check_g_cutoff(long m_param) {
  InequalityVerdict verdict;
  verdict.name = "G-cutoff";
  verdict.parameter = m_param;
  if (m_param < 32) throw InputError("G-cutoff is stated for m >= 32");
  const auto m = static_cast<unsigned long>(m_param);

  ExponentExpr logm = ExponentExpr::log2_of(m);
  ExponentExpr cexpr = ExponentExpr::constant(mpq_class(m));
  {
    ExponentExpr t = logm;
    t.scale(-2);
    cexpr += t;
  }
  const mpz_class c = cexpr.certified_floor();
  verdict.precision_bits = 128;
  verdict.branch = "c=" + c.get_str();

  const mpq_class pairs(m * (m - 1), 2);
  bool ok = c >= 1 && c <= mpz_class(m);
  // (m-12)C2 + 6 <= (m-11)C2, exact rational statement used for involutions
  ok = ok && mpq_class((m - 12) * (m - 13), 2) + 6 <= mpq_class((m - 11) * (m - 12), 2);
  // moved-class side: pairs/2 + C(m-11,2)/2 + (m-c)log2(m) <= G' exponent
  {
    ExponentExpr lhs = ExponentExpr::constant(
        pairs / 2 + mpq_class((m - 11) * (m - 12), 2) / 2);
    ExponentExpr t = logm;
    t.scale(mpq_class(m) - mpq_class(c));
    lhs += t;
    ok = ok && certified_exponent_leq(lhs, G_prime_exponent(m));
  }
  // low-fix side: pairs/2 + (C(c-1,2) + (m-c+1)/2)/2 + m log2(m) + m log2(eps)
  {
    const mpq_class c_q(c);
    ExponentExpr lhs = ExponentExpr::constant(
        pairs / 2 +
        ((c_q - 1) * (c_q - 2) / 2 + (mpq_class(m) - c_q + 1) / 2) / 2);
    ExponentExpr t = logm;
    t.scale(mpq_class(m));
    lhs += t;
    ExponentExpr te = ExponentExpr::log2_of_rational(eps_pairs());
    te.scale(mpq_class(m));
    lhs += te;
    ok = ok && certified_exponent_leq(lhs, G_double_prime_exponent(m));
  }
  ok = ok && stirling_check(eps_pairs(), m, m);
  verdict.outcome = ok ? InequalityVerdict::Outcome::holds
                       : InequalityVerdict::Outcome::fails;
  verdict.margin_log2 = 0.0;
  return verdict;
}

InequalityVerdict check_basic3(long degree) {
  InequalityVerdict verdict;
  verdict.name = "basic3";
  verdict.parameter = degree;
  verdict.precision_bits = 0;
  bool any = false;
  bool ok = true;
  long min_slack = std::numeric_limits<long>::max();
  for (const auto& entry : catalog::load_catalog()) {
    if (entry.degree != static_cast<unsigned>(degree)) continue;
    if (entry.expected_order > 200000) continue;
    const auto group = entry.group();
    any = true;
    const auto table = group.prime_order_classes();
    const auto report = fixed_family(group, /*bitmap_limit=*/25);
    mpz_class exact = class_sum_exact(table);
    if (report.total_fixed > exact) ok = false;
    const long slack = envelope_slack_halves(table, group.degree());
    min_slack = std::min(min_slack, slack);
    if (slack < 0) ok = false;
  }
  if (!any)
    throw InputError("no catalog entry of that degree is enumerable");
  verdict.outcome = ok ? InequalityVerdict::Outcome::holds
                       : InequalityVerdict::Outcome::fails;
  verdict.margin_log2 = static_cast<double>(min_slack) / 2.0;
  return verdict;
}

}  // namespace

InequalityVerdict check_inequality(const std::string& name, long parameter) {
  if (parameter <= 0) throw InputError("registry parameters are positive");
  const auto param = static_cast<unsigned long>(parameter);
  if (name == "TW") {
    if (require_square(param) < 5)
      throw InputError("TW needs a perfect square with sqrt(n) >= 5");
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) { return lhs_tw(param, prec); },
        parameter);
  }
  if (name == "HA-prime") {
    if (!is_prime(param)) throw InputError("HA-prime takes a prime parameter");
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          return lhs_ha_prime(param, prec);
        },
        parameter);
  }
  if (name == "HA-general") {
    require_square(param);
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          return lhs_ha_general(param, prec);
        },
        parameter);
  }
  if (name == "PA-decomposable") {
    require_square(param);
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          return lhs_pa_decomposable(param, prec);
        },
        parameter);
  }
  if (name == "PA") {
    if (!is_perfect_power_base5(param))
      throw InputError("PA takes a perfect power m^l with m >= 5, l >= 2");
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string* branch, bool* ok) {
          return lhs_pa(param, prec, branch, ok);
        },
        parameter);
  }
  if (name == "PA-PSL2(7)") {
    if (param < 3) throw InputError("PA-PSL2(7) takes l >= 3");
    unsigned long n = 1;
    for (unsigned long i = 0; i < param; ++i) n *= 8;
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string* branch, bool* ok) {
          return lhs_pa_psl27(static_cast<unsigned>(param), prec, branch, ok);
        },
        static_cast<long>(n));
  }
  if (name == "AS-G2(3)") {
    if (param != 3159) throw InputError("AS-G2(3) is stated at n = 3159");
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          const auto& orders = registry_orders();
          const mpz_class total = orders.aut_g2_3 + 2 * orders.aut_pomega7_3;
          return Interval::exact_int(total, prec) * fixed_ratio_term(3159, prec);
        },
        parameter);
  }
  if (name == "AS-HS") {
    if (param != 15400) throw InputError("AS-HS is stated at n = 15400");
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          const auto& orders = registry_orders();
          return fixed_ratio_term(15400, prec) *
                     Interval::exact_int(orders.aut_hs, prec) +
                 Interval::exact_ui(2, prec) * G_sum(176, prec);
        },
        parameter);
  }
  if (name == "AS-Sz") {
    if (param < 3 || param % 2 == 0)
      throw InputError("AS-Sz takes an odd exponent k >= 3");
    const unsigned long q = 1ul << param;
    const unsigned long n = q * q * (q * q + 1) / 2;
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          return G_sum(q * q + 1, prec) +
                 fixed_ratio_term(n, prec) *
                     Interval::exact_int(sp2_order(2 * static_cast<unsigned>(param)), prec);
        },
        static_cast<long>(n));
  }
  if (name == "AS-Sp4") {
    if (param < 2) throw InputError("AS-Sp4 takes an exponent k >= 2");
    const unsigned long q = 1ul << param;
    const unsigned long m = q * q * (q * q - 1) / 2;
    const unsigned long n = m * m;
    return strict_upper_verdict(
        name, parameter,
        [&](mpfr_prec_t prec, std::string*, bool*) {
          return fixed_ratio_term(n, prec) *
                     Interval::exact_int(aut_sp4_order(static_cast<unsigned>(param)), prec) +
                 F_sum(n, prec);
        },
        static_cast<long>(n));
  }
  if (name == "F-cutoff") return check_f_cutoff(parameter);
  if (name == "G-cutoff") return check_g_cutoff(parameter);
  if (name == "basic3") return check_basic3(parameter);
  throw InputError("unknown registry name: " + name);
}

std::vector<long> registry_parameters(const std::string& name, long lo, long hi) {
  std::vector<long> params;
  auto push_range = [&](long first, auto pred) {
    for (long v = std::max(lo, first); v <= hi; ++v)
      if (pred(v)) params.push_back(v);
  };
  if (name == "TW") {
    push_range(3600, [](long v) { return is_square(static_cast<unsigned long>(v)); });
  } else if (name == "HA-prime") {
    push_range(139, [](long v) { return is_prime(static_cast<unsigned long>(v)); });
  } else if (name == "HA-general" || name == "PA-decomposable") {
    push_range(10533, [](long v) { return is_square(static_cast<unsigned long>(v)); });
  } else if (name == "PA") {
    push_range(1290, [](long v) {
      return is_perfect_power_base5(static_cast<unsigned long>(v));
    });
  } else if (name == "PA-PSL2(7)") {
    push_range(4, [](long) { return true; });
  } else if (name == "AS-Sz") {
    push_range(3, [](long v) { return v % 2 == 1; });
  } else if (name == "AS-Sp4") {
    push_range(2, [](long) { return true; });
  } else if (name == "AS-G2(3)") {
    if (lo <= 3159 && 3159 <= hi) params.push_back(3159);
  } else if (name == "AS-HS") {
    if (lo <= 15400 && 15400 <= hi) params.push_back(15400);
  } else if (name == "F-cutoff") {
    push_range(36, [](long) { return true; });
  } else if (name == "G-cutoff") {
    push_range(32, [](long) { return true; });
  } else if (name == "basic3") {
    std::set<long> degrees;
    for (const auto& entry : catalog::load_catalog())
      if (entry.expected_order <= 200000) degrees.insert(entry.degree);
    for (long d : degrees)
      if (d >= lo && d <= hi) params.push_back(d);
  } else {
    throw InputError("unknown registry name: " + name);
  }
  return params;
}

std::vector<InequalityVerdict> scan_threshold(const std::string& name, long lo,
                                              long hi, unsigned jobs) {
  const auto params = registry_parameters(name, lo, hi);
  std::vector<InequalityVerdict> verdicts(params.size());
  parallel_chunks(params.size(), jobs, params.size(),
                  [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t i = begin; i < end; ++i)
                      verdicts[i] = check_inequality(name, params[i]);
                  });
  return verdicts;
}

mpz_class class_sum_exact(const PrimeOrderClassTable& table) {
  mpz_class total = 0;
  for (const auto& entry : table.entries) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, entry.orbit_count);
    total += entry.subgroup_count * pow2;
  }
  return total;
}

long envelope_slack_halves(const PrimeOrderClassTable& table, unsigned degree) {
  long min_slack = std::numeric_limits<long>::max();
  for (const auto& entry : table.entries) {
    const long slack = static_cast<long>(degree) +
                       static_cast<long>(entry.fix_count) -
                       2l * static_cast<long>(entry.orbit_count);
    min_slack = std::min(min_slack, slack);
  }
  return table.entries.empty() ? 0 : min_slack;
}

}  // namespace primaut::bounds
