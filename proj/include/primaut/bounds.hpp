#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "primaut/exponent.hpp"
#include "primaut/group.hpp"
#include "primaut/interval.hpp"

namespace primaut::bounds {

/// Certified bracket of a bound value.
using BoundValue = Interval;

/// An exact quantity of the shape factor * 2^exponent with rational factor;
/// the class-sum formulas all evaluate to this form.
struct ExactPow2 {
  mpq_class factor;
  long exponent = 0;

  /// Exact integer value; throws if the value is not integral.
  mpz_class to_integer() const;
  Interval to_interval(mpfr_prec_t prec) const;
};

// ---- census bounds for Sym(m) wr Sym(2) in product action on n = m^2 ----

ExponentExpr F0_exponent(unsigned long m);
ExponentExpr F_prime_exponent(unsigned long m);
ExponentExpr F_double_prime_exponent(unsigned long m);

BoundValue F0(unsigned long n, mpfr_prec_t prec = 128);
BoundValue F_prime(unsigned long n, mpfr_prec_t prec = 128);
BoundValue F_double_prime(unsigned long n, mpfr_prec_t prec = 128);

/// Valid class parameters: p prime, 0 < p(i+j) < 11, pi <= m and pj <= m.
std::vector<std::tuple<unsigned, unsigned, unsigned>> valid_pij(unsigned long m);

/// Exact class sum over base-group subgroups of type (p^i, p^j).
ExactPow2 F_pij(unsigned long n, unsigned p, unsigned i, unsigned j);

/// Full bound: F0 + F' + F'' + sum of the class terms.
BoundValue F_sum(unsigned long n, mpfr_prec_t prec = 128);

// ---- census bounds for Sym(m) acting on 2-subsets ----

ExponentExpr G_prime_exponent(unsigned long m);
ExponentExpr G_double_prime_exponent(unsigned long m);

/// Valid parameters: p prime, i >= 1, ip < 11, pi <= m.
std::vector<std::pair<unsigned, unsigned>> valid_ip(unsigned long m);

ExactPow2 G_ip(unsigned long m, unsigned p, unsigned i);
BoundValue G_sum(unsigned long m, mpfr_prec_t prec = 128);

/// Census bound for wreath powers with at least three factors:
/// 2^(n - n^(2/3) + n^(1/3)(log2 n + 3 log2(0.5211)) + 2 log2 3).
BoundValue cube_branch_bound(unsigned long n, mpfr_prec_t prec = 128);

// ---- exact combinatorial checks ----

/// Verifies m! <= (c*m)^m for every m in [m_low, m_high], by exact
/// big-integer comparison. Reports the first failing m when there is one.
bool stirling_check(const mpq_class& c, unsigned long m_low,
                    unsigned long m_high,
                    unsigned long* first_failure = nullptr);

/// Number of k-dimensional subspaces of a d-dimensional space over a field
/// with q elements.
mpz_class gaussian_binomial(unsigned d, unsigned k, const mpz_class& q);

/// All (q, l) with q a prime power, l >= 2 and (q^l - 1)/(q - 1) = p,
/// ordered by l.
std::vector<std::pair<unsigned long, unsigned>> prime_form_solutions(
    unsigned long p);

/// Primes p in [min_p, bound) of the form (q^l - 1)/(q - 1). The default
/// min_p = 5 matches the smallest degree carrying a primitive group other
/// than Alt/Sym; p = 3 = (2^2-1)/(2-1) is of the form but below that range.
std::vector<unsigned long> primes_of_form_below(unsigned long bound,
                                                unsigned long min_p = 5);

bool is_prime(unsigned long v);

// ---- the inequality registry ----

struct InequalityVerdict {
  std::string name;
  long parameter = 0;
  enum class Outcome { holds, fails, undecided } outcome = Outcome::undecided;
  double margin_log2 = 0.0;  // certified log2 gap (negative when it fails)
  mpfr_prec_t precision_bits = 0;
  std::string branch;  // bound variant used, when a dispatch applies
};

std::vector<std::string> registry_names();

/// Evaluates one registry inequality at the given parameter with precision
/// escalation 128 -> 256 -> 1024 bits. Never silently truncates: an
/// undecided comparison is reported as such.
InequalityVerdict check_inequality(const std::string& name, long parameter);

/// Parameters of the entry's natural family inside [lo, hi] (primes,
/// perfect squares, perfect powers, ... depending on the entry).
std::vector<long> registry_parameters(const std::string& name, long lo, long hi);

std::vector<InequalityVerdict> scan_threshold(const std::string& name, long lo,
                                              long hi, unsigned jobs = 1);

// ---- generic class-sum envelope (the counting-lemma template) ----

/// Exact sum of 2^orb over all prime-order classes.
mpz_class class_sum_exact(const PrimeOrderClassTable& table);

/// Per-class check 2*orb <= degree + fix, i.e. the 2^((n+fix)/2) envelope;
/// returns the minimal slack in halves of a bit (negative = violated).
long envelope_slack_halves(const PrimeOrderClassTable& table, unsigned degree);

}  // namespace primaut::bounds
