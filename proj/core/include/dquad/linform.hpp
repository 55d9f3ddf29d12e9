#pragma once

// The linear form n log a1 - m log a2 + log a3 attached to v_m = w_n, its
// exponential upper bound, Matveev's lower bound and the resulting bound on n.

#include <array>
#include <cstdint>
#include <optional>

#include "dquad/bigint.hpp"
#include "dquad/interval.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

inline constexpr long kDefaultLinformDigits = 60;

struct LinearFormInstance {
  ProblemInstance instance;
  BigInt c;
  long digits;
  Interval alpha1;  // 2c - 1 + 2 sqrt(c^2 - c)
  Interval alpha2;  // 2k + 1 + 2 sqrt(k^2 + k)
  Interval alpha3;  // sqrt((c - k)(k + 1) / c)
  Interval log_alpha1;
  Interval log_alpha2;
  Interval log_alpha3;
  Interval h1;  // log(alpha1) / 2
  Interval h2;  // log(alpha2) / 2
  Interval h3;  // log((c - k)(k + 1)) / 2
  unsigned degree = 4;
  bool alpha3_above_one = false;  // certified alpha3 > 1
  bool c_minus_k_square = false;

  /// log a1 / log a2.
  Interval kappa() const { return log_alpha1 / log_alpha2; }
};

/// Requires k >= 1 and c > k + 1; throws std::invalid_argument otherwise.
LinearFormInstance linear_form_instance(const ProblemInstance& instance, const BigInt& c,
                                        long digits = kDefaultLinformDigits);

/// n log a1 - m log a2 + log a3.
Interval lambda_value(const LinearFormInstance& lf, const BigInt& n, const BigInt& m);

struct PQGap {
  Interval p;             // (k + 1)^{-1/2} a2^m
  Interval q;             // sqrt((c - k) / c) a1^n
  Interval relative_gap;  // (Q - P) / Q
  Interval bound;         // (c - k) / c * Q^{-2}
  Interval floor_bound;   // 1 / (256 (c^2 - c)^2)
  bool q_exceeds_p = false;
  bool gap_below_bound = false;
  bool genuine = false;        // v_m = w_n exactly (only possible when c - k is a square)
  bool in_hypothesis = false;  // n, m >= 2, k >= 3, c >= 4k + 1
};

/// Plug-in evaluation of P and Q. The gap inequality is only a theorem for
/// genuine solutions; for other (n, m) it is reported, not asserted.
PQGap pq_gap(const ProblemInstance& instance, const BigInt& c, std::uint64_t n, std::uint64_t m,
             long digits = kDefaultLinformDigits);

struct LambdaUpper {
  Interval tight;  // 1.00001 a1^{-2n}
  Interval loose;  // 1.0001 a1^{-2n}; used downstream
};

LambdaUpper lambda_upper(const LinearFormInstance& lf, const BigInt& n);

struct MatveevConstants {
  Interval c_l;       // C(3)
  Interval c0;
  Interval w0;        // log(1.5 e B D log(e D)) for the B supplied
  Interval omega;     // A1 A2 A3
  Interval b;
  Interval k_factor;  // 38.92 log a1 / log a2
  std::array<Interval, 3> a;
};

/// C(l) for l terms, as an exact formula.
Interval matveev_c(unsigned l, mpfr_prec_t bits);
/// C0 for l terms and degree D.
Interval matveev_c0(unsigned l, unsigned degree, mpfr_prec_t bits);
/// 1.5 e D log(e D); printed rounded up as 38.92 for D = 4.
Interval matveev_w0_factor(unsigned degree, mpfr_prec_t bits);

/// Constants with B taken from the coefficients (n, -m, 1).
MatveevConstants matveev_constants(const LinearFormInstance& lf, const BigInt& n, const BigInt& m);
/// Constants with B replaced by (log a1 / log a2)(n + 1) and 1.5eD log(eD)
/// rounded up to 38.92.
MatveevConstants matveev_constants_substituted(const LinearFormInstance& lf, const BigInt& n);

/// Lower bound -C(3) C0 W0 D^2 Omega for log Lambda.
Interval matveev_lower(const MatveevConstants& constants, unsigned degree = 4);

enum class LinformConstant {
  printed,  // 1.23185e12, K = 38.92 kappa
  derived,  // 64 C(3) C0 from the formulas plus the log(1.0001) slack
};

struct LinformBound {
  BigInt n_bound;     // every solution with n >= 2 has n <= n_bound
  Interval k_factor;  // K
  Interval rhs;       // constant * log(4k + 2) * log((c - k)(k + 1))
  LinformConstant variant;
};

/// Whether n / log(K (n + 1)) < rhs (+ slack) cannot be ruled out at n.
bool linform_inequality_possible(const LinearFormInstance& lf, const BigInt& n,
                                 LinformConstant variant = LinformConstant::printed);

/// Largest n for which the inequality is not certified false, found by
/// doubling and bisection (the left side is increasing for n >= 2).
LinformBound n_bound_from_linform(const LinearFormInstance& lf, LinformConstant variant = LinformConstant::printed);

/// Largest m with m < kappa (n + 1) not excluded.
BigInt m_upper(const LinearFormInstance& lf, const BigInt& n);

struct IndependenceCheck {
  bool relation_free = false;  // no relation with |e_i| <= bound, certified
  std::optional<std::array<long, 3>> suspected;  // first undecided or exact relation
  long exponent_bound = 20;
};

/// Searches e1 log a1 + e2 log a2 + e3 log a3 = 0 over |e_i| <= bound.
IndependenceCheck multiplicative_independence(const LinearFormInstance& lf, long exponent_bound = 20);

}  // namespace dquad
