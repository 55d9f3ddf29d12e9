#pragma once

// Absolute lower bounds for the w-index n from the gap lemmas, and the
// hypergeometric (Rickert-type) upper bound with its explicit constants.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/interval.hpp"
#include "dquad/sequences.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

inline constexpr long kDefaultBoundDigits = 60;

enum class PowerLemmaPart { one, two };

/// 2^l k0^{l/4} s_nu^l < s_{l nu} (part one) or 2^l k0^{l/2} s_nu^l < s_{l nu}
/// (part two), compared exactly after raising both sides to the 4th power.
/// Throws std::invalid_argument outside k >= 3, l >= 2 (l >= 3 for part two).
bool lemma_n1_check(const ProblemInstance& instance, std::uint64_t nu, std::uint64_t l, PowerLemmaPart part);

/// (n - 1) log(4c - 3); its lower endpoint is a certified lower bound for log w_n.
Interval lower_bound_log_x(std::uint64_t n, const BigInt& c, long digits = kDefaultBoundDigits);

struct GapVerdict {
  std::uint64_t nu;
  std::uint64_t n;
  std::int64_t k;
  BigInt v_low;                 // v_{(2n-1) nu}
  BigInt w_cofactor;            // w_n / sqrt(c - k)
  std::optional<BigInt> w_mid;  // w_n when c - k is a square
  BigInt v_high;                // v_{2 n nu}
  bool below = false;           // v_low < w_n
  bool above = false;           // w_n < v_high
  bool sandwiched = false;
  bool in_hypothesis = false;
};

/// Exact check of v_{(2n-1)nu} < w_n < v_{2n nu}; out-of-hypothesis triples
/// are evaluated and flagged.
GapVerdict gap_sandwich(const ProblemInstance& instance, std::uint64_t nu, std::uint64_t n);

/// Whether (nu, n, k) satisfies the hypotheses of both gap lemmas.
bool gap_hypotheses_hold(std::uint64_t nu, std::uint64_t n, std::int64_t k);

struct GFComparison {
  Interval g;  // (2 n nu - n - 1/2) / (2 n nu - nu - 1)
  Interval f;  // log(4k + 2) / log(4k + 1)
  bool holds = false;  // certainly g > f
};

GFComparison g_f_comparison(std::uint64_t nu, std::uint64_t n, std::int64_t k, long digits = kDefaultBoundDigits);

/// 8 for nu = 7, k >= 12; 9 for (nu = 8, k >= 15) or (nu >= 9, k >= 7).
std::optional<std::uint64_t> min_n_lower(std::uint64_t nu, std::int64_t k);

struct RickertBound {
  std::int64_t k;
  BigInt big_n;
  Interval lambda;
  Interval c_inv;  // 1.425e28 (k + 1) N
};

/// Throws std::invalid_argument naming the violated precondition.
RickertBound rickert_bound(std::int64_t k, const BigInt& big_n, long digits = kDefaultBoundDigits);

struct ThetaQuality {
  Interval err1;   // |theta1 - k0 s x / z|
  Interval err2;   // |theta2 - t y / ((k+1) z)|
  Interval bound;  // 1 / (2 k0 x^2)
  bool holds1 = false;
  bool holds2 = false;
  bool vacuous = false;  // x = 0
};

/// With y absent, y = sqrt(k0 (k+1) x^2 + 1) is used as a real number.
ThetaQuality theta_approx_quality(const TripleContext& ctx, const BigInt& x, const BigInt& z,
                                  const std::optional<BigInt>& y = std::nullopt, long digits = kDefaultBoundDigits);

class BoundNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct HypergeometricBound {
  Interval bound;         // 1 + RHS: every solution has n < bound
  std::uint64_t max_n;    // largest integer strictly below the upper endpoint
};

/// Throws BoundNotApplicable unless 0.1995 k^-3 c > 1 is certain.
HypergeometricBound n_upper_hypergeometric(std::int64_t k, const BigInt& c, long digits = kDefaultBoundDigits);

/// Smallest k_start in [k_from, k_to] such that max_n(k) <= target for every
/// k in [k_start, k_to], with c = c_nu(k).
std::optional<std::int64_t> hypergeometric_threshold(std::uint64_t nu, std::uint64_t target, std::int64_t k_from,
                                                     std::int64_t k_to);

struct ResidualCase {
  std::string description;
  std::uint64_t nu_min;
  std::optional<std::uint64_t> nu_max;
  std::int64_t k_min;
  std::optional<std::int64_t> k_max;

  bool contains(std::uint64_t nu, std::int64_t k) const;
};

/// Cases left open after comparing the gap and hypergeometric bounds.
std::vector<ResidualCase> residual_cases();

/// Hypotheses under which the gap lower bound exceeds the hypergeometric
/// upper bound: (nu = 7, k >= 662), (nu = 8, k >= 15), (nu >= 9, k >= 7).
bool contradiction_hypotheses_hold(std::uint64_t nu, std::int64_t k);

}  // namespace dquad
