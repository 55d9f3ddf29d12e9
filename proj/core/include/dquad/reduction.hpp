#pragma once

// Baker-Davenport reduction of 0 < n kappa - m + mu < A B^{-n} with
// certified continued fractions, iterated until the bound on n stops shrinking.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/interval.hpp"
#include "dquad/linform.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

struct Convergent {
  BigInt p;
  BigInt q;
};

struct CFExpansion {
  std::vector<BigInt> quotients;
  std::vector<Convergent> convergents;
  bool complete = false;   // the input was rational and fully expanded
  bool exhausted = false;  // precision ran out before max_terms
  std::size_t index_reached = 0;
};

/// Certified prefix of the continued fraction of x: each quotient is the
/// common floor over the whole enclosure.
CFExpansion cf_expand(const Interval& x, std::size_t max_terms);
/// Exact expansion of num / den (den > 0).
CFExpansion cf_expand(const BigInt& num, const BigInt& den, std::size_t max_terms = 10000);

struct ReductionInput {
  Interval kappa;  // log a1 / log a2
  Interval mu;     // log a3 / log a2
  Interval a;      // 1.0001 / log a2
  Interval bexp;   // a1^2
  BigInt n_current;
  long precision_digits;
};

/// Throws InsufficientPrecision when digits < 2 * (decimal digits of N) + 30.
ReductionInput reduction_input(const ProblemInstance& instance, const BigInt& c, const BigInt& n_current,
                               long precision_digits);

enum class ReductionStatus { contracted, non_contracting };

struct ReductionOutcome {
  BigInt q;
  Interval epsilon;
  std::optional<BigInt> new_bound;
  unsigned step_count = 0;  // convergents tried
  ReductionStatus status = ReductionStatus::non_contracting;
};

class ReductionInconclusive : public std::runtime_error {
 public:
  ReductionInconclusive(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
  std::size_t index_reached() const { return index_; }

 private:
  std::size_t index_;
};

inline constexpr unsigned kReductionRetryCap = 10;

/// One pass with the least convergent q > 6 N and up to kReductionRetryCap
/// successors. Throws ReductionInconclusive when none certifies epsilon > 0.
ReductionOutcome bd_reduce(const ReductionInput& input);

struct SmallSolution {
  std::uint64_t m;
  std::optional<std::uint64_t> n;  // index in the w-sequence, when it lies there
  BigInt x;
  BigInt d;  // k0 x^2 + 1
};

struct ReductionCertificate {
  ProblemInstance instance;
  BigInt c;
  bool c_minus_k_square = false;
  BigInt initial_bound;
  std::vector<ReductionOutcome> passes;
  BigInt final_bound;
  BigInt m_max;
  long precision_digits = 0;
  bool conclusive = false;
  std::vector<SmallSolution> solutions;
  std::vector<std::string> notes;
  Interval kappa;
  Interval mu;
};

struct ReductionOptions {
  long precision_digits = 0;  // 0: choose from the initial bound
  unsigned max_passes = 8;
  unsigned precision_retries = 3;
  LinformConstant constant = LinformConstant::printed;
};

/// Linear-form bound, reduction passes, then an exact scan of v_m = w_n for
/// n <= max(2, reduced bound) and m <= kappa (n + 1) + 1.
ReductionCertificate reduce_case_to_exhaustion(const ProblemInstance& instance, const BigInt& c,
                                               const ReductionOptions& options = {});

/// Exact scan: every m <= m_max with c (k0 v_m^2 + 1) - k a square, tagged
/// with the matching n when c - k is a square and v_m = w_n, n <= n_max.
std::vector<SmallSolution> exact_small_scan(const ProblemInstance& instance, const BigInt& c, std::uint64_t n_max,
                                            std::uint64_t m_max);

}  // namespace dquad
