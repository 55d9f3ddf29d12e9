#pragma once

// Second-order linear recurrences s_nu (= v_m), t_nu, w_n, their closed
// forms, and the residue/congruence facts that force x0 = 0 and nu | m.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/interval.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

/// a_{n+2} = coeff * a_{n+1} - a_n.
struct Recurrence {
  BigInt a0;
  BigInt a1;
  BigInt coeff;

  BigInt term(std::uint64_t n) const;
  std::vector<BigInt> terms(std::size_t count) const;
};

Recurrence s_recurrence(const ProblemInstance& instance);  // s_0 = 0, s_1 = 2 k1, coeff 4k + 2
Recurrence t_recurrence(const ProblemInstance& instance);  // t_0 = 1, t_1 = 2k + 1

BigInt s_term(const ProblemInstance& instance, std::uint64_t nu);
BigInt t_term(const ProblemInstance& instance, std::uint64_t nu);
/// The x-sequence of the first Pell equation; identical to s.
BigInt v_term(const ProblemInstance& instance, std::uint64_t m);

/// s_nu from the tabulated polynomial in (2k + 1), nu <= 9.
BigInt s_table_value(const ProblemInstance& instance, unsigned nu);
bool s_table_check(const ProblemInstance& instance, unsigned up_to = 9);

class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binet-form enclosure of s_nu. Throws InsufficientPrecision unless
/// digits >= nu * log10(4k + 2) + 20.
Interval closed_form_s(const ProblemInstance& instance, std::uint64_t nu, long precision_digits);

/// A D(-k)-triple {k, k+1, c_nu}.
struct TripleContext {
  ProblemInstance instance;
  std::uint64_t nu;
  BigInt s;
  BigInt t;
  BigInt c;
  std::optional<BigInt> sqrt_c_minus_k;
  BigInt s_prime;  // k c - k = s_prime^2, s_prime = k0 k1 s
};

/// Throws std::invalid_argument for nu < 1.
TripleContext triple_context(const ProblemInstance& instance, std::uint64_t nu);

/// Raised when the x0 = 0 branch is requested but c - k is not a square.
class ObstructionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// w_0 = 0, w_1 = 2 s sqrt(c - k), coeff 4c - 2.
BigInt w_term(const TripleContext& ctx, std::uint64_t n);
/// Companion z_n with z_n^2 - k0 c w_n^2 = c - k (z_0 = sqrt(c - k)).
BigInt z_term(const TripleContext& ctx, std::uint64_t n);
/// w_n / sqrt(c - k): defined for every context, integral.
BigInt w_cofactor(const TripleContext& ctx, std::uint64_t n);

struct ResiduePattern {
  std::vector<BigInt> cycle;     // v_m mod s_nu, signed representatives, one period
  std::vector<BigInt> expected;  // (0, s_1, ..., s_{nu-1}, 0, -s_{nu-1}, ..., -s_1)
  bool periodic = false;         // the cycle repeats for the next period
  bool matches() const { return periodic && cycle == expected; }
};

ResiduePattern v_mod_pattern(const ProblemInstance& instance, std::uint64_t nu);

/// nu | m.
bool index_congruence(std::uint64_t m, std::uint64_t nu);

enum class X0Verdict {
  forced_zero,             // x0 = 0, z0 = sqrt(c - k)
  obstructed,              // x0 = 0 but c - k is not a square: no class at all
  smaller_quadruple,       // {k, k+1, d0, c} is a quadruple with d0 < c
  not_a_class,             // c d0 - k is not a square
  excluded_by_assumption,  // minimality of c rules the candidate out
};

struct X0Forcing {
  X0Verdict verdict;
  BigInt x0;
  BigInt d0;                  // k0 x0^2 + 1
  std::optional<BigInt> z0;   // sqrt(c d0 - k) when integral
  bool quadruple_verified = false;
};

/// Candidate x0 = +-s_i (0 <= i < nu). With assume_minimal, no D(-k)-quadruple
/// {k, k+1, c', c} with 1 < c' < c is taken to exist.
X0Forcing x0_forcing(const TripleContext& ctx, std::uint64_t i, bool negative, bool assume_minimal);

}  // namespace dquad
