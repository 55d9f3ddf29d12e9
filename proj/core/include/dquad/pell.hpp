#pragma once

// The unit equation t^2 - D s^2 = 1 and the Pell-like equation
// z^2 - k0 c x^2 = c - k with its fundamental solution classes.

#include <optional>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

struct PellSolution {
  BigInt t;
  BigInt s;
};

struct PellEquation {
  BigInt d;    // non-square
  BigInt rhs;  // 1 for the unit equation, c - k for the second equation
};

/// Minimal positive solution of t^2 - D s^2 = 1 from the continued fraction
/// of sqrt(D). Throws std::invalid_argument when D < 2 or D is a square.
PellSolution pell_fundamental(const BigInt& d);

/// Period of the continued fraction of sqrt(D) (partial quotients a1..a_r).
std::vector<BigInt> sqrt_cf_period(const BigInt& d);

/// True iff pell_fundamental(k0^2 k1^2 + k0) == (2k + 1, 2 k1).
bool pell_unit_family(const ProblemInstance& instance);

struct PellClass {
  BigInt z0;  // 0 < z0 <= sqrt(c(c - k))
  BigInt x0;  // |x0| < s
};

/// Every (z0, x0) with z0^2 - k0 c x0^2 = c - k inside the fundamental box.
/// Requires c > k and c - 1 = k0 s^2; throws std::invalid_argument otherwise.
std::vector<PellClass> nagell_classes(const ProblemInstance& instance, const BigInt& c, const BigInt& s);

/// Index n with z + x sqrt(k0 c) = (z0 + x0 sqrt(k0 c)) u^n where
/// u = 2 k0 s^2 + 1 + 2 s sqrt(k0 c); nullopt when (z, x) lies in another
/// orbit. Throws std::invalid_argument if (z, x) does not solve the equation.
std::optional<unsigned> class_membership(const BigInt& z, const BigInt& x, const PellClass& cls,
                                         const ProblemInstance& instance, const BigInt& c, const BigInt& s);

/// One multiplication by the unit u.
PellClass apply_unit(const PellClass& point, const ProblemInstance& instance, const BigInt& c, const BigInt& s);

}  // namespace dquad
