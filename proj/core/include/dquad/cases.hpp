#pragma once

// The small-k arguments (k = 3, 5, 6) and the nu = 1 family k = l(3l +- 2).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/linform.hpp"
#include "dquad/reduction.hpp"
#include "dquad/tuple_core.hpp"

namespace dquad {

struct K3Record {
  std::vector<int> square_residues_mod4;  // residues of X^2 mod 4
  int target_residue = 2;                 // X^2 = 12 s'^2 - 2 = 2 (mod 4)
  bool impossible = false;
  std::uint64_t scan_limit = 0;
  bool scan_clean = false;  // 3 s^2 - 2 is never a square for even s <= limit
  std::string derivation;
};

K3Record k3_impossible(std::uint64_t scan_limit = 1'000'000);

struct K5Solution {
  std::uint64_t m;
  std::uint64_t n;
  BigInt s;
  BigInt c;  // 5 s^2 + 1
};

/// v_m = 2 w_n with v: 0, 2, 22 v - v and w: 1, 17, 18 w - w, for m, n <= depth.
std::vector<K5Solution> k5_intersection(std::uint64_t depth);

struct K6Record {
  int residue_mod4;
  bool excluded = false;
  bool brute_force_empty = false;
  std::int64_t search_bound = 0;
};

/// n = 2 (mod 4) admits no D(n)-quadruple.
bool excluded_mod4(const BigInt& n);

K6Record k6_excluded(std::int64_t search_bound = 1000);

struct Nu1Case {
  std::int64_t k;
  std::int64_t l;
  int sign;  // +1 or -1
  BigInt sqrt_c_minus_k;  // 3l + sign
  BigInt c;               // 4k + 1
};

/// Present iff 3k + 1 is a square. Throws std::invalid_argument for k < 7.
std::optional<Nu1Case> nu1_construct(std::int64_t k);

struct Nu1Congruence {
  BigInt modulus;   // 4k + 1
  BigInt residue;   // (12 l + 4 sign) mod (4k + 1)
  bool identity_holds = false;  // 3(4k + 1) = (12 l + 4 sign)(3 l + sign) - 1
  bool coprime = false;         // gcd(3l + sign, 4k + 1) = 1
};

Nu1Congruence nu1_congruence(const Nu1Case& cs);

/// Whether 2n = 0, +-(12 l + 4 sign) (mod 4k + 1). Requires n >= 2.
bool nu1_congruence_lower_bound(const Nu1Case& cs, std::uint64_t n);

/// Least n >= 2 passing the congruence.
std::uint64_t nu1_minimal_feasible_n(const Nu1Case& cs);

/// Least n >= 2 whose w_n mod 2 k1 (4k + 1) lies among the residues of v_m,
/// computed from the sequences themselves.
std::uint64_t nu1_minimal_feasible_n_direct(const Nu1Case& cs);

struct Nu1Closure {
  BigInt k_bound;  // largest k with the linear-form inequality possible at n = 2k + 1
  BigInt l_bound;  // largest l with l(3l - 2) <= k_bound
  std::int64_t l_cap;
  bool full_enumeration = false;
  std::vector<ReductionCertificate> certificates;  // one per (l, sign) with 7 <= k
  bool all_conclusive = false;
  bool no_solution_with_n_at_least_2 = false;
};

struct Nu1CloseOptions {
  std::int64_t l_cap = 10'000;
  bool full_enumeration = false;
  unsigned jobs = 1;
  bool run_reductions = true;
  LinformConstant constant = LinformConstant::printed;
};

/// Largest k for which n = 2k + 1 is not excluded by the linear-form bound
/// with c = 4k + 1 (the left side loses to the right side beyond it).
BigInt nu1_k_bound(LinformConstant constant = LinformConstant::printed);

Nu1Closure nu1_close(const Nu1CloseOptions& options = {});

}  // namespace dquad
