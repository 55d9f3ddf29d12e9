#pragma once

// Exact integer primitives, D(n)-tuple verification and the brute-force
// quadruple oracle that the rest of the pipeline is checked against.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dquad/bigint.hpp"

namespace dquad {

/// floor(sqrt(n)); throws std::domain_error for n < 0.
BigInt integer_sqrt(const BigInt& n);

/// Root r >= 0 with r*r == n, or nullopt. Zero is a square.
std::optional<BigInt> square_root_exact(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// A positive integer k written as k0 * k1^2 with k0 square-free.
class ProblemInstance {
 public:
  /// Throws std::invalid_argument for k < 1.
  explicit ProblemInstance(std::int64_t k);

  std::int64_t k() const { return k_; }
  std::int64_t k0() const { return k0_; }
  std::int64_t k1() const { return k1_; }
  BigInt big_k() const { return BigInt(static_cast<long>(k_)); }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::int64_t k_;
  std::int64_t k0_;
  std::int64_t k1_;
};

ProblemInstance square_free_decompose(std::int64_t k);
bool is_square_free(std::int64_t n);

struct PairRoot {
  BigInt a;
  BigInt b;
  BigInt root;
};

struct TupleWitness {
  std::vector<BigInt> elements;  // strictly increasing
  BigInt n;
  std::vector<PairRoot> roots;   // pair order (i < j) over sorted elements
};

struct PairFailure {
  BigInt a;
  BigInt b;
  BigInt value;  // a*b + n, not a square
};

struct TupleCheck {
  std::optional<TupleWitness> witness;
  std::vector<PairFailure> failures;  // sorted pairs, complete list
  bool ok() const { return witness.has_value(); }
};

/// Checks that a*b + n is a square for every pair. Throws
/// std::invalid_argument on duplicates, empty input, nonpositive elements
/// or n == 0.
TupleCheck verify_tuple(std::vector<BigInt> elements, const BigInt& n);

struct QuadrupleWitness {
  ProblemInstance instance;
  BigInt c;
  BigInt d;
  BigInt x;
  BigInt y;
  BigInt z;
};

/// (c, d) with c < d making {k, k+1, c, d} a D(-k)-quadruple.
struct Extension {
  std::int64_t c;
  std::int64_t d;
  TupleWitness witness;
};

struct BruteForceOptions {
  // D(n)-quadruples do not exist for n = 2 (mod 4); when set such k return
  // empty with a diagnostic instead of searching.
  bool short_circuit_mod4 = true;
  unsigned jobs = 1;
};

struct BruteForceResult {
  std::vector<Extension> extensions;  // sorted by (c, d)
  std::vector<std::int64_t> triple_extensions;  // all c with {k, k+1, c} a triple
  std::optional<std::string> diagnostic;
};

/// Exhaustive search over 1 <= c < d <= d_bound, c <= c_bound.
BruteForceResult brute_force_quadruples(std::int64_t k, std::int64_t c_bound, std::int64_t d_bound,
                                        const BruteForceOptions& options = {});

/// Recovers (x, y, z) for an extension of the pair by (c, d) per the
/// d - 1 = k0 x^2, (k+1)d - k = y^2, cd - k = z^2 parametrisation.
std::optional<QuadrupleWitness> quadruple_witness(const ProblemInstance& instance, const BigInt& c,
                                                  const BigInt& d);

/// n mod 4 in [0, 4).
int residue_mod4(const BigInt& n);

}  // namespace dquad
