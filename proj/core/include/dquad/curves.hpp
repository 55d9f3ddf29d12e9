#pragma once

// The nu = 2..6 cases: c_nu - k as a polynomial in k, its factorisation,
// the curve each case reduces to, and exact squareness scans.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/polynomial.hpp"

namespace dquad {

struct CurvePoint {
  BigInt x;
  BigInt y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// model(x_scale * k) = y_scale^2 * target(k), so (x_scale k, y_scale y) lies
/// on y^2 = model(x) whenever target(k) = y^2.
struct CurveTransform {
  BigInt x_scale = 1;
  BigInt y_scale = 1;
  Polynomial model;
  std::string description;
};

struct CurveCase {
  unsigned nu;
  Polynomial full_poly;            // c_nu - k, recomputed from the recurrence
  std::vector<Polynomial> factors;
  std::size_t target_index = 0;
  CurveTransform transform;
  std::vector<CurvePoint> golden_points;  // on the model
  std::vector<std::int64_t> golden_k;     // k >= 0 with target(k) a square

  const Polynomial& target_factor() const { return factors[target_index]; }
  bool factors_multiply_out() const;
  bool transform_identity() const;
};

/// k S_nu(k)^2 + 1 - k with S_0 = 0, S_1 = 2, S_{j+1} = (4k + 2) S_j - S_{j-1}.
Polynomial c_minus_k_poly(unsigned nu);

/// Throws std::invalid_argument outside 2 <= nu <= 6.
CurveCase build_curve_case(unsigned nu);

struct FactorCoprimality {
  BigInt resultant;
  std::int64_t checked_to = 0;
  bool values_coprime = false;  // gcd of factor values is 1 on [0, checked_to]
};

FactorCoprimality factor_coprimality(const CurveCase& cs, std::int64_t k_to = 10'000);

struct SquareHit {
  std::int64_t k;
  BigInt root;
  friend bool operator==(const SquareHit&, const SquareHit&) = default;
};

/// Every k in [k_from, k_to] with poly(k) a perfect square, by forward differences.
std::vector<SquareHit> square_scan(const Polynomial& poly, std::int64_t k_from, std::int64_t k_to,
                                   unsigned jobs = 1);

/// Affine integer points on y^2 = x^5 + 16x^4 + 88x^3 + 192x^2 + 144x + 16, |x| <= x_bound.
std::vector<CurvePoint> c6_point_scan(std::int64_t x_bound = 1'000'000, unsigned jobs = 1);

/// The same scan over an arbitrary model y^2 = f(x).
std::vector<CurvePoint> model_point_scan(const Polynomial& model, std::int64_t x_from, std::int64_t x_to,
                                         unsigned jobs = 1);

struct CurveVerdict {
  unsigned nu;
  std::int64_t scan_bound;
  std::vector<SquareHit> target_hits;     // k in [0, scan_bound]
  std::vector<std::int64_t> admissible;   // k >= 2 with c_nu - k itself a square
  bool no_admissible = false;
  std::string verdict;
  std::string caveat;
};

CurveVerdict curve_case_conclusion(const CurveCase& cs, std::int64_t scan_bound = 1'000'000, unsigned jobs = 1);

}  // namespace dquad
