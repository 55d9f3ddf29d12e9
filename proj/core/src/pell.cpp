#include "dquad/pell.hpp"

#include <stdexcept>

namespace dquad {

namespace {

void require_nonsquare(const BigInt& d) {
  if (d < 2) throw std::invalid_argument("Pell discriminant must be >= 2, got " + d.get_str());
  if (is_perfect_square(d)) throw std::invalid_argument("Pell discriminant is a perfect square: " + d.get_str());
}

}  // namespace

std::vector<BigInt> sqrt_cf_period(const BigInt& d) {
  require_nonsquare(d);
  const BigInt a0 = integer_sqrt(d);
  std::vector<BigInt> period;
  BigInt m = 0, q = 1, a = a0;
  do {
    m = q * a - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    period.push_back(a);
  } while (a != 2 * a0);
  return period;
}

PellSolution pell_fundamental(const BigInt& d) {
  require_nonsquare(d);
  const BigInt a0 = integer_sqrt(d);
  BigInt m = 0, q = 1, a = a0;
  // Convergents p/q of sqrt(D); the first one solving the unit equation is minimal.
  BigInt p_prev = 1, p = a0;
  BigInt s_prev = 0, s = 1;
  while (p * p - d * s * s != 1) {
    m = q * a - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    BigInt p_next = a * p + p_prev;
    BigInt s_next = a * s + s_prev;
    p_prev = p;
    p = p_next;
    s_prev = s;
    s = s_next;
  }
  return {p, s};
}

bool pell_unit_family(const ProblemInstance& instance) {
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  const BigInt k1 = BigInt(static_cast<long>(instance.k1()));
  const BigInt k = instance.big_k();
  const BigInt d = k0 * k0 * k1 * k1 + k0;
  if (d != k0 * (k + 1)) return false;
  const PellSolution fund = pell_fundamental(d);
  return fund.t == 2 * k + 1 && fund.s == 2 * k1;
}

std::vector<PellClass> nagell_classes(const ProblemInstance& instance, const BigInt& c, const BigInt& s) {
  const BigInt k = instance.big_k();
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  if (c <= k) throw std::invalid_argument("nagell_classes requires c > k");
  if (s <= 0 || c - 1 != k0 * s * s) throw std::invalid_argument("nagell_classes requires c - 1 = k0 s^2");
  if (s > 10'000'000) throw std::length_error("nagell_classes: s too large for exhaustive class search");

  const BigInt n = c - k;
  const BigInt z_bound_sq = c * (c - k);
  std::vector<PellClass> out;
  for (BigInt x0 = -(s - 1); x0 < s; ++x0) {
    const BigInt value = n + k0 * c * x0 * x0;
    auto z0 = square_root_exact(value);
    if (!z0 || *z0 == 0) continue;
    if ((*z0) * (*z0) > z_bound_sq) continue;
    out.push_back({*z0, x0});
  }
  return out;
}

PellClass apply_unit(const PellClass& point, const ProblemInstance& instance, const BigInt& c, const BigInt& s) {
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  const BigInt a = 2 * k0 * s * s + 1;
  const BigInt b = 2 * s;
  return {a * point.z0 + b * k0 * c * point.x0, b * point.z0 + a * point.x0};
}

std::optional<unsigned> class_membership(const BigInt& z, const BigInt& x, const PellClass& cls,
                                         const ProblemInstance& instance, const BigInt& c, const BigInt& s) {
  const BigInt k = instance.big_k();
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  if (z * z - k0 * c * x * x != c - k) {
    throw std::invalid_argument("class_membership: (" + z.get_str() + ", " + x.get_str() +
                                ") does not solve z^2 - k0 c x^2 = c - k");
  }
  PellClass point = cls;
  constexpr unsigned kMaxSteps = 100000;
  for (unsigned n = 0; n < kMaxSteps; ++n) {
    if (point.z0 == z && point.x0 == x) return n;
    if (n > 0 && point.z0 > z && point.x0 > x) return std::nullopt;
    point = apply_unit(point, instance, c, s);
  }
  return std::nullopt;
}

}  // namespace dquad
