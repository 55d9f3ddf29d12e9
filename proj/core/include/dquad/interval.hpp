#pragma once

// Closed real intervals with MPFR endpoints and outward (directed) rounding.
//
// Every operation returns an enclosure of the exact result: the lower
// endpoint is rounded toward -inf, the upper toward +inf. A comparison that
// cannot be decided from the endpoints is reported as undecided rather than
// guessed, so callers can raise precision.

#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

#include "dquad/bigint.hpp"

namespace dquad {

/// Working precision in bits for a requested number of decimal digits.
mpfr_prec_t bits_for_digits(long digits);

class Interval {
 public:
  explicit Interval(mpfr_prec_t bits = 256);
  Interval(long value, mpfr_prec_t bits);
  Interval(const BigInt& value, mpfr_prec_t bits);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  /// Enclosure of a decimal literal such as "1.0001" or "1.23185e12".
  static Interval decimal(std::string_view literal, mpfr_prec_t bits);
  static Interval ratio(const BigInt& num, const BigInt& den, mpfr_prec_t bits);
  static Interval euler(mpfr_prec_t bits);
  /// The hull [a.lower, b.upper].
  static Interval hull(const Interval& a, const Interval& b);

  mpfr_prec_t precision() const { return bits_; }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }

  bool contains(const BigInt& value) const;
  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_less(const Interval& other) const;
  bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }

  /// floor(x) when both endpoints share it.
  std::optional<BigInt> exact_floor() const;
  BigInt floor_lower() const;
  BigInt floor_upper() const;
  BigInt ceil_upper() const;
  /// Unique integer within distance < 1/2 of every point, if any.
  std::optional<BigInt> nearest_integer() const;

  double lower_double() const;
  double upper_double() const;
  double mid_double() const;

  /// Printed midpoint plus a radius (rounded up) such that
  /// [mid - radius, mid + radius] still encloses the interval.
  struct Decimal {
    std::string mid;
    std::string radius;
  };
  Decimal to_decimal(int mid_digits = 25) const;
  std::string lower_string(int digits = 25) const;
  std::string upper_string(int digits = 25) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  Interval operator-() const;

  friend Interval operator+(Interval a, long b) { return a += Interval(b, a.bits_); }
  friend Interval operator-(Interval a, long b) { return a -= Interval(b, a.bits_); }
  friend Interval operator*(Interval a, long b) { return a *= Interval(b, a.bits_); }
  friend Interval operator/(Interval a, long b) { return a /= Interval(b, a.bits_); }
  friend Interval operator*(long a, Interval b) { return b *= Interval(a, b.bits_); }

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval pow(const Interval& x, unsigned long exponent);
  friend Interval abs(const Interval& x);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  /// Distance to the nearest integer, ||x||.
  friend Interval dist_to_integer(const Interval& x);

 private:
  mpfr_prec_t bits_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace dquad
