#pragma once

// Dense univariate polynomials over the integers, coefficients in ascending order.

#include <initializer_list>
#include <string>
#include <vector>

#include "dquad/bigint.hpp"

namespace dquad {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt operator()(const BigInt& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// p(a x + b).
  Polynomial compose_linear(const BigInt& a, const BigInt& b) const;
  Polynomial scaled(const BigInt& factor) const;

  /// "1 + 16k + 32k^2" style, ascending.
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
BigInt resultant(const Polynomial& a, const Polynomial& b);

}  // namespace dquad
