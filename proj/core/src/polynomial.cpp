#include "dquad/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dquad {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_linear(const BigInt& a, const BigInt& b) const {
  const Polynomial lin(std::vector<BigInt>{b, a});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial(std::vector<BigInt>{*it});
  return acc;
}

Polynomial Polynomial::scaled(const BigInt& factor) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c *= factor;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

BigInt resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<BigInt>> mat(size, std::vector<BigInt>(size, 0));
  // Rows of a's coefficients (highest first), then b's.
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[r][r + i] = a.coeff(static_cast<std::size_t>(m - i));
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[n + r][r + i] = b.coeff(static_cast<std::size_t>(n - i));
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r) {
        if (mat[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(mat[k], mat[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return sign * mat[size - 1][size - 1];
}

}  // namespace dquad
