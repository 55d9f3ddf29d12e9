#include "dquad/bigint.hpp"

#include <stdexcept>

namespace dquad {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: " + std::string(text));
  }
  return out;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace dquad
