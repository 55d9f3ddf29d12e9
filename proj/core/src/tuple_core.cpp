#include "dquad/tuple_core.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace dquad {

BigInt integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt of a negative number: " + n.get_str());
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

std::optional<BigInt> square_root_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return integer_sqrt(n);
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_square_free(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

ProblemInstance::ProblemInstance(std::int64_t k) : k_(k), k0_(1), k1_(1) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
  std::int64_t rest = k;
  std::int64_t k0 = 1;
  std::int64_t k1 = 1;
  // Primes up to the cube root of the shrinking cofactor; what survives has
  // at most two prime factors, so it is 1, p, pq or p^2.
  for (std::int64_t p = 2; p * p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      k1 *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      k0 *= p;
    }
  }
  if (rest > 1) {
    const auto r = square_root_exact(BigInt(static_cast<long>(rest)));
    if (r && *r > 1) {
      k1 *= r->get_si();
    } else {
      k0 *= rest;
    }
  }
  k0_ = k0;
  k1_ = k1;
}

ProblemInstance square_free_decompose(std::int64_t k) { return ProblemInstance(k); }

int residue_mod4(const BigInt& n) {
  BigInt r = n % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r.get_si());
}

TupleCheck verify_tuple(std::vector<BigInt> elements, const BigInt& n) {
  if (elements.empty()) throw std::invalid_argument("verify_tuple: empty element list");
  if (n == 0) throw std::invalid_argument("verify_tuple: n must be nonzero");
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] <= 0) throw std::invalid_argument("verify_tuple: elements must be positive");
    if (i > 0 && elements[i] == elements[i - 1]) {
      throw std::invalid_argument("verify_tuple: duplicate element " + elements[i].get_str());
    }
  }

  TupleCheck out;
  TupleWitness witness{elements, n, {}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const BigInt value = elements[i] * elements[j] + n;
      if (auto r = square_root_exact(value)) {
        witness.roots.push_back({elements[i], elements[j], *r});
      } else {
        out.failures.push_back({elements[i], elements[j], value});
      }
    }
  }
  if (out.failures.empty()) out.witness = std::move(witness);
  return out;
}

std::optional<QuadrupleWitness> quadruple_witness(const ProblemInstance& instance, const BigInt& c,
                                                  const BigInt& d) {
  const BigInt k = instance.big_k();
  const BigInt dm1 = d - 1;
  if (dm1 % instance.k0() != 0) return std::nullopt;
  auto x = square_root_exact(dm1 / instance.k0());
  auto y = square_root_exact((k + 1) * d - k);
  auto z = square_root_exact(c * d - k);
  if (!x || !y || !z) return std::nullopt;
  return QuadrupleWitness{instance, c, d, *x, *y, *z};
}

namespace {

bool extends_pair(std::int64_t k, std::int64_t c) {
  const BigInt bk(static_cast<long>(k));
  const BigInt bc(static_cast<long>(c));
  return is_perfect_square(bk * bc - bk) && is_perfect_square((bk + 1) * bc - bk);
}

}  // namespace

BruteForceResult brute_force_quadruples(std::int64_t k, std::int64_t c_bound, std::int64_t d_bound,
                                        const BruteForceOptions& options) {
  if (k < 1) throw std::invalid_argument("brute_force_quadruples: k must be positive");
  BruteForceResult out;
  if (options.short_circuit_mod4 && residue_mod4(BigInt(static_cast<long>(-k))) == 2) {
    out.diagnostic = "n = -" + std::to_string(k) + " is 2 mod 4: no D(n)-quadruple exists";
    return out;
  }

  const std::int64_t limit = std::max(c_bound, d_bound);
  for (std::int64_t c = 1; c <= limit; ++c) {
    if (c == k || c == k + 1) continue;
    if (extends_pair(k, c)) out.triple_extensions.push_back(c);
  }

  const auto& triples = out.triple_extensions;
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<Extension> found;
    const BigInt bk(static_cast<long>(k));
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t c = triples[i];
      if (c > c_bound) break;
      for (std::size_t j = i + 1; j < triples.size(); ++j) {
        const std::int64_t d = triples[j];
        if (d > d_bound) break;
        const BigInt value = BigInt(static_cast<long>(c)) * BigInt(static_cast<long>(d)) - bk;
        if (!is_perfect_square(value)) continue;
        auto check = verify_tuple({bk, bk + 1, BigInt(static_cast<long>(c)), BigInt(static_cast<long>(d))}, -bk);
        if (check.ok()) found.push_back({c, d, std::move(*check.witness)});
      }
    }
    return found;
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || triples.size() < 2 * jobs) {
    out.extensions = scan(0, triples.size());
  } else {
    std::vector<std::future<std::vector<Extension>>> parts;
    const std::size_t chunk = (triples.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < triples.size(); b += chunk) {
      parts.push_back(std::async(std::launch::async, scan, b, std::min(triples.size(), b + chunk)));
    }
    for (auto& p : parts) {
      auto part = p.get();
      out.extensions.insert(out.extensions.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.extensions.begin(), out.extensions.end(),
            [](const Extension& a, const Extension& b) { return std::pair(a.c, a.d) < std::pair(b.c, b.d); });
  return out;
}

}  // namespace dquad
