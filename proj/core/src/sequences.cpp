#include "dquad/sequences.hpp"

#include <array>
#include <cmath>
#include <string>

namespace dquad {

BigInt Recurrence::term(std::uint64_t n) const {
  if (n == 0) return a0;
  BigInt prev = a0, cur = a1;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = coeff * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> Recurrence::terms(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  if (count > 0) out.push_back(a0);
  if (count > 1) out.push_back(a1);
  while (out.size() < count) {
    const std::size_t n = out.size();
    out.push_back(coeff * out[n - 1] - out[n - 2]);
  }
  return out;
}

Recurrence s_recurrence(const ProblemInstance& instance) {
  return {0, 2 * BigInt(static_cast<long>(instance.k1())), 4 * instance.big_k() + 2};
}

Recurrence t_recurrence(const ProblemInstance& instance) {
  return {1, 2 * instance.big_k() + 1, 4 * instance.big_k() + 2};
}

BigInt s_term(const ProblemInstance& instance, std::uint64_t nu) { return s_recurrence(instance).term(nu); }
BigInt t_term(const ProblemInstance& instance, std::uint64_t nu) { return t_recurrence(instance).term(nu); }

BigInt v_term(const ProblemInstance& instance, std::uint64_t m) {
  // v_0 = 0, v_1 = 2 k1, v_{m+2} = (4k + 2) v_{m+1} - v_m.
  const BigInt k = instance.big_k();
  const Recurrence v{0, 2 * BigInt(static_cast<long>(instance.k1())), 4 * k + 2};
  return v.term(m);
}

namespace {

// s_nu / k1 as a polynomial in u = 2k + 1, coefficients of u^0, u^1, ...
const std::array<std::vector<long>, 10> kSTable = {{
    {0},
    {2},
    {0, 4},
    {-2, 0, 8},
    {0, -8, 0, 16},
    {2, 0, -24, 0, 32},
    {0, 12, 0, -64, 0, 64},
    {-2, 0, 48, 0, -160, 0, 128},
    {0, -16, 0, 160, 0, -384, 0, 256},
    {2, 0, -80, 0, 480, 0, -896, 0, 512},
}};

}  // namespace

BigInt s_table_value(const ProblemInstance& instance, unsigned nu) {
  if (nu >= kSTable.size()) throw std::out_of_range("s table covers nu <= 9");
  const BigInt u = 2 * instance.big_k() + 1;
  BigInt acc = 0;
  const auto& coeffs = kSTable[nu];
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return BigInt(static_cast<long>(instance.k1())) * acc;
}

bool s_table_check(const ProblemInstance& instance, unsigned up_to) {
  const auto terms = s_recurrence(instance).terms(up_to + 1);
  for (unsigned nu = 0; nu <= up_to; ++nu) {
    if (terms[nu] != s_table_value(instance, nu)) return false;
  }
  return true;
}

Interval closed_form_s(const ProblemInstance& instance, std::uint64_t nu, long precision_digits) {
  const double k = static_cast<double>(instance.k());
  const double needed = static_cast<double>(nu) * std::log10(4.0 * k + 2.0) + 20.0;
  if (static_cast<double>(precision_digits) < needed) {
    throw InsufficientPrecision("closed_form_s: " + std::to_string(precision_digits) + " digits requested, at least " +
                                std::to_string(static_cast<long>(std::ceil(needed))) + " needed for nu=" +
                                std::to_string(nu));
  }
  const mpfr_prec_t bits = bits_for_digits(precision_digits);
  const BigInt bk = instance.big_k();
  const Interval root = sqrt(Interval(bk * bk + bk, bits));
  const Interval alpha = Interval(2 * bk + 1, bits) + 2 * root;
  const Interval conj = Interval(1L, bits) / alpha;  // (2k+1) - 2 sqrt(k^2+k)
  const Interval denom = 2 * sqrt(Interval(BigInt(static_cast<long>(instance.k0())) * (bk + 1), bits));
  return (pow(alpha, nu) - pow(conj, nu)) / denom;
}

TripleContext triple_context(const ProblemInstance& instance, std::uint64_t nu) {
  if (nu < 1) throw std::invalid_argument("triple_context requires nu >= 1");
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  const BigInt k1 = BigInt(static_cast<long>(instance.k1()));
  const BigInt s = s_term(instance, nu);
  const BigInt t = t_term(instance, nu);
  const BigInt c = k0 * s * s + 1;
  return TripleContext{instance, nu, s, t, c, square_root_exact(c - instance.big_k()), k0 * k1 * s};
}

BigInt w_cofactor(const TripleContext& ctx, std::uint64_t n) {
  const Recurrence u{0, 2 * ctx.s, 4 * ctx.c - 2};
  return u.term(n);
}

BigInt w_term(const TripleContext& ctx, std::uint64_t n) {
  if (!ctx.sqrt_c_minus_k) {
    throw ObstructionError("w_term: c - k = " + BigInt(ctx.c - ctx.instance.big_k()).get_str() +
                           " is not a perfect square, so x0 = 0 admits no class");
  }
  const Recurrence w{0, 2 * ctx.s * *ctx.sqrt_c_minus_k, 4 * ctx.c - 2};
  return w.term(n);
}

BigInt z_term(const TripleContext& ctx, std::uint64_t n) {
  if (!ctx.sqrt_c_minus_k) {
    throw ObstructionError("z_term: c - k is not a perfect square");
  }
  const BigInt k0 = BigInt(static_cast<long>(ctx.instance.k0()));
  const BigInt z0 = *ctx.sqrt_c_minus_k;
  const Recurrence z{z0, (2 * k0 * ctx.s * ctx.s + 1) * z0, 4 * ctx.c - 2};
  return z.term(n);
}

namespace {

BigInt signed_residue(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  if (2 * r > modulus) r -= modulus;
  return r;
}

}  // namespace

ResiduePattern v_mod_pattern(const ProblemInstance& instance, std::uint64_t nu) {
  if (nu < 1) throw std::invalid_argument("v_mod_pattern requires nu >= 1");
  const auto s = s_recurrence(instance).terms(nu + 1);
  const BigInt& modulus = s[nu];
  ResiduePattern out;
  if (nu == 1) {
    // Every v_m is a multiple of s_1 = 2 k1: the cycle collapses to (0).
    out.expected = {0};
    const auto v = s_recurrence(instance).terms(4);
    out.cycle = {signed_residue(v[0], modulus)};
    out.periodic = true;
    for (const auto& term : v) out.periodic = out.periodic && signed_residue(term, modulus) == 0;
    return out;
  }
  const std::size_t period = 2 * nu;
  const auto v = s_recurrence(instance).terms(2 * period);
  for (std::size_t m = 0; m < period; ++m) out.cycle.push_back(signed_residue(v[m], modulus));
  out.periodic = true;
  for (std::size_t m = 0; m < period; ++m) {
    out.periodic = out.periodic && signed_residue(v[m + period], modulus) == out.cycle[m];
  }
  for (std::uint64_t i = 0; i < nu; ++i) out.expected.push_back(s[i]);
  out.expected.push_back(0);
  for (std::uint64_t i = nu - 1; i >= 1; --i) out.expected.push_back(-s[i]);
  return out;
}

bool index_congruence(std::uint64_t m, std::uint64_t nu) {
  if (nu == 0) throw std::invalid_argument("index_congruence requires nu >= 1");
  return m % nu == 0;
}

X0Forcing x0_forcing(const TripleContext& ctx, std::uint64_t i, bool negative, bool assume_minimal) {
  if (i >= ctx.nu) throw std::invalid_argument("x0_forcing: candidate index must be below nu");
  const BigInt k0 = BigInt(static_cast<long>(ctx.instance.k0()));
  const BigInt k = ctx.instance.big_k();
  X0Forcing out{X0Verdict::not_a_class, 0, 1, std::nullopt, false};
  const BigInt si = s_term(ctx.instance, i);
  out.x0 = negative ? BigInt(-si) : si;
  out.d0 = k0 * si * si + 1;
  out.z0 = square_root_exact(ctx.c * out.d0 - k);

  if (i == 0) {
    out.verdict = out.z0 ? X0Verdict::forced_zero : X0Verdict::obstructed;
    return out;
  }
  // d0 > 1: {k, k+1, d0} is always a triple (d0 = c_i); the fourth square decides.
  out.quadruple_verified = out.z0.has_value() && out.d0 != k && out.d0 != k + 1 && out.d0 != ctx.c &&
                           verify_tuple({k, k + 1, out.d0, ctx.c}, -k).ok();
  if (assume_minimal) {
    out.verdict = X0Verdict::excluded_by_assumption;
  } else {
    out.verdict = out.quadruple_verified ? X0Verdict::smaller_quadruple : X0Verdict::not_a_class;
  }
  return out;
}

}  // namespace dquad
