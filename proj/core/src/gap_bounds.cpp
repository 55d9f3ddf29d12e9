#include "dquad/gap_bounds.hpp"

#include <string>

namespace dquad {

namespace {

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt big_of(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt c_of(const ProblemInstance& instance, std::uint64_t nu) {
  const BigInt s = s_term(instance, nu);
  return big_of(instance.k0()) * s * s + 1;
}

}  // namespace

bool lemma_n1_check(const ProblemInstance& instance, std::uint64_t nu, std::uint64_t l, PowerLemmaPart part) {
  if (instance.k() < 3) throw std::invalid_argument("lemma_n1_check requires k >= 3");
  if (l < 2) throw std::invalid_argument("lemma_n1_check requires l >= 2");
  if (part == PowerLemmaPart::two && l < 3) throw std::invalid_argument("lemma_n1_check part two requires l >= 3");
  if (nu < 1) throw std::invalid_argument("lemma_n1_check requires nu >= 1");
  const BigInt s = s_term(instance, nu);
  const BigInt s_l = s_term(instance, l * nu);
  const unsigned long k0_exp = part == PowerLemmaPart::one ? l : 2 * l;
  // (2^l k0^{l/4} s^l)^4 versus s_{l nu}^4.
  const BigInt lhs = pow_big(2, 4 * l) * pow_big(big_of(instance.k0()), k0_exp) * pow_big(s, 4 * l);
  return lhs < pow_big(s_l, 4);
}

Interval lower_bound_log_x(std::uint64_t n, const BigInt& c, long digits) {
  if (n < 1) throw std::invalid_argument("lower_bound_log_x requires n >= 1");
  if (c <= 1) throw std::invalid_argument("lower_bound_log_x requires c > 1");
  const mpfr_prec_t bits = bits_for_digits(digits);
  return Interval(static_cast<long>(n - 1), bits) * log(Interval(4 * c - 3, bits));
}

bool gap_hypotheses_hold(std::uint64_t nu, std::uint64_t n, std::int64_t k) {
  // Upper gap needs 2 <= n <= k + 1, k >= 3; lower gap needs one of three regimes.
  const bool upper = k >= 3 && n >= 2 && static_cast<std::int64_t>(n) <= k + 1;
  const bool lower = (nu == 7 && n <= 7 && k >= 12) || (nu == 8 && n <= 8 && k >= 15) ||
                     (nu >= 9 && n <= 8 && k >= 7);
  return upper && lower;
}

GapVerdict gap_sandwich(const ProblemInstance& instance, std::uint64_t nu, std::uint64_t n) {
  if (nu < 1 || n < 1) throw std::invalid_argument("gap_sandwich requires nu >= 1 and n >= 1");
  const TripleContext ctx = triple_context(instance, nu);
  GapVerdict out{nu, n, instance.k(), 0, 0, std::nullopt, 0, false, false, false, false};
  out.v_low = v_term(instance, (2 * n - 1) * nu);
  out.v_high = v_term(instance, 2 * n * nu);
  out.w_cofactor = w_cofactor(ctx, n);
  if (ctx.sqrt_c_minus_k) out.w_mid = out.w_cofactor * *ctx.sqrt_c_minus_k;
  // w_n^2 = (c - k) u_n^2, all quantities positive.
  const BigInt w_sq = (ctx.c - instance.big_k()) * out.w_cofactor * out.w_cofactor;
  out.below = out.v_low * out.v_low < w_sq;
  out.above = w_sq < out.v_high * out.v_high;
  out.sandwiched = out.below && out.above;
  out.in_hypothesis = gap_hypotheses_hold(nu, n, instance.k());
  return out;
}

GFComparison g_f_comparison(std::uint64_t nu, std::uint64_t n, std::int64_t k, long digits) {
  const long a = static_cast<long>(2 * n * nu) - static_cast<long>(n);
  const long b = static_cast<long>(2 * n * nu) - static_cast<long>(nu) - 1;
  if (b <= 0 || 2 * a - 1 <= 0) throw std::invalid_argument("g_f_comparison: nonpositive numerator or denominator");
  if (k < 1) throw std::invalid_argument("g_f_comparison requires k >= 1");
  const mpfr_prec_t bits = bits_for_digits(digits);
  GFComparison out{Interval::ratio(2 * a - 1, 2 * b, bits),
                   log(Interval(big_of(4 * k + 2), bits)) / log(Interval(big_of(4 * k + 1), bits)), false};
  out.holds = out.g.certainly_greater(out.f);
  return out;
}

std::optional<std::uint64_t> min_n_lower(std::uint64_t nu, std::int64_t k) {
  if (nu == 7 && k >= 12) return 8;
  if ((nu == 8 && k >= 15) || (nu >= 9 && k >= 7)) return 9;
  return std::nullopt;
}

RickertBound rickert_bound(std::int64_t k, const BigInt& big_n, long digits) {
  if (k < 3) throw std::invalid_argument("rickert_bound: requires k >= 3");
  const BigInt bk = big_of(k);
  if (big_n % (bk + 1) != 0) throw std::invalid_argument("rickert_bound: N must be a multiple of k + 1");
  // N >= 3.76 k^2 (k+1)^2, i.e. 100 N >= 376 k^2 (k+1)^2.
  if (100 * big_n < 376 * bk * bk * (bk + 1) * (bk + 1)) {
    throw std::invalid_argument("rickert_bound: N >= 3.76 k^2 (k+1)^2 violated");
  }
  const mpfr_prec_t bits = bits_for_digits(digits);
  const Interval n_iv(big_n, bits);
  const Interval kp1(bk + 1, bits);
  const Interval num = log(Interval(10L, bits) * kp1 * n_iv);
  const Interval den = log(Interval::decimal("2.66", bits) * n_iv * n_iv / (Interval(bk * bk, bits) * kp1));
  if (!den.certainly_positive()) throw std::invalid_argument("rickert_bound: log(2.66 k^-2 (k+1)^-1 N^2) not positive");
  RickertBound out{k, big_n, Interval(1L, bits) + num / den, Interval::decimal("1.425e28", bits) * kp1 * n_iv};
  if (!out.lambda.certainly_less(Interval(2L, bits))) {
    throw std::invalid_argument("rickert_bound: lambda < 2 could not be certified");
  }
  return out;
}

ThetaQuality theta_approx_quality(const TripleContext& ctx, const BigInt& x, const BigInt& z,
                                  const std::optional<BigInt>& y, long digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  ThetaQuality out{Interval(bits), Interval(bits), Interval(bits)};
  if (x == 0) {
    out.vacuous = true;
    return out;
  }
  if (z <= 0) throw std::invalid_argument("theta_approx_quality requires z > 0");
  const BigInt k = ctx.instance.big_k();
  const BigInt k0 = big_of(ctx.instance.k0());
  const Interval c(ctx.c, bits);
  const Interval zi(z, bits);
  const Interval theta1 = sqrt(Interval(ctx.c - 1, bits) / c);
  const Interval theta2 = sqrt(Interval(ctx.c * (k + 1) - k, bits) / (Interval(k + 1, bits) * c));
  const Interval yi = y ? Interval(*y, bits) : sqrt(Interval(k0 * (k + 1) * x * x + 1, bits));
  out.err1 = abs(theta1 - Interval(k0 * ctx.s * x, bits) / zi);
  out.err2 = abs(theta2 - Interval(ctx.t, bits) * yi / (Interval(k + 1, bits) * zi));
  out.bound = Interval(1L, bits) / Interval(2 * k0 * x * x, bits);
  out.holds1 = out.err1.certainly_less(out.bound);
  out.holds2 = out.err2.certainly_less(out.bound);
  return out;
}

HypergeometricBound n_upper_hypergeometric(std::int64_t k, const BigInt& c, long digits) {
  if (k < 1) throw std::invalid_argument("n_upper_hypergeometric requires k >= 1");
  const mpfr_prec_t bits = bits_for_digits(digits);
  const Interval ki(big_of(k), bits);
  const Interval ci(c, bits);
  const Interval inner_den = Interval::decimal("0.1995", bits) * ci / pow(ki, 3);
  if (!Interval(1L, bits).certainly_less(inner_den)) {
    throw BoundNotApplicable("bound not applicable: 0.1995 k^-3 c <= 1 for k=" + std::to_string(k));
  }
  const Interval a = log(Interval::decimal("1.502e14", bits) * ki * ki * ci);
  const Interval b = log(Interval::decimal("1.884", bits) * ci / sqrt(ki));
  const Interval den = log(Interval(4 * c - 3, bits)) * log(inner_den);
  const Interval rhs = Interval(4L, bits) * a * b / den;
  HypergeometricBound out{rhs + 1, 0};
  const BigInt ceil_hi = out.bound.ceil_upper();
  out.max_n = ceil_hi <= 0 ? 0 : to_u64(ceil_hi - 1);
  return out;
}

std::optional<std::int64_t> hypergeometric_threshold(std::uint64_t nu, std::uint64_t target, std::int64_t k_from,
                                                     std::int64_t k_to) {
  std::optional<std::int64_t> start;
  for (std::int64_t k = k_to; k >= k_from; --k) {
    const ProblemInstance instance(k);
    bool ok = false;
    try {
      ok = n_upper_hypergeometric(k, c_of(instance, nu)).max_n <= target;
    } catch (const BoundNotApplicable&) {
      ok = false;
    }
    if (!ok) break;
    start = k;
  }
  return start;
}

bool ResidualCase::contains(std::uint64_t nu, std::int64_t k) const {
  return nu >= nu_min && (!nu_max || nu <= *nu_max) && k >= k_min && (!k_max || k <= *k_max);
}

std::vector<ResidualCase> residual_cases() {
  return {
      {"k = 3", 1, std::nullopt, 3, 3},
      {"k = 5", 1, std::nullopt, 5, 5},
      {"k = 6", 1, std::nullopt, 6, 6},
      {"1 <= nu <= 6, k >= 7", 1, 6, 7, std::nullopt},
      {"nu = 7, 7 <= k <= 661", 7, 7, 7, 661},
      {"nu = 8, 7 <= k <= 14", 8, 8, 7, 14},
  };
}

bool contradiction_hypotheses_hold(std::uint64_t nu, std::int64_t k) {
  return (nu == 7 && k >= 662) || (nu == 8 && k >= 15) || (nu >= 9 && k >= 7);
}

}  // namespace dquad
