#include "dquad/linform.hpp"

#include <stdexcept>
#include <vector>

#include "dquad/sequences.hpp"

namespace dquad {

namespace {

BigInt big_of(std::int64_t v) { return BigInt(static_cast<long>(v)); }

Interval log_c_minus_k_k1(const LinearFormInstance& lf, mpfr_prec_t bits) {
  const BigInt k = lf.instance.big_k();
  return log(Interval((lf.c - k) * (k + 1), bits));
}

}  // namespace

LinearFormInstance linear_form_instance(const ProblemInstance& instance, const BigInt& c, long digits) {
  const BigInt k = instance.big_k();
  if (c <= k + 1) throw std::invalid_argument("linear_form_instance requires c > k + 1");
  const mpfr_prec_t bits = bits_for_digits(digits);
  const Interval ci(c, bits);
  const Interval alpha1 = Interval(2 * c - 1, bits) + 2 * sqrt(Interval(c * c - c, bits));
  const Interval alpha2 = Interval(2 * k + 1, bits) + 2 * sqrt(Interval(k * k + k, bits));
  const Interval alpha3 = sqrt(Interval((c - k) * (k + 1), bits) / ci);
  LinearFormInstance lf{instance,
                        c,
                        digits,
                        alpha1,
                        alpha2,
                        alpha3,
                        log(alpha1),
                        log(alpha2),
                        log(alpha3),
                        Interval(bits),
                        Interval(bits),
                        Interval(bits)};
  lf.h1 = lf.log_alpha1 / 2;
  lf.h2 = lf.log_alpha2 / 2;
  lf.h3 = log(Interval((c - k) * (k + 1), bits)) / 2;
  lf.alpha3_above_one = Interval(1L, bits).certainly_less(alpha3);
  lf.c_minus_k_square = is_perfect_square(c - k);
  return lf;
}

Interval lambda_value(const LinearFormInstance& lf, const BigInt& n, const BigInt& m) {
  const mpfr_prec_t bits = lf.log_alpha1.precision();
  return Interval(n, bits) * lf.log_alpha1 - Interval(m, bits) * lf.log_alpha2 + lf.log_alpha3;
}

PQGap pq_gap(const ProblemInstance& instance, const BigInt& c, std::uint64_t n, std::uint64_t m, long digits) {
  const LinearFormInstance lf = linear_form_instance(instance, c, digits);
  const mpfr_prec_t bits = lf.alpha1.precision();
  const BigInt k = instance.big_k();
  const Interval ratio = Interval::ratio(c - k, c, bits);
  PQGap out{pow(lf.alpha2, m) / sqrt(Interval(k + 1, bits)), sqrt(ratio) * pow(lf.alpha1, n), Interval(bits),
            Interval(bits), Interval(bits)};
  out.relative_gap = (out.q - out.p) / out.q;
  out.bound = ratio / (out.q * out.q);
  const BigInt cc = c * c - c;
  out.floor_bound = Interval(1L, bits) / Interval(256 * cc * cc, bits);
  out.q_exceeds_p = out.p.certainly_less(out.q);
  out.gap_below_bound = out.relative_gap.certainly_less(out.bound);
  out.in_hypothesis = n >= 2 && m >= 2 && instance.k() >= 3 && c >= 4 * k + 1;

  const BigInt k0 = big_of(instance.k0());
  const BigInt s_sq = (c - 1) / k0;
  const auto s = (c - 1) % k0 == 0 ? square_root_exact(s_sq) : std::nullopt;
  const auto r = square_root_exact(c - k);
  if (s && r) {
    const Recurrence w{0, 2 * *s * *r, 4 * c - 2};
    out.genuine = v_term(instance, m) == w.term(n);
  }
  return out;
}

LambdaUpper lambda_upper(const LinearFormInstance& lf, const BigInt& n) {
  if (n < 2) throw std::invalid_argument("lambda_upper requires n >= 2");
  const mpfr_prec_t bits = lf.alpha1.precision();
  const Interval decay = exp(-(Interval(2 * n, bits) * lf.log_alpha1));
  return {Interval::decimal("1.00001", bits) * decay, Interval::decimal("1.0001", bits) * decay};
}

Interval matveev_c(unsigned l, mpfr_prec_t bits) {
  if (l < 1) throw std::invalid_argument("matveev_c requires l >= 1");
  BigInt fact = 1;
  for (unsigned i = 2; i < l; ++i) fact *= i;
  const Interval e = Interval::euler(bits);
  const long lp = static_cast<long>(l);
  return Interval(8L, bits) / Interval(fact, bits) * Interval((lp + 2) * (2 * lp + 3), bits) *
         pow(4 * e * (lp + 1), l + 1);
}

Interval matveev_c0(unsigned l, unsigned degree, mpfr_prec_t bits) {
  const Interval e = Interval::euler(bits);
  const Interval dl(static_cast<long>(degree), bits);
  const Interval ll(static_cast<long>(l), bits);
  // log(e^{4.4 l + 7} l^{5.5} D^2 log(e D)) expanded into a sum of logs.
  return Interval::decimal("4.4", bits) * ll + 7 + Interval::decimal("5.5", bits) * log(ll) + 2 * log(dl) +
         log(log(e * dl));
}

Interval matveev_w0_factor(unsigned degree, mpfr_prec_t bits) {
  const Interval e = Interval::euler(bits);
  const Interval dl(static_cast<long>(degree), bits);
  return Interval::decimal("1.5", bits) * e * dl * log(e * dl);
}

namespace {

MatveevConstants base_constants(const LinearFormInstance& lf) {
  const mpfr_prec_t bits = lf.alpha1.precision();
  const Interval d(static_cast<long>(lf.degree), bits);
  std::array<Interval, 3> a{max(d * lf.h1, abs(lf.log_alpha1)), max(d * lf.h2, abs(lf.log_alpha2)),
                            max(d * lf.h3, abs(lf.log_alpha3))};
  MatveevConstants out{matveev_c(3, bits),
                       matveev_c0(3, lf.degree, bits),
                       Interval(bits),
                       a[0] * a[1] * a[2],
                       Interval(bits),
                       Interval::decimal("38.92", bits) * lf.kappa(),
                       a};
  return out;
}

}  // namespace

MatveevConstants matveev_constants(const LinearFormInstance& lf, const BigInt& n, const BigInt& m) {
  const mpfr_prec_t bits = lf.alpha1.precision();
  MatveevConstants out = base_constants(lf);
  const Interval one(1L, bits);
  Interval b = max(one, Interval(abs(n), bits) * out.a[0] / out.a[2]);
  b = max(b, Interval(abs(m), bits) * out.a[1] / out.a[2]);
  out.b = b;
  out.w0 = log(matveev_w0_factor(lf.degree, bits) * b);
  return out;
}

MatveevConstants matveev_constants_substituted(const LinearFormInstance& lf, const BigInt& n) {
  const mpfr_prec_t bits = lf.alpha1.precision();
  MatveevConstants out = base_constants(lf);
  out.b = lf.kappa() * Interval(n + 1, bits);
  out.w0 = log(out.k_factor * Interval(n + 1, bits));
  return out;
}

Interval matveev_lower(const MatveevConstants& constants, unsigned degree) {
  const long d2 = static_cast<long>(degree) * static_cast<long>(degree);
  return -(constants.c_l * constants.c0 * constants.w0 * d2 * constants.omega);
}

namespace {

struct InequalityData {
  Interval k_factor;
  Interval rhs;
  Interval slack;
};

InequalityData inequality_data(const LinearFormInstance& lf, LinformConstant variant) {
  const mpfr_prec_t bits = lf.alpha1.precision();
  const BigInt k = lf.instance.big_k();
  const Interval logs = log(Interval(4 * k + 2, bits)) * log_c_minus_k_k1(lf, bits);
  const Interval k_factor = Interval::decimal("38.92", bits) * lf.kappa();
  if (variant == LinformConstant::printed) {
    return {k_factor, Interval::decimal("1.23185e12", bits) * logs, Interval(0L, bits)};
  }
  const Interval constant = 64 * matveev_c(3, bits) * matveev_c0(3, 4, bits);
  return {k_factor, constant * logs, log(Interval::decimal("1.0001", bits)) / (2 * lf.log_alpha1)};
}

bool possible_at(const InequalityData& data, const BigInt& n, mpfr_prec_t bits) {
  // n < rhs * log(K (n + 1)) + slack, written to avoid dividing by the log.
  const Interval lhs(n, bits);
  const Interval right = data.rhs * log(data.k_factor * Interval(n + 1, bits)) + data.slack;
  return !right.certainly_less(lhs);
}

}  // namespace

bool linform_inequality_possible(const LinearFormInstance& lf, const BigInt& n, LinformConstant variant) {
  return possible_at(inequality_data(lf, variant), n, lf.alpha1.precision());
}

LinformBound n_bound_from_linform(const LinearFormInstance& lf, LinformConstant variant) {
  const mpfr_prec_t bits = lf.alpha1.precision();
  const InequalityData data = inequality_data(lf, variant);
  LinformBound out{1, data.k_factor, data.rhs, variant};
  if (!possible_at(data, 2, bits)) return out;
  BigInt lo = 2, hi = 4;
  while (possible_at(data, hi, bits)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (possible_at(data, mid, bits)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.n_bound = lo;
  return out;
}

BigInt m_upper(const LinearFormInstance& lf, const BigInt& n) {
  const Interval bound = lf.kappa() * Interval(n + 1, lf.alpha1.precision());
  return bound.ceil_upper() - 1;
}

IndependenceCheck multiplicative_independence(const LinearFormInstance& lf, long exponent_bound) {
  if (exponent_bound < 1) throw std::invalid_argument("multiplicative_independence requires a positive bound");
  IndependenceCheck out;
  out.exponent_bound = exponent_bound;
  const mpfr_prec_t bits = lf.alpha1.precision();
  const std::size_t width = static_cast<std::size_t>(2 * exponent_bound + 1);
  std::vector<Interval> m2, m3;
  m2.reserve(width);
  m3.reserve(width);
  for (long e = -exponent_bound; e <= exponent_bound; ++e) {
    m2.push_back(Interval(e, bits) * lf.log_alpha2);
    m3.push_back(Interval(e, bits) * lf.log_alpha3);
  }
  // Normalise the first nonzero exponent to be positive.
  for (long e1 = 0; e1 <= exponent_bound; ++e1) {
    const Interval t1 = Interval(e1, bits) * lf.log_alpha1;
    for (long e2 = (e1 == 0 ? 0 : -exponent_bound); e2 <= exponent_bound; ++e2) {
      const Interval t12 = t1 + m2[static_cast<std::size_t>(e2 + exponent_bound)];
      const long e3_from = (e1 == 0 && e2 == 0) ? 1 : -exponent_bound;
      for (long e3 = e3_from; e3 <= exponent_bound; ++e3) {
        const Interval sum = t12 + m3[static_cast<std::size_t>(e3 + exponent_bound)];
        if (sum.contains_zero()) {
          out.suspected = std::array<long, 3>{e1, e2, e3};
          return out;
        }
      }
    }
  }
  out.relation_free = true;
  return out;
}

}  // namespace dquad
