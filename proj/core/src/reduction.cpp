#include "dquad/reduction.hpp"

#include <algorithm>

#include "dquad/sequences.hpp"

namespace dquad {

namespace {

void push_quotient(CFExpansion& out, const BigInt& a) {
  out.quotients.push_back(a);
  const std::size_t n = out.convergents.size();
  if (n == 0) {
    out.convergents.push_back({a, 1});
  } else if (n == 1) {
    out.convergents.push_back({a * out.convergents[0].p + 1, a});
  } else {
    const Convergent& c1 = out.convergents[n - 1];
    const Convergent& c2 = out.convergents[n - 2];
    out.convergents.push_back({a * c1.p + c2.p, a * c1.q + c2.q});
  }
}

std::size_t decimal_digits(const BigInt& n) {
  return n == 0 ? 1 : mpz_sizeinbase(n.get_mpz_t(), 10);
}

}  // namespace

CFExpansion cf_expand(const Interval& x, std::size_t max_terms) {
  CFExpansion out;
  Interval rest = x;
  while (out.quotients.size() < max_terms) {
    const auto a = rest.exact_floor();
    if (!a) {
      out.exhausted = true;
      break;
    }
    push_quotient(out, *a);
    const Interval frac = rest - Interval(*a, rest.precision());
    if (frac.contains_zero()) {
      if (mpfr_equal_p(frac.lower(), frac.upper())) {
        out.complete = true;
      } else {
        out.exhausted = true;
      }
      break;
    }
    rest = Interval(1L, rest.precision()) / frac;
  }
  out.index_reached = out.quotients.size();
  return out;
}

CFExpansion cf_expand(const BigInt& num, const BigInt& den, std::size_t max_terms) {
  if (den <= 0) throw std::invalid_argument("cf_expand requires a positive denominator");
  CFExpansion out;
  BigInt a = num, b = den;
  while (b != 0 && out.quotients.size() < max_terms) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    push_quotient(out, q);
    BigInt r = a - q * b;
    a = b;
    b = r;
  }
  out.complete = b == 0;
  out.index_reached = out.quotients.size();
  return out;
}

ReductionInput reduction_input(const ProblemInstance& instance, const BigInt& c, const BigInt& n_current,
                               long precision_digits) {
  const long needed = 2 * static_cast<long>(decimal_digits(n_current)) + 30;
  if (precision_digits < needed) {
    throw InsufficientPrecision("reduction needs at least " + std::to_string(needed) + " digits for N = " +
                                n_current.get_str() + ", got " + std::to_string(precision_digits));
  }
  const LinearFormInstance lf = linear_form_instance(instance, c, precision_digits);
  const mpfr_prec_t bits = lf.alpha1.precision();
  return {lf.kappa(),
          lf.log_alpha3 / lf.log_alpha2,
          Interval::decimal("1.0001", bits) / lf.log_alpha2,
          lf.alpha1 * lf.alpha1,
          n_current,
          precision_digits};
}

ReductionOutcome bd_reduce(const ReductionInput& input) {
  const mpfr_prec_t bits = input.kappa.precision();
  const CFExpansion cf = cf_expand(input.kappa, 100000);
  const BigInt threshold = 6 * input.n_current;
  const Interval big_n(input.n_current, bits);
  ReductionOutcome out{0, Interval(bits), std::nullopt, 0, ReductionStatus::non_contracting};
  auto it = std::find_if(cf.convergents.begin(), cf.convergents.end(),
                         [&](const Convergent& cv) { return cv.q > threshold; });
  for (; it != cf.convergents.end() && out.step_count < kReductionRetryCap; ++it) {
    ++out.step_count;
    const Interval q(it->q, bits);
    const Interval eps = dist_to_integer(q * input.mu) - big_n * dist_to_integer(q * input.kappa);
    if (!eps.certainly_positive()) continue;
    out.q = it->q;
    out.epsilon = eps;
    BigInt bound = (log(input.a * q / eps) / log(input.bexp)).floor_upper();
    if (bound < 0) bound = 0;
    out.new_bound = bound;
    out.status = bound < input.n_current ? ReductionStatus::contracted : ReductionStatus::non_contracting;
    return out;
  }
  throw ReductionInconclusive("reduction inconclusive at " + std::to_string(input.precision_digits) +
                                  " digits: no convergent q > 6N certified epsilon > 0 (" +
                                  std::to_string(cf.index_reached) + " certified quotients, " +
                                  std::to_string(out.step_count) + " tried)",
                              cf.index_reached);
}

std::vector<SmallSolution> exact_small_scan(const ProblemInstance& instance, const BigInt& c, std::uint64_t n_max,
                                            std::uint64_t m_max) {
  const BigInt k = instance.big_k();
  const BigInt k0 = BigInt(static_cast<long>(instance.k0()));
  std::vector<BigInt> w_values;
  const auto r = square_root_exact(c - k);
  const auto s = (c - 1) % k0 == 0 ? square_root_exact((c - 1) / k0) : std::nullopt;
  if (r && s) w_values = Recurrence{0, 2 * *s * *r, 4 * c - 2}.terms(n_max + 1);
  const auto v = s_recurrence(instance).terms(m_max + 1);
  std::vector<SmallSolution> out;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    const BigInt d = k0 * v[m] * v[m] + 1;
    if (!is_perfect_square(c * d - k)) continue;
    SmallSolution sol{m, std::nullopt, v[m], d};
    const auto hit = std::find(w_values.begin(), w_values.end(), v[m]);
    if (hit != w_values.end()) sol.n = static_cast<std::uint64_t>(hit - w_values.begin());
    out.push_back(std::move(sol));
  }
  return out;
}

ReductionCertificate reduce_case_to_exhaustion(const ProblemInstance& instance, const BigInt& c,
                                               const ReductionOptions& options) {
  const LinearFormInstance base = linear_form_instance(instance, c, kDefaultLinformDigits);
  const LinformBound initial = n_bound_from_linform(base, options.constant);
  long digits = options.precision_digits > 0
                    ? options.precision_digits
                    : std::max<long>(kDefaultLinformDigits, 2 * static_cast<long>(decimal_digits(initial.n_bound)) + 40);

  ReductionCertificate cert{instance, c, base.c_minus_k_square, initial.n_bound, {}, initial.n_bound, 0, digits,
                            false, {}, {}, base.kappa(), base.log_alpha3 / base.log_alpha2};
  if (!cert.c_minus_k_square) {
    cert.notes.push_back("c - k = " + BigInt(c - instance.big_k()).get_str() +
                         " is not a square: x0 = 0 is obstructed, so no class exists");
  }
  BigInt bound = initial.n_bound;
  bool stuck = false;
  while (bound > 2 && cert.passes.size() < options.max_passes) {
    std::optional<ReductionOutcome> outcome;
    long attempt_digits = std::max<long>(digits, 2 * static_cast<long>(decimal_digits(bound)) + 30);
    for (unsigned attempt = 0; attempt <= options.precision_retries && !outcome; ++attempt) {
      try {
        outcome = bd_reduce(reduction_input(instance, c, bound, attempt_digits));
      } catch (const ReductionInconclusive& err) {
        cert.notes.push_back(err.what());
        attempt_digits *= 2;
      }
    }
    if (!outcome) {
      stuck = true;
      break;
    }
    digits = attempt_digits;
    cert.passes.push_back(*outcome);
    if (outcome->status == ReductionStatus::non_contracting) {
      cert.notes.push_back("reduction stopped contracting at n <= " + bound.get_str());
      break;
    }
    bound = *outcome->new_bound;
  }
  cert.precision_digits = digits;
  cert.final_bound = bound;
  constexpr long kScanCap = 1000;
  if (stuck || bound > kScanCap) {
    cert.notes.push_back("bound n <= " + bound.get_str() + " left without an exact scan");
    return cert;
  }
  const std::uint64_t n_final = std::max<std::uint64_t>(2, to_u64(bound));
  cert.m_max = m_upper(base, BigInt(static_cast<unsigned long>(n_final))) + 1;
  cert.solutions = exact_small_scan(instance, c, n_final, to_u64(cert.m_max));
  cert.conclusive = true;
  return cert;
}

}  // namespace dquad
