#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dquad/linform.hpp"
#include "dquad/sequences.hpp"

using namespace dquad;

namespace {

LinearFormInstance instance_for(std::int64_t k, std::uint64_t nu, long digits = kDefaultLinformDigits) {
  const ProblemInstance pi(k);
  return linear_form_instance(pi, triple_context(pi, nu).c, digits);
}

bool near(const Interval& x, long double expected, long double rel) {
  return std::abs(static_cast<long double>(x.mid_double()) - expected) <= rel * std::abs(expected);
}

}  // namespace

TEST_SUITE("linform") {
  TEST_CASE("Matveev constants against long double formulas") {
    const mpfr_prec_t bits = bits_for_digits(50);
    const long double e = std::numbers::e_v<long double>;
    const long double c3 = 8.0L / 2.0L * 5.0L * 9.0L * std::pow(16.0L * e, 4.0L);
    const long double c0 = 20.2L + 5.5L * std::log(3.0L) + std::log(16.0L) + std::log(std::log(4.0L * e));
    const long double w0 = 1.5L * e * 4.0L * std::log(4.0L * e);
    CHECK(near(matveev_c(3, bits), c3, 1e-15L));
    CHECK(near(matveev_c0(3, 4, bits), c0, 1e-15L));
    CHECK(near(matveev_w0_factor(4, bits), w0, 1e-15L));
    CHECK(matveev_c(3, bits).certainly_less(Interval::decimal("644065984.903", bits)));
    CHECK(matveev_c0(3, 4, bits).certainly_less(Interval::decimal("29.8847", bits)));
    CHECK(matveev_w0_factor(4, bits).certainly_less(Interval::decimal("38.92", bits)));
  }

  TEST_CASE("linear form instance") {
    const LinearFormInstance lf = instance_for(8, 1);
    CHECK(lf.c == 33);
    CHECK(lf.c_minus_k_square);
    CHECK(lf.alpha3_above_one);
    CHECK(near(lf.log_alpha1, std::log(65.0L + 2 * std::sqrt(1056.0L)), 1e-15L));
    CHECK(near(lf.log_alpha2, std::log(17.0L + 2 * std::sqrt(72.0L)), 1e-15L));
    CHECK(near(lf.alpha3, std::sqrt(25.0L * 9 / 33), 1e-15L));
    CHECK_THROWS_AS(linear_form_instance(ProblemInstance(8), 9, 40), std::invalid_argument);
  }

  TEST_CASE("lambda value matches its definition") {
    const LinearFormInstance lf = instance_for(5, 1);
    for (long n = 0; n <= 4; ++n) {
      for (long m = 0; m <= 4; ++m) {
        const long double expected = n * std::log(41.0L + 2 * std::sqrt(420.0L)) -
                                     m * std::log(11.0L + 2 * std::sqrt(30.0L)) + std::log(std::sqrt(16.0L * 6 / 21));
        CHECK(std::abs(lambda_value(lf, n, m).mid_double() - static_cast<double>(expected)) < 1e-12);
      }
    }
  }

  TEST_CASE("lambda upper bound plug-in") {
    const LinearFormInstance lf = instance_for(8, 1);
    const LambdaUpper up = lambda_upper(lf, 2);
    const long double a1 = 65.0L + 2 * std::sqrt(1056.0L);
    CHECK(near(up.tight, 1.00001L * std::pow(a1, -4.0L), 1e-14L));
    CHECK(up.tight.certainly_less(up.loose));
    const LambdaUpper five = lambda_upper(instance_for(5, 1), 2);
    CHECK(five.tight.certainly_positive());
    CHECK(five.tight.certainly_less(Interval::decimal("1e-6", five.tight.precision())));
    CHECK_THROWS_AS(lambda_upper(lf, 1), std::invalid_argument);
  }

  TEST_CASE("P/Q gap evaluation") {
    const PQGap g = pq_gap(ProblemInstance(8), 33, 2, 2);
    CHECK(g.in_hypothesis);
    CHECK_FALSE(g.genuine);
    CHECK(g.q.certainly_positive());
    // Away from genuine solutions the gap is only reported.
    for (std::uint64_t n = 2; n <= 6; ++n) {
      for (std::uint64_t m = 2; m <= 6; ++m) {
        const PQGap h = pq_gap(ProblemInstance(8), 33, n, m);
        CHECK_FALSE(h.relative_gap.contains_zero());
        CHECK_FALSE(h.genuine);
      }
    }
  }

  TEST_CASE("published index bounds") {
    const LinformBound seven = n_bound_from_linform(instance_for(7, 7));
    CHECK(seven.n_bound < BigInt("47300000000000000"));
    CHECK(seven.n_bound > BigInt("1000000000000000"));
    const LinformBound top = n_bound_from_linform(instance_for(661, 7));
    CHECK(top.n_bound == BigInt("47205582447414819"));
    const LinformBound eight = n_bound_from_linform(instance_for(14, 8));
    CHECK(eight.n_bound < BigInt("13900000000000000"));
  }

  TEST_CASE("index bound is the last possible n") {
    for (std::int64_t k : {7, 40, 300}) {
      const LinearFormInstance lf = instance_for(k, 7);
      for (auto variant : {LinformConstant::printed, LinformConstant::derived}) {
        const LinformBound b = n_bound_from_linform(lf, variant);
        CHECK(linform_inequality_possible(lf, b.n_bound, variant));
        CHECK_FALSE(linform_inequality_possible(lf, b.n_bound + 1, variant));
        CHECK_FALSE(linform_inequality_possible(lf, 2 * b.n_bound, variant));
      }
    }
  }

  TEST_CASE("derived constant is never below the printed one") {
    for (std::int64_t k = 7; k <= 661; k += 73) {
      const LinearFormInstance lf = instance_for(k, 7);
      CHECK(n_bound_from_linform(lf, LinformConstant::derived).n_bound >=
            n_bound_from_linform(lf, LinformConstant::printed).n_bound);
    }
  }

  TEST_CASE("bound grows with k along nu = 7") {
    BigInt prev = 0;
    for (std::int64_t k = 7; k <= 661; k += 31) {
      const BigInt b = n_bound_from_linform(instance_for(k, 7)).n_bound;
      CHECK(b > prev);
      prev = b;
    }
  }

  TEST_CASE("Matveev lower bound against the upper bound") {
    const LinearFormInstance lf = instance_for(8, 7);
    for (long n : {2, 10, 1000, 1'000'000}) {
      const MatveevConstants mc = matveev_constants_substituted(lf, n);
      CHECK(matveev_lower(mc).certainly_less(log(lambda_upper(lf, n).loose)));
    }
    // Far past the index bound the two bounds contradict each other.
    const BigInt far = 100 * n_bound_from_linform(lf).n_bound;
    const mpfr_prec_t bits = lf.log_alpha1.precision();
    const Interval log_upper = log(Interval::decimal("1.0001", bits)) - 2 * Interval(far, bits) * lf.log_alpha1;
    CHECK(log_upper.certainly_less(matveev_lower(matveev_constants_substituted(lf, far))));
    const MatveevConstants exact = matveev_constants(lf, 3, 4);
    CHECK(exact.b.certainly_positive());
    CHECK(exact.omega.certainly_positive());
  }

  TEST_CASE("m upper bound") {
    const LinearFormInstance lf = instance_for(8, 1);
    const Interval kappa = lf.kappa();
    for (long n = 2; n <= 50; ++n) {
      const BigInt m = m_upper(lf, n);
      CHECK(Interval(m, kappa.precision()).certainly_less(kappa * (n + 1)));
      CHECK_FALSE(Interval(m + 1, kappa.precision()).certainly_less(kappa * (n + 1)));
    }
  }

  TEST_CASE("multiplicative independence") {
    for (std::int64_t k : {5, 8, 12, 100}) {
      for (std::uint64_t nu : {1u, 7u}) {
        const IndependenceCheck ic = multiplicative_independence(instance_for(k, nu));
        INFO("k=" << k << " nu=" << nu);
        CHECK(ic.relation_free);
        CHECK_FALSE(ic.suspected.has_value());
      }
    }
  }
}
