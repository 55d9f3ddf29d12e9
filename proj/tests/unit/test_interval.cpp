#include <cmath>
#include <random>

#include "doctest.h"
#include "dquad/interval.hpp"

using namespace dquad;

namespace {

constexpr const char* kSqrt2 = "1.41421356237309504880168872420969807856967187537694807317667973799";
constexpr const char* kLog2 = "0.693147180559945309417232121458176568075500134360255254120680009493";
constexpr const char* kE = "2.71828182845904523536028747135266249775724709369995957496696762772";

// A tight reference interval for a decimal literal, so containment checks
// compare against a value not derived from the operation under test.
bool encloses(const Interval& x, const char* literal) {
  const Interval ref = Interval::decimal(literal, 400);
  return !ref.certainly_less(x) && !x.certainly_less(ref);
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("transcendental enclosures contain reference digits") {
    const mpfr_prec_t bits = bits_for_digits(60);
    const Interval two(2, bits);
    CHECK(encloses(sqrt(two), kSqrt2));
    CHECK(encloses(log(two), kLog2));
    CHECK(encloses(Interval::euler(bits), kE));
    CHECK(encloses(exp(Interval(1, bits)), kE));
  }

  TEST_CASE("enclosures are tight at the requested precision") {
    const Interval x = sqrt(Interval(2, bits_for_digits(50)));
    const Interval width = Interval::decimal(x.upper_string(60), 400) - Interval::decimal(x.lower_string(60), 400);
    CHECK(width.certainly_less(Interval::decimal("1e-48", 400)));
  }

  TEST_CASE("arithmetic identities hold by containment") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    const mpfr_prec_t bits = 200;
    for (int i = 0; i < 200; ++i) {
      const long a = dist(rng), b = dist(rng);
      const Interval ia(a, bits), ib(b, bits);
      CHECK((ia + ib).contains(BigInt(a + b)));
      CHECK((ia - ib).contains(BigInt(a - b)));
      CHECK((ia * ib).contains(BigInt(a) * b));
      if (b != 0) {
        const Interval q = (ia / ib) * ib;
        CHECK(q.contains(BigInt(a)));
      }
    }
  }

  TEST_CASE("directed comparisons are conservative") {
    const mpfr_prec_t bits = 128;
    const Interval one(1, bits);
    const Interval third = one / 3;
    CHECK(third.certainly_positive());
    CHECK((third * 3 - one).contains_zero());
    CHECK_FALSE((third * 3).certainly_less(one));
    CHECK_FALSE(one.certainly_less(third * 3));
    CHECK(one.certainly_greater(third));
  }

  TEST_CASE("floors") {
    const mpfr_prec_t bits = 200;
    const Interval x = Interval::decimal("7.5", bits);
    CHECK(x.exact_floor() == BigInt(7));
    CHECK(x.floor_upper() == 7);
    CHECK(x.ceil_upper() == 8);
    const Interval straddle = Interval::hull(Interval::decimal("6.999", bits), Interval::decimal("7.001", bits));
    CHECK_FALSE(straddle.exact_floor().has_value());
    CHECK(straddle.floor_lower() == 6);
    CHECK(straddle.floor_upper() == 7);
    CHECK(straddle.nearest_integer() == BigInt(7));
  }

  TEST_CASE("distance to the nearest integer") {
    const mpfr_prec_t bits = 200;
    const Interval d = dist_to_integer(Interval::decimal("-3.25", bits));
    CHECK(encloses(d, "0.25"));
    CHECK(encloses(dist_to_integer(Interval::decimal("10.9", bits)), "0.1"));
  }

  TEST_CASE("decimal rendering encloses the value") {
    const Interval x = log(Interval(10, bits_for_digits(40)));
    const auto dec = x.to_decimal(20);
    const Interval mid = Interval::decimal(dec.mid, 300);
    const Interval rad = Interval::decimal(dec.radius, 300);
    CHECK_FALSE(x.certainly_less(mid - rad));
    CHECK_FALSE((mid + rad).certainly_less(x));
  }

  TEST_CASE("domain errors") {
    const Interval neg(-1, 64);
    CHECK_THROWS(sqrt(neg));
    CHECK_THROWS(log(neg));
    CHECK_THROWS(Interval(1, 64) / Interval::hull(Interval(-1, 64), Interval(1, 64)));
  }

  TEST_CASE("pow agrees with repeated multiplication") {
    const Interval x = Interval::decimal("1.0001", 256);
    Interval p(1, 256);
    for (int i = 0; i < 37; ++i) p *= x;
    const Interval q = pow(x, 37);
    CHECK_FALSE(p.certainly_less(q));
    CHECK_FALSE(q.certainly_less(p));
    CHECK(std::abs(q.mid_double() - std::pow(1.0001, 37)) < 1e-12);
  }
}
