#include "doctest.h"
#include "dquad/pell.hpp"
#include "dquad/sequences.hpp"

using namespace dquad;

namespace {

// s-component of (2k+1 + 2k1 sqrt(k0(k+1)))^nu by multiplying out the unit.
BigInt unit_power_s(const ProblemInstance& pi, std::uint64_t nu) {
  const BigInt d = BigInt(static_cast<long>(pi.k0())) * (pi.k() + 1);
  const BigInt t1 = 2 * pi.big_k() + 1;
  const BigInt s1 = 2 * BigInt(static_cast<long>(pi.k1()));
  BigInt t = 1, s = 0;
  for (std::uint64_t i = 0; i < nu; ++i) {
    const BigInt nt = t * t1 + d * s * s1;
    const BigInt ns = t * s1 + s * t1;
    t = nt;
    s = ns;
  }
  return s;
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("reference s values") {
    CHECK(s_term(ProblemInstance(3), 3) == 390);
    CHECK(s_term(ProblemInstance(3), 2) == 28);
    CHECK(s_term(ProblemInstance(5), 3) == 966);
    CHECK(s_table_check(ProblemInstance(3)));
    CHECK(s_table_check(ProblemInstance(7)));
  }

  TEST_CASE("recurrence matches powers of the fundamental unit") {
    for (std::int64_t k = 1; k <= 150; ++k) {
      const ProblemInstance pi(k);
      for (std::uint64_t nu = 0; nu <= 12; ++nu) {
        REQUIRE(s_term(pi, nu) == unit_power_s(pi, nu));
        REQUIRE(v_term(pi, nu) == s_term(pi, nu));
      }
    }
  }

  TEST_CASE("every c_nu extends the pair to a triple") {
    for (std::int64_t k = 1; k <= 60; ++k) {
      for (std::uint64_t nu = 1; nu <= 6; ++nu) {
        const TripleContext ctx = triple_context(ProblemInstance(k), nu);
        REQUIRE(verify_tuple({BigInt(static_cast<long>(k)), BigInt(static_cast<long>(k + 1)), ctx.c},
                             BigInt(static_cast<long>(-k)))
                    .ok());
        REQUIRE(ctx.s_prime * ctx.s_prime == ctx.c * k - k);
        REQUIRE(ctx.t * ctx.t == (k + 1) * ctx.c - k);
      }
    }
  }

  TEST_CASE("triple contexts") {
    const TripleContext eight = triple_context(ProblemInstance(8), 1);
    CHECK(eight.s == 4);
    CHECK(eight.t == 17);
    CHECK(eight.c == 33);
    CHECK(eight.sqrt_c_minus_k == BigInt(5));
    const TripleContext three = triple_context(ProblemInstance(3), 1);
    CHECK(three.s == 2);
    CHECK(three.t == 7);
    CHECK(three.c == 13);
    CHECK_FALSE(three.sqrt_c_minus_k.has_value());
    CHECK_THROWS_AS(triple_context(ProblemInstance(3), 0), std::invalid_argument);
  }

  TEST_CASE("s table holds for k up to 100") {
    for (std::int64_t k = 1; k <= 100; ++k) REQUIRE(s_table_check(ProblemInstance(k)));
  }

  TEST_CASE("closed form encloses the integer") {
    const ProblemInstance three(3);
    const Interval s2 = closed_form_s(three, 2, 40);
    CHECK(s2.contains(28));
    CHECK(s2.nearest_integer() == BigInt(28));
    CHECK(closed_form_s(ProblemInstance(5), 3, 40).nearest_integer() == BigInt(966));
    CHECK_THROWS_AS(closed_form_s(three, 40, 20), InsufficientPrecision);
    for (std::int64_t k = 2; k <= 40; k += 3) {
      CHECK(closed_form_s(ProblemInstance(k), 9, 60).contains(s_term(ProblemInstance(k), 9)));
    }
  }

  TEST_CASE("w sequence") {
    const TripleContext ctx = triple_context(ProblemInstance(8), 1);
    CHECK(w_term(ctx, 0) == 0);
    CHECK(w_term(ctx, 1) == 40);
    CHECK(w_term(ctx, 2) == 5200);
    CHECK(w_term(ctx, 3) == 675960);
    const TripleContext three = triple_context(ProblemInstance(3), 1);
    CHECK_THROWS_AS(w_term(three, 1), ObstructionError);
    CHECK(w_cofactor(three, 1) == 2 * three.s);
  }

  TEST_CASE("w and z follow the unit orbit of (sqrt(c - k), 0)") {
    for (std::int64_t k : {5, 8, 16, 21}) {
      const ProblemInstance pi(k);
      const TripleContext ctx = triple_context(pi, 1);
      if (!ctx.sqrt_c_minus_k) continue;
      PellClass p{*ctx.sqrt_c_minus_k, 0};
      for (std::uint64_t n = 0; n <= 8; ++n) {
        REQUIRE(w_term(ctx, n) == p.x0);
        REQUIRE(z_term(ctx, n) == p.z0);
        REQUIRE(p.z0 * p.z0 - BigInt(static_cast<long>(pi.k0())) * ctx.c * p.x0 * p.x0 == ctx.c - k);
        p = apply_unit(p, pi, ctx.c, ctx.s);
      }
    }
  }

  TEST_CASE("residue cycle of v_m mod s_nu") {
    const ResiduePattern p = v_mod_pattern(ProblemInstance(3), 2);
    CHECK(p.matches());
    CHECK(p.cycle == std::vector<BigInt>{0, 2, 0, -2});
    for (std::int64_t k = 2; k <= 30; ++k) {
      for (std::uint64_t nu = 2; nu <= 5; ++nu) REQUIRE(v_mod_pattern(ProblemInstance(k), nu).matches());
    }
  }

  TEST_CASE("index congruence") {
    CHECK(index_congruence(0, 7));
    CHECK(index_congruence(14, 7));
    CHECK_FALSE(index_congruence(15, 7));
  }

  TEST_CASE("x0 forcing verdicts") {
    const TripleContext eight = triple_context(ProblemInstance(8), 1);
    const X0Forcing f = x0_forcing(eight, 0, false, true);
    CHECK(f.verdict == X0Verdict::forced_zero);
    CHECK(f.z0 == BigInt(5));
    const TripleContext three = triple_context(ProblemInstance(3), 1);
    CHECK(x0_forcing(three, 0, false, true).verdict == X0Verdict::obstructed);
  }
}
