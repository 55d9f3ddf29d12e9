#include <set>

#include "doctest.h"
#include "dquad/cases.hpp"
#include "dquad/sequences.hpp"

using namespace dquad;

TEST_SUITE("cases") {
  TEST_CASE("k = 3 is impossible mod 4") {
    const K3Record rec = k3_impossible(1'000'000);
    CHECK(rec.square_residues_mod4 == std::vector<int>{0, 1});
    CHECK(rec.target_residue == 2);
    CHECK(rec.impossible);
    CHECK(rec.scan_clean);
    CHECK(rec.scan_limit == 1'000'000);
  }

  TEST_CASE("k = 3 triples never have square c - k") {
    const ProblemInstance three(3);
    for (std::uint64_t nu = 1; nu <= 40; ++nu) REQUIRE_FALSE(triple_context(three, nu).sqrt_c_minus_k.has_value());
  }

  TEST_CASE("k = 5 double recurrence") {
    const auto sols = k5_intersection(50);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].m == 1);
    CHECK(sols[0].n == 0);
    CHECK(sols[0].s == 2);
    CHECK(sols[0].c == 21);
  }

  TEST_CASE("k = 5 intersection against a set oracle") {
    std::set<BigInt> v;
    BigInt a = 0, b = 2;
    for (int i = 0; i < 60; ++i) {
      v.insert(a);
      const BigInt nb = 22 * b - a;
      a = b;
      b = nb;
    }
    std::vector<BigInt> common;
    BigInt p = 1, q = 17;
    for (int i = 0; i < 50; ++i) {
      if (v.count(2 * p)) common.push_back(2 * p);
      const BigInt nq = 18 * q - p;
      p = q;
      q = nq;
    }
    CHECK(common == std::vector<BigInt>{2});
    CHECK(BigInt(22 * 2 - 0) != 2 * 17);
  }

  TEST_CASE("k = 6 and the mod 4 exclusion") {
    const K6Record rec = k6_excluded(1000);
    CHECK(rec.residue_mod4 == 2);
    CHECK(rec.excluded);
    CHECK(rec.brute_force_empty);
    CHECK(excluded_mod4(-6));
    CHECK(excluded_mod4(-10));
    CHECK_FALSE(excluded_mod4(-8));
    CHECK_FALSE(excluded_mod4(-3));
  }

  TEST_CASE("nu = 1 construction") {
    const auto eight = nu1_construct(8);
    REQUIRE(eight.has_value());
    CHECK(eight->l == 2);
    CHECK(eight->sign == -1);
    CHECK(eight->sqrt_c_minus_k == 5);
    CHECK(eight->c == 33);
    const auto sixteen = nu1_construct(16);
    REQUIRE(sixteen.has_value());
    CHECK(sixteen->l == 2);
    CHECK(sixteen->sign == 1);
    CHECK(sixteen->sqrt_c_minus_k == 7);
    CHECK(sixteen->c == 65);
    CHECK_FALSE(nu1_construct(7).has_value());
  }

  TEST_CASE("constructed cases are exactly the k with square c_1 - k") {
    for (std::int64_t k = 7; k <= 5000; ++k) {
      const bool square = triple_context(ProblemInstance(k), 1).sqrt_c_minus_k.has_value();
      REQUIRE(nu1_construct(k).has_value() == square);
    }
  }

  TEST_CASE("nu = 1 congruence identity") {
    const Nu1Congruence cg = nu1_congruence(*nu1_construct(8));
    CHECK(cg.modulus == 33);
    CHECK(cg.residue == 20);
    CHECK(cg.identity_holds);
    CHECK(cg.coprime);
    CHECK_FALSE(nu1_congruence_lower_bound(*nu1_construct(8), 2));
    CHECK_THROWS_AS(nu1_congruence_lower_bound(*nu1_construct(8), 1), std::invalid_argument);
    for (std::int64_t l = 2; l <= 300; ++l) {
      for (int sign : {-1, 1}) {
        const auto cs = nu1_construct(l * (3 * l + 2 * sign));
        REQUIRE(cs.has_value());
        const Nu1Congruence c = nu1_congruence(*cs);
        REQUIRE(c.identity_holds);
        REQUIRE(c.coprime);
      }
    }
  }

  TEST_CASE("congruence-minimal n against the direct residue sweep") {
    for (std::int64_t l = 2; l <= 20; ++l) {
      for (int sign : {-1, 1}) {
        const auto cs = nu1_construct(l * (3 * l + 2 * sign));
        const std::uint64_t n_cong = nu1_minimal_feasible_n(*cs);
        const std::uint64_t n_direct = nu1_minimal_feasible_n_direct(*cs);
        INFO("k = " << cs->k);
        CHECK(nu1_congruence_lower_bound(*cs, n_cong));
        // The direct sweep uses a finer modulus, so it can only push n up.
        CHECK(n_direct >= n_cong);
      }
    }
    const auto eight = nu1_construct(8);
    CHECK(nu1_minimal_feasible_n_direct(*eight) == 10);
    CHECK(nu1_minimal_feasible_n_direct(*nu1_construct(16)) == 14);
  }

  TEST_CASE("nu = 1 bounds") {
    const BigInt kb = nu1_k_bound();
    CHECK(kb < BigInt("85280000000000000"));
    CHECK(kb > BigInt("10000000000000000"));
    Nu1CloseOptions opt;
    opt.run_reductions = false;
    const Nu1Closure cl = nu1_close(opt);
    CHECK(cl.k_bound == kb);
    CHECK(cl.l_bound < 168603000);
    CHECK(cl.l_bound * (3 * cl.l_bound - 2) <= kb);
    CHECK((cl.l_bound + 1) * (3 * cl.l_bound + 1) > kb);
    CHECK(cl.certificates.empty());
  }

  TEST_CASE("nu = 1 slice reduces without solutions") {
    Nu1CloseOptions opt;
    opt.l_cap = 40;
    opt.jobs = 2;
    const Nu1Closure cl = nu1_close(opt);
    CHECK(cl.certificates.size() == 2 * 40 - 2);
    CHECK(cl.all_conclusive);
    CHECK(cl.no_solution_with_n_at_least_2);
    for (const auto& cert : cl.certificates) {
      REQUIRE(cert.solutions.size() == 1);
      CHECK(cert.solutions[0].d == 1);
    }
  }
}
