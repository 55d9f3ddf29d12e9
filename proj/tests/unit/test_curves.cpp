#include "doctest.h"
#include "dquad/curves.hpp"
#include "dquad/sequences.hpp"

using namespace dquad;

namespace {

std::vector<std::int64_t> hit_ks(const std::vector<SquareHit>& hits) {
  std::vector<std::int64_t> out;
  for (const auto& h : hits) out.push_back(h.k);
  return out;
}

// Square test by direct evaluation at each integer, no finite differences.
std::vector<std::int64_t> naive_square_ks(const Polynomial& p, std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = from; k <= to; ++k) {
    if (is_perfect_square(p(BigInt(static_cast<long>(k))))) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("c_nu - k polynomials") {
    CHECK(c_minus_k_poly(2) == Polynomial{1, 15, 64, 64});
    CHECK(build_curve_case(2).full_poly.to_string() == "1 + 15k + 64k^2 + 64k^3");
    CHECK(build_curve_case(4).target_factor() == Polynomial{1, 32, 128, 128});
    CHECK_THROWS_AS(build_curve_case(7), std::invalid_argument);
    CHECK_THROWS_AS(build_curve_case(1), std::invalid_argument);
  }

  TEST_CASE("polynomials evaluate to c_nu - k") {
    for (unsigned nu = 2; nu <= 6; ++nu) {
      const Polynomial p = c_minus_k_poly(nu);
      for (std::int64_t k : {1, 2, 3, 5, 6, 7, 10, 11, 13, 101}) {
        const TripleContext ctx = triple_context(ProblemInstance(k), nu);
        REQUIRE(p(BigInt(static_cast<long>(k))) == ctx.c - k);
      }
    }
  }

  TEST_CASE("factorisations and transforms") {
    for (unsigned nu = 2; nu <= 6; ++nu) {
      const CurveCase cs = build_curve_case(nu);
      INFO("nu = " << nu);
      CHECK(cs.factors_multiply_out());
      CHECK(cs.transform_identity());
      const FactorCoprimality fc = factor_coprimality(cs, 2000);
      CHECK(fc.values_coprime);
    }
    CHECK(factor_coprimality(build_curve_case(3)).resultant == 4096);
    CHECK(factor_coprimality(build_curve_case(6)).resultant == BigInt("1152921504606846976"));
  }

  TEST_CASE("resultant basics") {
    CHECK(resultant(Polynomial{-1, 1}, Polynomial{-2, 1}) == -1);
    CHECK(resultant(Polynomial{-1, 0, 1}, Polynomial{1, 1}) == 0);
    CHECK(resultant(Polynomial{1, 0, 1}, Polynomial{-1, 0, 1}) == 4);
  }

  TEST_CASE("golden point lists lie on the models") {
    for (unsigned nu = 2; nu <= 6; ++nu) {
      const CurveCase cs = build_curve_case(nu);
      for (const auto& pt : cs.golden_points) {
        INFO("nu = " << nu << " x = " << pt.x);
        CHECK(cs.transform.model(pt.x) == pt.y * pt.y);
      }
    }
  }

  TEST_CASE("square scans over small ranges match direct evaluation") {
    for (unsigned nu = 2; nu <= 6; ++nu) {
      const Polynomial p = build_curve_case(nu).target_factor();
      CHECK(hit_ks(square_scan(p, -50, 5000, 3)) == naive_square_ks(p, -50, 5000));
    }
  }

  TEST_CASE("scan roots are exact") {
    const auto hits = square_scan(build_curve_case(3).target_factor(), 0, 200);
    REQUIRE(hits.size() == 3);
    CHECK(hits[2] == SquareHit{165, 12044});
    const auto two = square_scan(build_curve_case(2).full_poly, 0, 100);
    REQUIRE(two.size() == 2);
    CHECK(two[0].root == 1);
    CHECK(two[1].root == 12);
  }

  TEST_CASE("scans to 10^6") {
    CHECK(hit_ks(square_scan(build_curve_case(2).full_poly, 0, 1'000'000, 2)) == std::vector<std::int64_t>{0, 1});
    CHECK(hit_ks(square_scan(build_curve_case(3).target_factor(), 0, 1'000'000, 2)) ==
          std::vector<std::int64_t>{0, 1, 165});
    CHECK(hit_ks(square_scan(build_curve_case(4).target_factor(), 0, 1'000'000, 2)) ==
          std::vector<std::int64_t>{0, 1});
  }

  TEST_CASE("quartic points") {
    const CurveCase five = build_curve_case(5);
    const auto pts = model_point_scan(five.transform.model, -200000, 200000, 2);
    std::vector<BigInt> xs;
    for (const auto& p : pts) xs.push_back(p.x);
    CHECK(xs == std::vector<BigInt>{-1, -1, 0, 0, 1, 1});
  }

  TEST_CASE("C6 integral points") {
    const auto pts = c6_point_scan(100'000, 2);
    CHECK(pts == build_curve_case(6).golden_points);
    const Polynomial model = build_curve_case(6).transform.model;
    CHECK_FALSE(is_perfect_square(model(-4)));
    CHECK(model(8) == 396 * 396);
  }

  TEST_CASE("curve verdicts") {
    for (unsigned nu = 2; nu <= 6; ++nu) {
      const CurveVerdict v = curve_case_conclusion(build_curve_case(nu), 100'000, 2);
      INFO("nu = " << nu);
      CHECK(v.no_admissible);
      CHECK(v.admissible.empty());
      CHECK_FALSE(v.caveat.empty());
    }
  }
}
