// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dquad/cases.hpp"
#include "dquad/curves.hpp"
#include "dquad/gap_bounds.hpp"
#include "dquad/linform.hpp"
#include "dquad/reduction.hpp"
#include "dquad/sequences.hpp"
#include "dquad/tuple_core.hpp"

using namespace dquad;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

BigInt c_for(std::int64_t k, std::uint64_t nu) { return triple_context(ProblemInstance(k), nu).c; }

Result brute_force_theorem() {
  BruteForceOptions opt;
  opt.short_circuit_mod4 = false;
  opt.jobs = worker_count();
  std::size_t with_c1 = 0;
  for (std::int64_t k = 3; k <= 200; ++k) {
    for (const auto& e : brute_force_quadruples(k, 5000, 5000, opt).extensions) {
      if (e.c > 1 && e.d > 1) {
        return {false, "k = " + std::to_string(k) + " extends by (" + std::to_string(e.c) + ", " +
                           std::to_string(e.d) + ")"};
      }
      ++with_c1;
    }
  }
  return {true, "no (c, d) with c > 1, d > 1 for k in [3, 200]; " + std::to_string(with_c1) +
                    " extensions with c = 1"};
}

Result s_table() {
  for (std::int64_t k = 1; k <= 100; ++k) {
    if (!s_table_check(ProblemInstance(k))) return {false, "mismatch at k = " + std::to_string(k)};
  }
  return {true, "s_0..s_9 polynomials equal the recurrence for k in [1, 100]"};
}

Result matveev() {
  const mpfr_prec_t bits = bits_for_digits(50);
  const Interval c3 = matveev_c(3, bits);
  const Interval c0 = matveev_c0(3, 4, bits);
  const bool ok = c3.certainly_less(Interval::decimal("644065984.903", bits)) &&
                  c0.certainly_less(Interval::decimal("29.8847", bits));
  return {ok, "C(3) = " + c3.upper_string(15) + ", C0 = " + c0.upper_string(12)};
}

Result index_bounds() {
  BigInt max7 = 0, max8 = 0;
  std::int64_t arg7 = 0, arg8 = 0;
  for (std::int64_t k = 7; k <= 661; ++k) {
    const BigInt b = n_bound_from_linform(linear_form_instance(ProblemInstance(k), c_for(k, 7))).n_bound;
    if (b > max7) std::tie(max7, arg7) = std::pair{b, k};
  }
  for (std::int64_t k = 7; k <= 14; ++k) {
    const BigInt b = n_bound_from_linform(linear_form_instance(ProblemInstance(k), c_for(k, 8))).n_bound;
    if (b > max8) std::tie(max8, arg8) = std::pair{b, k};
  }
  const bool ok = max7 < BigInt("47300000000000000") && max8 < BigInt("13900000000000000");
  return {ok, "nu = 7: max " + max7.get_str() + " at k = " + std::to_string(arg7) + "; nu = 8: max " + max8.get_str() +
                  " at k = " + std::to_string(arg8)};
}

Result contraction() {
  std::size_t total = 0, square = 0, max_passes = 0;
  std::string failure;
  auto run = [&](std::int64_t k, std::uint64_t nu) {
    const ReductionCertificate cert = reduce_case_to_exhaustion(ProblemInstance(k), c_for(k, nu));
    ++total;
    if (cert.c_minus_k_square) ++square;
    max_passes = std::max(max_passes, cert.passes.size());
    const bool only_trivial = std::all_of(cert.solutions.begin(), cert.solutions.end(),
                                          [](const SmallSolution& s) { return s.m == 0 && s.n == 0u; });
    const bool trivial_present = !cert.c_minus_k_square || cert.solutions.size() == 1;
    if (failure.empty() && (!cert.conclusive || cert.passes.size() > 2 || cert.final_bound > 2 || !only_trivial ||
                            !trivial_present)) {
      failure = "k = " + std::to_string(k) + ", nu = " + std::to_string(nu);
    }
  };
  for (std::int64_t k = 7; k <= 661; ++k) run(k, 7);
  for (std::int64_t k = 7; k <= 14; ++k) run(k, 8);
  if (!failure.empty()) return {false, "failed at " + failure};
  return {true, std::to_string(total) + " residual cases (" + std::to_string(square) +
                    " with square c - k) reach n <= 2 in at most " + std::to_string(max_passes) +
                    " pass(es); scans find only (m, n) = (0, 0)"};
}

Result nu1_replay() {
  Nu1CloseOptions opt;
  opt.run_reductions = false;
  const Nu1Closure cl = nu1_close(opt);
  const bool bounds_ok = cl.k_bound < BigInt("85280000000000000") && cl.l_bound < 168603000;
  std::size_t cases = 0, violations = 0;
  std::string first;
  for (std::int64_t l = 1; 3 * l * l - 2 * l <= 10'000; ++l) {
    for (int sign : {-1, 1}) {
      const std::int64_t k = l * (3 * l + 2 * sign);
      if (k < 7 || k > 10'000) continue;
      ++cases;
      const std::uint64_t n = nu1_minimal_feasible_n(*nu1_construct(k));
      if (n <= static_cast<std::uint64_t>(2 * k)) {
        if (violations++ == 0) first = "k = " + std::to_string(k) + ": n = " + std::to_string(n);
      }
    }
  }
  std::ostringstream out;
  out << "k < " << cl.k_bound << (cl.k_bound < BigInt("85280000000000000") ? " (ok)" : " (too large)") << ", l < "
      << cl.l_bound << (cl.l_bound < 168603000 ? " (ok)" : " (too large)") << "; congruence-minimal n > 2k in "
      << cases - violations << " of " << cases << " constructed cases";
  if (violations) out << " (first counterexample " << first << ")";
  return {bounds_ok && violations == 0, out.str()};
}

std::vector<std::int64_t> ks(const std::vector<SquareHit>& hits) {
  std::vector<std::int64_t> out;
  for (const auto& h : hits) out.push_back(h.k);
  return out;
}

Result curve_lists() {
  const unsigned jobs = worker_count();
  const bool two = ks(square_scan(build_curve_case(2).full_poly, 0, 1'000'000, jobs)) == std::vector<std::int64_t>{0, 1};
  const bool three =
      ks(square_scan(build_curve_case(3).target_factor(), 0, 1'000'000, jobs)) == std::vector<std::int64_t>{0, 1, 165};
  const bool four =
      ks(square_scan(build_curve_case(4).target_factor(), 0, 1'000'000, jobs)) == std::vector<std::int64_t>{0, 1};
  std::vector<BigInt> xs;
  for (const auto& p : model_point_scan(build_curve_case(5).transform.model, -1'000'000, 1'000'000, jobs)) {
    if (xs.empty() || xs.back() != p.x) xs.push_back(p.x);
  }
  const bool five = xs == std::vector<BigInt>{-1, 0, 1};
  const bool six = c6_point_scan(1'000'000, jobs) == build_curve_case(6).golden_points;
  std::ostringstream out;
  out << "nu=2 " << (two ? "ok" : "MISMATCH") << ", nu=3 " << (three ? "ok" : "MISMATCH") << ", nu=4 "
      << (four ? "ok" : "MISMATCH") << ", nu=5 " << (five ? "ok" : "MISMATCH") << ", C6 " << (six ? "ok" : "MISMATCH");
  return {two && three && four && five && six, out.str()};
}

Result contradiction_grid() {
  std::size_t checked = 0;
  auto check = [&](std::uint64_t nu, std::int64_t k) -> std::optional<std::string> {
    const auto lower = min_n_lower(nu, k);
    const HypergeometricBound hb = n_upper_hypergeometric(k, c_for(k, nu));
    ++checked;
    if (!lower || *lower <= hb.max_n) {
      return "nu = " + std::to_string(nu) + ", k = " + std::to_string(k) + ": max_n = " + std::to_string(hb.max_n);
    }
    return std::nullopt;
  };
  std::vector<std::int64_t> big_ks{662, 663, 700, 1000, 5000, 100'000, 10'000'000};
  std::vector<std::int64_t> mid_ks{15, 16, 20, 50, 661, 662, 10'000, 1'000'000};
  std::vector<std::int64_t> small_ks{7, 8, 9, 12, 30, 100, 1000, 100'000};
  for (auto k : big_ks) {
    if (auto f = check(7, k)) return {false, *f};
  }
  for (auto k : mid_ks) {
    if (auto f = check(8, k)) return {false, *f};
  }
  for (std::uint64_t nu = 9; nu <= 25; ++nu) {
    for (auto k : small_ks) {
      if (auto f = check(nu, k)) return {false, *f};
    }
  }
  return {true, "min_n_lower > hypergeometric max_n on " + std::to_string(checked) + " grid points"};
}

Result k5_case() {
  const auto sols = k5_intersection(50);
  const bool ok = sols.size() == 1 && sols[0].s == 2 && sols[0].c == 21;
  return {ok, std::to_string(sols.size()) + " solution(s)" +
                  (sols.empty() ? std::string() : ": s = " + sols[0].s.get_str() + ", c = " + sols[0].c.get_str())};
}

Result precision_stability() {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> k7(7, 661), k8(7, 14), l1(2, 300);
  std::vector<std::pair<std::int64_t, BigInt>> cases;
  while (cases.size() < 10) {
    switch (cases.size() % 3) {
      case 0: {
        const auto k = k7(rng);
        cases.emplace_back(k, c_for(k, 7));
        break;
      }
      case 1: {
        const auto k = k8(rng);
        cases.emplace_back(k, c_for(k, 8));
        break;
      }
      default: {
        const auto l = l1(rng);
        const std::int64_t k = l * (3 * l + ((rng() & 1) ? 2 : -2));
        cases.emplace_back(k, 4 * BigInt(static_cast<long>(k)) + 1);
      }
    }
  }
  for (const auto& [k, c] : cases) {
    const ReductionCertificate a = reduce_case_to_exhaustion(ProblemInstance(k), c);
    ReductionOptions twice;
    twice.precision_digits = 2 * a.precision_digits;
    const ReductionCertificate b = reduce_case_to_exhaustion(ProblemInstance(k), c, twice);
    bool same = a.passes.size() == b.passes.size() && a.final_bound == b.final_bound &&
                a.solutions.size() == b.solutions.size() && a.conclusive == b.conclusive;
    for (std::size_t i = 0; same && i < a.passes.size(); ++i) {
      same = a.passes[i].q == b.passes[i].q && a.passes[i].new_bound == b.passes[i].new_bound;
    }
    for (std::size_t i = 0; same && i < a.solutions.size(); ++i) {
      same = a.solutions[i].m == b.solutions[i].m && a.solutions[i].d == b.solutions[i].d;
    }
    if (!same) return {false, "outcome changed for k = " + std::to_string(k) + ", c = " + c.get_str()};
  }
  return {true, "10 seeded cases identical at automatic and doubled precision"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 brute-force theorem check", brute_force_theorem},
      {"2 closed-form s table", s_table},
      {"3 Matveev constants", matveev},
      {"4 linear-form index bounds", index_bounds},
      {"5 reduction contraction", contraction},
      {"6 nu = 1 family replay", nu1_replay},
      {"7 curve golden lists", curve_lists},
      {"8 gap vs hypergeometric contradiction", contradiction_grid},
      {"9 k = 5 intersection", k5_case},
      {"10 precision stability", precision_stability},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& err) {
      r = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-40s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", name.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
