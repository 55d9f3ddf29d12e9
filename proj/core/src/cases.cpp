#include "dquad/cases.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "dquad/sequences.hpp"

namespace dquad {

K3Record k3_impossible(std::uint64_t scan_limit) {
  K3Record out;
  std::set<int> residues;
  for (int x = 0; x < 4; ++x) residues.insert((x * x) % 4);
  out.square_residues_mod4.assign(residues.begin(), residues.end());
  out.impossible = residues.count(out.target_residue) == 0;
  out.scan_limit = scan_limit;
  out.scan_clean = true;
  for (std::uint64_t s = 2; s <= scan_limit && out.scan_clean; s += 2) {
    const BigInt s_big(static_cast<unsigned long>(s));
    out.scan_clean = !is_perfect_square(3 * s_big * s_big - 2);
  }
  out.derivation = "c - k = 3s^2 - 2 with s = 2s', so X^2 - 12 s'^2 = -2 and X^2 = 2 (mod 4)";
  return out;
}

std::vector<K5Solution> k5_intersection(std::uint64_t depth) {
  const auto v = Recurrence{0, 2, 22}.terms(depth + 1);
  const auto w = Recurrence{1, 17, 18}.terms(depth + 1);
  std::vector<K5Solution> out;
  // Both sequences are strictly increasing, so a merge walk finds every match.
  std::size_t i = 0, j = 0;
  while (i < v.size() && j < w.size()) {
    const BigInt target = 2 * w[j];
    if (v[i] < target) {
      ++i;
    } else if (target < v[i]) {
      ++j;
    } else {
      out.push_back({i, j, v[i], 5 * v[i] * v[i] + 1});
      ++i;
      ++j;
    }
  }
  return out;
}

bool excluded_mod4(const BigInt& n) { return residue_mod4(n) == 2; }

K6Record k6_excluded(std::int64_t search_bound) {
  K6Record out{residue_mod4(BigInt(-6)), false, false, search_bound};
  out.excluded = out.residue_mod4 == 2;
  BruteForceOptions options;
  options.short_circuit_mod4 = false;
  out.brute_force_empty = brute_force_quadruples(6, search_bound, search_bound, options).extensions.empty();
  return out;
}

std::optional<Nu1Case> nu1_construct(std::int64_t k) {
  if (k < 7) throw std::invalid_argument("nu1_construct requires k >= 7");
  const BigInt bk(static_cast<long>(k));
  const auto r = square_root_exact(3 * bk + 1);
  if (!r) return std::nullopt;
  // r^2 = 1 (mod 3), so r = 3l + 1 or r = 3l - 1.
  const int sign = BigInt(*r % 3) == 1 ? 1 : -1;
  const BigInt l = (*r - sign) / 3;
  return Nu1Case{k, l.get_si(), sign, *r, 4 * bk + 1};
}

Nu1Congruence nu1_congruence(const Nu1Case& cs) {
  const BigInt l(static_cast<long>(cs.l));
  const BigInt modulus = 4 * BigInt(static_cast<long>(cs.k)) + 1;
  const BigInt lead = 12 * l + 4 * cs.sign;
  Nu1Congruence out{modulus, BigInt(lead % modulus), false, false};
  out.identity_holds = 3 * modulus == lead * cs.sqrt_c_minus_k - 1;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), cs.sqrt_c_minus_k.get_mpz_t(), modulus.get_mpz_t());
  out.coprime = g == 1;
  return out;
}

bool nu1_congruence_lower_bound(const Nu1Case& cs, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("nu1_congruence_lower_bound requires n >= 2");
  const Nu1Congruence cg = nu1_congruence(cs);
  const BigInt two_n = BigInt(static_cast<unsigned long>(2 * n)) % cg.modulus;
  return two_n == 0 || two_n == cg.residue || two_n == BigInt((cg.modulus - cg.residue) % cg.modulus);
}

std::uint64_t nu1_minimal_feasible_n(const Nu1Case& cs) {
  std::uint64_t n = 2;
  while (!nu1_congruence_lower_bound(cs, n)) ++n;
  return n;
}

std::uint64_t nu1_minimal_feasible_n_direct(const Nu1Case& cs) {
  const ProblemInstance instance(cs.k);
  const BigInt k = instance.big_k();
  const BigInt k1(static_cast<long>(instance.k1()));
  const BigInt modulus = 2 * k1 * cs.c;
  // v_m mod M is periodic; one sweep until (v_m, v_{m+1}) returns to (0, 2 k1) collects all residues.
  std::set<BigInt> v_residues;
  BigInt a = 0, b = 2 * k1 % modulus;
  do {
    v_residues.insert(a);
    BigInt next = ((4 * k + 2) * b - a) % modulus;
    if (next < 0) next += modulus;
    a = b;
    b = next;
  } while (!(a == 0 && b == BigInt(2 * k1 % modulus)));
  const BigInt s = 2 * k1;
  BigInt w_prev = 0, w = 2 * s * cs.sqrt_c_minus_k % modulus;
  for (std::uint64_t n = 1;; ++n) {
    if (n >= 2 && v_residues.count(w)) return n;
    BigInt next = ((4 * cs.c - 2) * w - w_prev) % modulus;
    if (next < 0) next += modulus;
    w_prev = w;
    w = next;
  }
}

BigInt nu1_k_bound(LinformConstant constant) {
  auto possible = [constant](const BigInt& k) {
    const ProblemInstance instance(k.get_si());
    const LinearFormInstance lf = linear_form_instance(instance, 4 * k + 1);
    return linform_inequality_possible(lf, 2 * k + 1, constant);
  };
  BigInt lo = 7, hi = BigInt("1000000000000000000");
  if (!possible(lo)) return 6;
  if (possible(hi)) throw std::runtime_error("nu1_k_bound: inequality still possible at k = 1e18");
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (possible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Nu1Closure nu1_close(const Nu1CloseOptions& options) {
  Nu1Closure out;
  out.k_bound = nu1_k_bound(options.constant);
  BigInt l = integer_sqrt(out.k_bound / 3) + 2;
  while (l * (3 * l - 2) > out.k_bound) --l;
  out.l_bound = l;
  out.l_cap = options.l_cap;
  out.full_enumeration = options.full_enumeration;
  if (!options.run_reductions) return out;

  const std::int64_t l_max = options.full_enumeration ? out.l_bound.get_si() : std::min(options.l_cap, out.l_bound.get_si());
  std::vector<std::int64_t> ks;
  for (std::int64_t li = 1; li <= l_max; ++li) {
    for (int sign : {-1, 1}) {
      const std::int64_t k = li * (3 * li + 2 * sign);
      if (k >= 7) ks.push_back(k);
    }
  }
  std::vector<std::optional<ReductionCertificate>> slots(ks.size());
  const unsigned jobs = std::max(1u, options.jobs);
  auto work = [&](unsigned part) {
    for (std::size_t i = part; i < ks.size(); i += jobs) {
      const ProblemInstance instance(ks[i]);
      ReductionOptions ro;
      ro.constant = options.constant;
      slots[i] = reduce_case_to_exhaustion(instance, 4 * instance.big_k() + 1, ro);
    }
  };
  std::vector<std::future<void>> tasks;
  for (unsigned p = 0; p < jobs; ++p) tasks.push_back(std::async(std::launch::async, work, p));
  for (auto& t : tasks) t.get();
  for (auto& slot : slots) out.certificates.push_back(std::move(*slot));

  out.all_conclusive = std::all_of(out.certificates.begin(), out.certificates.end(),
                                   [](const ReductionCertificate& c) { return c.conclusive; });
  out.no_solution_with_n_at_least_2 = std::all_of(out.certificates.begin(), out.certificates.end(), [](const auto& c) {
    return std::all_of(c.solutions.begin(), c.solutions.end(), [](const SmallSolution& s) { return s.m == 0; });
  });
  return out;
}

}  // namespace dquad
