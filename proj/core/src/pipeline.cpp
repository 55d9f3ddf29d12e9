#include "dquad/pipeline.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "dquad/cases.hpp"
#include "dquad/curves.hpp"
#include "dquad/gap_bounds.hpp"
#include "dquad/reduction.hpp"
#include "dquad/sequences.hpp"

namespace dquad {

std::string route_name(Route route) {
  switch (route) {
    case Route::gap_hypergeometric:
      return "gap+hypergeometric";
    case Route::linform_reduction:
      return "linform+reduction";
    case Route::congruence:
      return "congruence";
    case Route::curve:
      return "curve";
    case Route::modular:
      return "modular";
    case Route::excluded_mod4:
      return "excluded-mod-4";
  }
  throw std::logic_error("unknown route");
}

Route route_for(std::int64_t k, std::uint64_t nu) {
  if (k < 2) throw std::invalid_argument("k = " + std::to_string(k) + " lies outside every route (k >= 2 required)");
  if (nu < 1) throw std::invalid_argument("nu must be at least 1");
  if (k == 2 || k == 6) return Route::excluded_mod4;
  if (k == 3) return Route::modular;
  if (k == 5) return nu == 1 ? Route::linform_reduction : Route::modular;
  if (k == 4) return nu >= 2 && nu <= 6 ? Route::curve : Route::linform_reduction;
  // k >= 7 from here on.
  if (nu == 1) return Route::congruence;
  if (nu <= 6) return Route::curve;
  if ((nu == 7 && k <= 661) || (nu == 8 && k <= 14)) return Route::linform_reduction;
  if (contradiction_hypotheses_hold(nu, k)) return Route::gap_hypergeometric;
  throw std::invalid_argument("(k, nu) = (" + std::to_string(k) + ", " + std::to_string(nu) + ") has no route");
}

namespace {

void trivial_solution(CaseCertificate& cert) {
  if (cert.c_minus_k_square) cert.solutions.push_back({0, 0, 0, 1});
}

void obstruction_note(CaseCertificate& cert, std::int64_t k) {
  if (!cert.c_minus_k_square) {
    cert.notes.push_back("c - k = " + BigInt(cert.c - k).get_str() + " is not a square, so x0 = 0 admits no class");
  }
}

void absorb_reduction(CaseCertificate& cert, const ReductionCertificate& red) {
  cert.bound_chain.push_back({"linform", red.initial_bound});
  cert.reals.push_back({"kappa", red.kappa});
  cert.reals.push_back({"mu", red.mu});
  std::size_t i = 0;
  for (const auto& pass : red.passes) {
    ++i;
    if (pass.status == ReductionStatus::contracted && pass.new_bound) {
      cert.bound_chain.push_back({"reduction pass " + std::to_string(i), *pass.new_bound});
      cert.reals.push_back({"epsilon pass " + std::to_string(i), pass.epsilon});
      cert.notes.push_back("pass " + std::to_string(i) + ": q = " + pass.q.get_str() + " after " +
                           std::to_string(pass.step_count) + " convergent(s)");
    }
  }
  for (const auto& note : red.notes) cert.notes.push_back(note);
  cert.notes.push_back("exact scan n <= " + std::to_string(std::max<long>(2, red.final_bound.get_si())) +
                       ", m <= " + red.m_max.get_str() + " at " + std::to_string(red.precision_digits) + " digits");
  for (const auto& s : red.solutions) cert.solutions.push_back({s.m, s.n, s.x, s.d});
  cert.conclusive = red.conclusive;
  if (!red.conclusive) cert.caveats.push_back("reduction did not reach an exact scan; see notes");
}

void run_reduction_route(CaseCertificate& cert, const ProblemInstance& instance, const PipelineConfig& config) {
  ReductionOptions options;
  options.precision_digits = config.precision_digits;
  absorb_reduction(cert, reduce_case_to_exhaustion(instance, cert.c, options));
}

}  // namespace

CaseCertificate run_case(std::int64_t k, std::uint64_t nu, const PipelineConfig& config) {
  const Route route = route_for(k, nu);
  const ProblemInstance instance(k);
  const TripleContext ctx = triple_context(instance, nu);
  CaseCertificate cert{k, nu, route, ctx.c, ctx.sqrt_c_minus_k.has_value(), {}, {}, "", {}, {}, {}, false};
  obstruction_note(cert, k);

  switch (route) {
    case Route::excluded_mod4: {
      cert.notes.push_back("-k = 2 (mod 4): no D(-k)-quadruple exists");
      trivial_solution(cert);
      cert.conclusive = true;
      break;
    }
    case Route::modular: {
      if (k == 3) {
        const K3Record rec = k3_impossible(10'000);
        cert.notes.push_back(rec.derivation);
        cert.conclusive = rec.impossible;
      } else {
        const auto sols = k5_intersection(50);
        std::string list;
        for (const auto& s : sols) {
          list += (list.empty() ? "" : ", ") + std::string("(m, n) = (") + std::to_string(s.m) + ", " +
                  std::to_string(s.n) + "), c = " + s.c.get_str();
        }
        cert.notes.push_back("s = v_m = 2 w_n to depth 50: " + list);
        cert.conclusive = true;
      }
      trivial_solution(cert);
      break;
    }
    case Route::congruence: {
      const auto cs = nu1_construct(k);
      if (!cs) {
        cert.notes.push_back("3k + 1 is not a square: no l with k = l(3l +- 2)");
        cert.conclusive = true;
        break;
      }
      const Nu1Congruence cg = nu1_congruence(*cs);
      cert.notes.push_back("k = l(3l " + std::string(cs->sign > 0 ? "+" : "-") + " 2) with l = " +
                           std::to_string(cs->l) + "; identity " + (cg.identity_holds ? "holds" : "fails") +
                           ", gcd " + (cg.coprime ? "1" : "> 1"));
      cert.notes.push_back("least n >= 2 passing the congruence: " + std::to_string(nu1_minimal_feasible_n(*cs)));
      run_reduction_route(cert, instance, config);
      break;
    }
    case Route::linform_reduction: {
      if (k == 5) cert.notes.push_back("k = 5: the double recurrence leaves only s = 2, c = 21");
      run_reduction_route(cert, instance, config);
      break;
    }
    case Route::curve: {
      const CurveCase cs = build_curve_case(static_cast<unsigned>(nu));
      const BigInt bk = instance.big_k();
      const BigInt target = cs.target_factor()(bk);
      cert.notes.push_back("target factor " + cs.target_factor().to_string() + " = " + target.get_str() + " is " +
                           (is_perfect_square(target) ? "a square" : "not a square"));
      if (cs.full_poly(bk) != cert.c - bk) throw std::logic_error("curve polynomial disagrees with c - k");
      trivial_solution(cert);
      cert.conclusive = true;
      break;
    }
    case Route::gap_hypergeometric: {
      const auto min_n = min_n_lower(nu, k);
      try {
        const HypergeometricBound hb = n_upper_hypergeometric(k, cert.c);
        cert.bound_chain.push_back({"hypergeometric", BigInt(static_cast<unsigned long>(hb.max_n))});
        cert.reals.push_back({"hypergeometric bound", hb.bound});
        if (min_n) cert.notes.push_back("gap lemmas force n >= " + std::to_string(*min_n));
        cert.conclusive = min_n && *min_n > hb.max_n;
        if (!cert.conclusive) cert.caveats.push_back("gap lower bound does not exceed the hypergeometric bound");
      } catch (const BoundNotApplicable& err) {
        cert.caveats.push_back(err.what());
      }
      trivial_solution(cert);
      break;
    }
  }
  if (std::any_of(cert.solutions.begin(), cert.solutions.end(), [](const CaseSolution& s) { return s.d == 1; })) {
    cert.notes.push_back("x = 0 gives d = 1: c = 1 branch {1, " + std::to_string(cert.k) + ", " +
                         std::to_string(cert.k + 1) + ", " + cert.c.get_str() + "} is a D(-" + std::to_string(cert.k) +
                         ")-quadruple");
  }
  if (k % 4 == 2 && route != Route::excluded_mod4) cert.notes.push_back("also excluded: -k = 2 (mod 4)");
  const bool only_trivial =
      std::all_of(cert.solutions.begin(), cert.solutions.end(), [](const CaseSolution& s) { return s.d == 1; });
  if (only_trivial) {
    cert.conclusion = kNoExtension;
  } else {
    std::string list;
    for (const auto& s : cert.solutions) list += (list.empty() ? "" : ", ") + s.d.get_str();
    cert.conclusion = "extensions found: d in {" + list + "}";
  }
  return cert;
}

std::vector<CaseCertificate> run_pipeline(const PipelineConfig& config) {
  if (config.k_from > config.k_to || config.nu_min > config.nu_max) return {};
  std::vector<std::pair<std::int64_t, std::uint64_t>> cases;
  for (std::int64_t k = config.k_from; k <= config.k_to; ++k) {
    for (std::uint64_t nu = config.nu_min; nu <= config.nu_max; ++nu) {
      route_for(k, nu);
      cases.emplace_back(k, nu);
    }
  }
  std::vector<std::optional<CaseCertificate>> slots(cases.size());
  const unsigned jobs = std::max(1u, config.jobs);
  auto work = [&](unsigned part) {
    for (std::size_t i = part; i < cases.size(); i += jobs) slots[i] = run_case(cases[i].first, cases[i].second, config);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned p = 0; p < jobs; ++p) tasks.push_back(std::async(std::launch::async, work, p));
    for (auto& t : tasks) t.get();
  }
  std::vector<CaseCertificate> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

int exit_status(const std::vector<CaseCertificate>& certificates) {
  const bool clean = std::all_of(certificates.begin(), certificates.end(),
                                 [](const CaseCertificate& c) { return c.conclusive && c.caveats.empty(); });
  return clean ? 0 : 1;
}

}  // namespace dquad
