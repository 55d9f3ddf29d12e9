// dquad: command-line front end for the D(-k)-quadruple toolkit.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dquad/cases.hpp"
#include "dquad/curves.hpp"
#include "dquad/gap_bounds.hpp"
#include "dquad/linform.hpp"
#include "dquad/pell.hpp"
#include "dquad/pipeline.hpp"
#include "dquad/reduction.hpp"
#include "dquad/sequences.hpp"
#include "dquad/tuple_core.hpp"
#include "json.hpp"

using namespace dquad;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCaveat = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::int64_t k = 8;
  std::string k_range;
  std::uint64_t nu = 1;
  std::int64_t scan_bound = 1'000'000;
  long precision_digits = 0;
  std::string format = "json";
  unsigned jobs = 1;
  bool full_l_enumeration = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":.");
  try {
    if (sep == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    const std::size_t rest = text.find_first_not_of(":.", sep);
    if (rest == std::string::npos) throw UsageError("bad range");
    return {std::stoll(text.substr(0, sep)), std::stoll(text.substr(rest))};
  } catch (const std::logic_error&) {
    throw UsageError("--k-range expects A..B or A:B, got '" + text + "'");
  }
}

ojson real(const Interval& x) {
  const auto d = x.to_decimal();
  return {{"mid", d.mid}, {"radius", d.radius}};
}

std::string real_text(const Interval& x) {
  const auto d = x.to_decimal();
  return d.mid + " +- " + d.radius;
}

void emit(const Options& opt, const ojson& doc, const std::string& text) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<BigInt> parse_elements(const std::string& csv) {
  std::vector<BigInt> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_bigint(item));
  return out;
}

int cmd_verify(const Options& opt, const std::string& elements, const std::string& n_text) {
  const TupleCheck check = verify_tuple(parse_elements(elements), parse_bigint(n_text));
  ojson doc{{"ok", check.ok()}};
  std::ostringstream text;
  if (check.ok()) {
    ojson roots = ojson::array();
    text << "OK D(" << n_text << ")-tuple with " << check.witness->roots.size() << " roots\n";
    for (const auto& r : check.witness->roots) {
      roots.push_back({{"a", r.a.get_str()}, {"b", r.b.get_str()}, {"root", r.root.get_str()}});
      text << "  " << r.a << "*" << r.b << " + (" << n_text << ") = " << r.root << "^2\n";
    }
    doc["roots"] = roots;
  } else {
    ojson fails = ojson::array();
    text << "NOT a D(" << n_text << ")-tuple\n";
    for (const auto& f : check.failures) {
      fails.push_back({{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"value", f.value.get_str()}});
      text << "  " << f.a << "*" << f.b << " + (" << n_text << ") = " << f.value << " is not a square\n";
    }
    doc["failures"] = fails;
  }
  emit(opt, doc, text.str());
  return check.ok() ? kExitOk : kExitCaveat;
}

int cmd_pell(const Options& opt, const std::string& d_text, bool classes) {
  std::ostringstream text;
  ojson doc;
  if (!d_text.empty()) {
    const BigInt d = parse_bigint(d_text);
    const PellSolution sol = pell_fundamental(d);
    ojson period = ojson::array();
    for (const auto& a : sqrt_cf_period(d)) period.push_back(a.get_str());
    doc = {{"d", d.get_str()}, {"t", sol.t.get_str()}, {"s", sol.s.get_str()}, {"period", period}};
    text << "t^2 - " << d << " s^2 = 1: (t, s) = (" << sol.t << ", " << sol.s << "), period length "
         << period.size() << "\n";
  } else {
    const ProblemInstance instance(opt.k);
    doc = {{"k", opt.k}, {"k0", instance.k0()}, {"k1", instance.k1()}, {"unit_family", pell_unit_family(instance)}};
    text << "k = " << opt.k << " = " << instance.k0() << " * " << instance.k1() << "^2; fundamental unit (2k+1, 2k1) "
         << (pell_unit_family(instance) ? "confirmed" : "NOT confirmed") << "\n";
    if (classes) {
      const TripleContext ctx = triple_context(instance, opt.nu);
      ojson list = ojson::array();
      text << "classes of z^2 - k0 c x^2 = c - k for c = " << ctx.c << ":\n";
      for (const auto& cls : nagell_classes(instance, ctx.c, ctx.s)) {
        list.push_back({{"z0", cls.z0.get_str()}, {"x0", cls.x0.get_str()}});
        text << "  (z0, x0) = (" << cls.z0 << ", " << cls.x0 << ")\n";
      }
      doc["nu"] = opt.nu;
      doc["c"] = ctx.c.get_str();
      doc["classes"] = list;
    }
  }
  emit(opt, doc, text.str());
  return kExitOk;
}

int cmd_sequences(const Options& opt, unsigned terms) {
  const ProblemInstance instance(opt.k);
  const TripleContext ctx = triple_context(instance, opt.nu);
  std::ostringstream text;
  ojson s_terms = ojson::array();
  for (const auto& v : s_recurrence(instance).terms(terms)) s_terms.push_back(v.get_str());
  const ResiduePattern pattern = v_mod_pattern(instance, opt.nu);
  ojson doc{{"k", opt.k},
            {"nu", opt.nu},
            {"s", ctx.s.get_str()},
            {"t", ctx.t.get_str()},
            {"c", ctx.c.get_str()},
            {"c_minus_k_square", ctx.sqrt_c_minus_k.has_value()},
            {"s_terms", s_terms},
            {"residue_pattern_matches", pattern.matches()},
            {"table_check", s_table_check(instance)}};
  text << "k = " << opt.k << ", nu = " << opt.nu << ": s = " << ctx.s << ", t = " << ctx.t << ", c = " << ctx.c
       << "\n  c - k " << (ctx.sqrt_c_minus_k ? "is a square" : "is not a square") << "\n  v_m mod s_nu pattern "
       << (pattern.matches() ? "matches" : "DOES NOT match") << "\n  closed-form table "
       << (s_table_check(instance) ? "agrees" : "DISAGREES") << " with the recurrence\n";
  const long digits = std::max<long>(opt.precision_digits,
                                     static_cast<long>(opt.nu * std::log10(4.0 * opt.k + 2.0)) + 25);
  const Interval closed = closed_form_s(instance, opt.nu, digits);
  doc["closed_form_s"] = real(closed);
  text << "  Binet enclosure of s_nu: " << real_text(closed) << "\n";
  emit(opt, doc, text.str());
  return kExitOk;
}

int cmd_bounds(const Options& opt, std::uint64_t n_max) {
  const ProblemInstance instance(opt.k);
  const TripleContext ctx = triple_context(instance, opt.nu);
  const long digits = opt.precision_digits > 0 ? opt.precision_digits : kDefaultBoundDigits;
  std::ostringstream text;
  ojson gaps = ojson::array();
  text << "k = " << opt.k << ", nu = " << opt.nu << ", c = " << ctx.c << "\n";
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const GapVerdict g = gap_sandwich(instance, opt.nu, n);
    gaps.push_back({{"n", n}, {"sandwiched", g.sandwiched}, {"in_hypothesis", g.in_hypothesis}});
    text << "  n = " << n << ": v_{(2n-1)nu} < w_n < v_{2n nu} " << (g.sandwiched ? "holds" : "fails")
         << (g.in_hypothesis ? "" : " (outside the lemma hypotheses)") << "\n";
  }
  ojson doc{{"k", opt.k}, {"nu", opt.nu}, {"c", ctx.c.get_str()}, {"gaps", gaps}};
  const auto min_n = min_n_lower(opt.nu, opt.k);
  doc["min_n_lower"] = min_n ? ojson(*min_n) : ojson(nullptr);
  text << "  gap lower bound: " << (min_n ? "n >= " + std::to_string(*min_n) : std::string("none")) << "\n";
  int status = kExitOk;
  try {
    const HypergeometricBound hb = n_upper_hypergeometric(opt.k, ctx.c, digits);
    doc["hypergeometric"] = {{"bound", real(hb.bound)}, {"max_n", hb.max_n}};
    text << "  hypergeometric: n < " << real_text(hb.bound) << ", so n <= " << hb.max_n << "\n";
  } catch (const BoundNotApplicable& err) {
    doc["hypergeometric"] = nullptr;
    text << "  hypergeometric: " << err.what() << "\n";
    status = kExitCaveat;
  }
  doc["contradiction"] = contradiction_hypotheses_hold(opt.nu, opt.k);
  ojson residual = nullptr;
  for (const auto& rc : residual_cases()) {
    if (rc.contains(opt.nu, opt.k)) residual = rc.description;
  }
  doc["residual_case"] = residual;
  text << "  residual case: " << (residual.is_null() ? "none" : residual.get<std::string>()) << "\n";
  emit(opt, doc, text.str());
  return status;
}

int cmd_linform(const Options& opt) {
  const ProblemInstance instance(opt.k);
  const TripleContext ctx = triple_context(instance, opt.nu);
  const long digits = opt.precision_digits > 0 ? opt.precision_digits : kDefaultLinformDigits;
  const LinearFormInstance lf = linear_form_instance(instance, ctx.c, digits);
  const mpfr_prec_t bits = lf.alpha1.precision();
  const LinformBound printed = n_bound_from_linform(lf, LinformConstant::printed);
  const LinformBound derived = n_bound_from_linform(lf, LinformConstant::derived);
  const IndependenceCheck indep = multiplicative_independence(lf);
  ojson doc{{"k", opt.k},
            {"nu", opt.nu},
            {"c", ctx.c.get_str()},
            {"log_alpha1", real(lf.log_alpha1)},
            {"log_alpha2", real(lf.log_alpha2)},
            {"log_alpha3", real(lf.log_alpha3)},
            {"C3", real(matveev_c(3, bits))},
            {"C0", real(matveev_c0(3, 4, bits))},
            {"K", real(printed.k_factor)},
            {"n_bound_printed", printed.n_bound.get_str()},
            {"n_bound_derived", derived.n_bound.get_str()},
            {"independent_to_exponent_20", indep.relation_free}};
  std::ostringstream text;
  text << "k = " << opt.k << ", nu = " << opt.nu << ", c = " << ctx.c << "\n"
       << "  C(3) = " << real_text(matveev_c(3, bits)) << "\n  C0 = " << real_text(matveev_c0(3, 4, bits)) << "\n"
       << "  K = " << real_text(printed.k_factor) << "\n"
       << "  n <= " << printed.n_bound << " (constant 1.23185e12), n <= " << derived.n_bound
       << " (constant from the formulas)\n"
       << "  no multiplicative relation with exponents <= 20: " << (indep.relation_free ? "yes" : "NO") << "\n";
  emit(opt, doc, text.str());
  return indep.relation_free ? kExitOk : kExitCaveat;
}

ojson reduction_json(const ReductionCertificate& cert) {
  ojson passes = ojson::array();
  for (const auto& p : cert.passes) {
    passes.push_back({{"q", p.q.get_str()},
                      {"epsilon", real(p.epsilon)},
                      {"new_bound", p.new_bound ? ojson(p.new_bound->get_str()) : ojson(nullptr)},
                      {"convergents_tried", p.step_count}});
  }
  ojson sols = ojson::array();
  for (const auto& s : cert.solutions) {
    sols.push_back({{"m", s.m}, {"n", s.n ? ojson(*s.n) : ojson(nullptr)}, {"x", s.x.get_str()}, {"d", s.d.get_str()}});
  }
  return {{"k", cert.instance.k()},       {"c", cert.c.get_str()},
          {"c_minus_k_square", cert.c_minus_k_square}, {"initial_bound", cert.initial_bound.get_str()},
          {"passes", passes},             {"final_bound", cert.final_bound.get_str()},
          {"m_max", cert.m_max.get_str()}, {"precision_digits", cert.precision_digits},
          {"conclusive", cert.conclusive}, {"solutions", sols},
          {"kappa", real(cert.kappa)},    {"mu", real(cert.mu)},
          {"notes", cert.notes}};
}

std::string reduction_text(const ReductionCertificate& cert) {
  std::ostringstream text;
  text << "k = " << cert.instance.k() << ", c = " << cert.c << ": n <= " << cert.initial_bound;
  for (const auto& p : cert.passes) text << " -> " << (p.new_bound ? p.new_bound->get_str() : "?");
  text << (cert.conclusive ? "; exact scan done" : "; INCONCLUSIVE") << "\n";
  for (const auto& s : cert.solutions) {
    text << "  solution m=" << s.m << (s.n ? " n=" + std::to_string(*s.n) : std::string()) << " x=" << s.x
         << " d=" << s.d << "\n";
  }
  for (const auto& n : cert.notes) text << "  note: " << n << "\n";
  return text.str();
}

int cmd_reduce(const Options& opt, bool nu1_family, std::int64_t l_cap) {
  if (nu1_family) {
    Nu1CloseOptions o;
    o.l_cap = l_cap;
    o.full_enumeration = opt.full_l_enumeration;
    o.jobs = opt.jobs;
    const Nu1Closure cl = nu1_close(o);
    ojson certs = ojson::array();
    std::ostringstream text;
    text << "nu = 1 family: k <= " << cl.k_bound << ", l <= " << cl.l_bound << "; reduced "
         << cl.certificates.size() << " cases (l <= "
         << (cl.full_enumeration ? cl.l_bound.get_str() : std::to_string(std::min<long>(l_cap, cl.l_bound.get_si())))
         << ")\n  all conclusive: " << (cl.all_conclusive ? "yes" : "NO")
         << "\n  solutions beyond x = 0: " << (cl.no_solution_with_n_at_least_2 ? "none" : "FOUND") << "\n";
    for (const auto& c : cl.certificates) certs.push_back(reduction_json(c));
    ojson doc{{"k_bound", cl.k_bound.get_str()}, {"l_bound", cl.l_bound.get_str()},
              {"full_enumeration", cl.full_enumeration}, {"all_conclusive", cl.all_conclusive},
              {"no_solution_with_n_at_least_2", cl.no_solution_with_n_at_least_2}, {"certificates", certs}};
    emit(opt, doc, text.str());
    return cl.all_conclusive && cl.no_solution_with_n_at_least_2 ? kExitOk : kExitCaveat;
  }
  const ProblemInstance instance(opt.k);
  const TripleContext ctx = triple_context(instance, opt.nu);
  ReductionOptions ro;
  ro.precision_digits = opt.precision_digits;
  const ReductionCertificate cert = reduce_case_to_exhaustion(instance, ctx.c, ro);
  ojson doc = reduction_json(cert);
  doc["nu"] = opt.nu;
  emit(opt, doc, reduction_text(cert));
  return cert.conclusive ? kExitOk : kExitCaveat;
}

int cmd_curves(const Options& opt) {
  if (opt.nu < 2 || opt.nu > 6) throw UsageError("curves requires 2 <= --nu <= 6");
  const CurveCase cs = build_curve_case(static_cast<unsigned>(opt.nu));
  const CurveVerdict verdict = curve_case_conclusion(cs, opt.scan_bound, opt.jobs);
  const FactorCoprimality cop = factor_coprimality(cs);
  ojson factors = ojson::array();
  for (const auto& f : cs.factors) factors.push_back(f.to_string());
  ojson hits = ojson::array();
  for (const auto& h : verdict.target_hits) hits.push_back({{"k", h.k}, {"root", h.root.get_str()}});
  ojson doc{{"nu", opt.nu},
            {"full_poly", cs.full_poly.to_string()},
            {"factors", factors},
            {"factors_multiply_out", cs.factors_multiply_out()},
            {"resultant", cop.resultant.get_str()},
            {"values_coprime_to", cop.values_coprime ? ojson(cop.checked_to) : ojson(nullptr)},
            {"model", cs.transform.description},
            {"transform_identity", cs.transform_identity()},
            {"scan_bound", opt.scan_bound},
            {"target_hits", hits},
            {"verdict", verdict.verdict},
            {"caveat", verdict.caveat}};
  std::ostringstream text;
  text << "nu = " << opt.nu << ": c - k = " << cs.full_poly.to_string() << "\n";
  for (const auto& f : cs.factors) text << "  factor " << f.to_string() << "\n";
  text << "  product " << (cs.factors_multiply_out() ? "matches" : "DOES NOT match") << ", resultant "
       << cop.resultant << "\n  model: " << cs.transform.description << "\n  target square for k in {";
  for (std::size_t i = 0; i < verdict.target_hits.size(); ++i) text << (i ? ", " : "") << verdict.target_hits[i].k;
  text << "} up to " << opt.scan_bound << "\n  " << verdict.verdict << "\n  caveat: " << verdict.caveat << "\n";
  if (opt.nu == 6) {
    ojson pts = ojson::array();
    text << "  C6 points with |x| <= " << opt.scan_bound << ":";
    for (const auto& p : c6_point_scan(opt.scan_bound, opt.jobs)) {
      pts.push_back({p.x.get_str(), p.y.get_str()});
      text << " (" << p.x << ", " << p.y << ")";
    }
    text << "\n";
    doc["c6_points"] = pts;
  }
  emit(opt, doc, text.str());
  // Completeness above the scan bound is always imported.
  return kExitCaveat;
}

int cmd_brute(const Options& opt, std::int64_t c_bound, std::int64_t d_bound, bool no_shortcut) {
  BruteForceOptions bo;
  bo.jobs = opt.jobs;
  bo.short_circuit_mod4 = !no_shortcut;
  const BruteForceResult res = brute_force_quadruples(opt.k, c_bound, d_bound, bo);
  ojson list = ojson::array();
  std::ostringstream text;
  text << "k = " << opt.k << ", c <= " << c_bound << ", d <= " << d_bound << ": " << res.extensions.size()
       << " extension(s)\n";
  for (const auto& e : res.extensions) {
    list.push_back({e.c, e.d});
    text << "  (" << e.c << ", " << e.d << ")\n";
  }
  if (res.diagnostic) text << "  " << *res.diagnostic << "\n";
  ojson doc{{"k", opt.k}, {"c_bound", c_bound}, {"d_bound", d_bound}, {"extensions", list}};
  doc["diagnostic"] = res.diagnostic ? ojson(*res.diagnostic) : ojson(nullptr);
  emit(opt, doc, text.str());
  return kExitOk;
}

int cmd_report(const Options& opt, const std::string& input, std::uint64_t nu_max, bool k_given) {
  const ReportFormat format = opt.format == "json" ? ReportFormat::json : ReportFormat::text;
  if (!input.empty()) {
    std::string content;
    if (input == "-") {
      content.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(input);
      if (!in) throw UsageError("cannot read " + input);
      content.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::cout << render_report(content, format);
    return kExitOk;
  }
  PipelineConfig pc;
  pc.nu_max = nu_max;
  pc.jobs = opt.jobs;
  pc.precision_digits = opt.precision_digits;
  if (!opt.k_range.empty()) {
    std::tie(pc.k_from, pc.k_to) = parse_range(opt.k_range);
  } else if (k_given) {
    pc.k_from = pc.k_to = opt.k;
  } else {
    pc.k_from = 1;
    pc.k_to = 0;  // nothing selected: empty report
  }
  const auto certs = run_pipeline(pc);
  std::cout << (format == ReportFormat::json ? certificates_to_json(certs) : certificates_to_text(certs));
  return exit_status(certs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D(-k)-quadruple extension toolkit for the pair {k, k+1}"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  auto* k_opt = app.add_option("--k", opt.k, "The parameter k of the pair {k, k+1}");
  app.add_option("--k-range", opt.k_range, "Range of k as A..B");
  auto* nu_opt = app.add_option("--nu", opt.nu, "Index nu of the triple {k, k+1, c_nu} (maximum nu for report)");
  app.add_option("--scan-bound", opt.scan_bound, "Bound for exhaustive curve scans")->check(CLI::PositiveNumber);
  app.add_option("--precision-digits", opt.precision_digits, "Working precision in decimal digits (0: automatic)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--full-l-enumeration", opt.full_l_enumeration, "Reduce every l up to the proven l bound (hours)");

  std::string elements, n_text;
  auto* verify = app.add_subcommand("verify", "Check that a set is a D(n)-tuple");
  verify->add_option("--elements", elements, "Comma-separated elements")->required();
  verify->add_option("--n", n_text, "The shift n")->required();

  std::string d_text;
  bool classes = false;
  auto* pell = app.add_subcommand("pell", "Fundamental Pell solutions and solution classes");
  pell->add_option("--d", d_text, "Non-square discriminant D");
  pell->add_flag("--classes", classes, "List classes of z^2 - k0 c x^2 = c - k for c = c_nu");

  unsigned terms = 8;
  auto* sequences = app.add_subcommand("sequences", "The s, t, v and w recurrences for (k, nu)");
  sequences->add_option("--terms", terms, "Number of s terms to print");

  std::uint64_t n_max = 8;
  auto* bounds = app.add_subcommand("bounds", "Gap lemmas and the hypergeometric bound");
  bounds->add_option("--n-max", n_max, "Largest n for the gap check");

  auto* linform = app.add_subcommand("linform", "Matveev constants and the bound on n");

  bool nu1_family = false;
  std::int64_t l_cap = 10'000;
  auto* reduce = app.add_subcommand("reduce", "Baker-Davenport reduction to an exact scan");
  reduce->add_flag("--nu1-family", nu1_family, "Reduce the nu = 1 family k = l(3l +- 2)");
  reduce->add_option("--l-cap", l_cap, "Largest l reduced without --full-l-enumeration")->check(CLI::PositiveNumber);

  auto* curves = app.add_subcommand("curves", "Factorisations and integral-point scans for nu = 2..6");

  std::int64_t c_bound = 1000, d_bound = 1000;
  bool no_shortcut = false;
  auto* brute = app.add_subcommand("brute", "Exhaustive quadruple search");
  brute->add_option("--cbound", c_bound, "Largest c")->check(CLI::PositiveNumber);
  brute->add_option("--dbound", d_bound, "Largest d")->check(CLI::PositiveNumber);
  brute->add_flag("--no-mod4-shortcut", no_shortcut, "Search even when -k = 2 (mod 4)");

  std::string input;
  std::uint64_t report_nu = 9;
  auto* report = app.add_subcommand("report", "Run the pipeline (or render --input) as certificates");
  report->add_option("--input", input, "Certificate JSON to render ('-' for stdin)");
  report->add_option("--nu-max", report_nu, "Largest nu")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(opt, elements, n_text);
    if (*pell) return cmd_pell(opt, d_text, classes);
    if (*sequences) return cmd_sequences(opt, terms);
    if (*bounds) return cmd_bounds(opt, n_max);
    if (*linform) return cmd_linform(opt);
    if (*reduce) return cmd_reduce(opt, nu1_family, l_cap);
    if (*curves) return cmd_curves(opt);
    if (*brute) return cmd_brute(opt, c_bound, d_bound, no_shortcut);
    if (*report) return cmd_report(opt, input, nu_opt->count() > 0 ? opt.nu : report_nu, k_opt->count() > 0);
  } catch (const UsageError& err) {
    std::cerr << "dquad: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "dquad: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "dquad: " << err.what() << "\n";
    return kExitCaveat;
  }
  return kExitUsage;
}
