#include "discknot/cli.hpp"

#include "discknot/parse.hpp"
#include "discknot/presenter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef DISCKNOT_VERSION
#define DISCKNOT_VERSION "0.0.0"
#endif

namespace discknot::cli {

using json = nlohmann::ordered_json;
using namespace discknot::pipeline;

const char* tool_version() { return DISCKNOT_VERSION; }

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string format = "text";
  std::string out_file;
  int jobs = 1;

  std::string P, Q, family, unit;
  int k = 0, i = 0, nu = 0, m = 0;

  std::string s = "0";
  bool no_q = false;
  bool numeric = false;
  int extra = 4;
  int retries = 3;

  std::string nu_range;
  std::string s_samples = "0,1/10,1/100";
  std::string report_dir = ".";

  std::string syntax = "plain";
  std::string quotient;
  std::size_t cap = 1'000'000;
};

struct Outcome {
  json inputs = json::object();
  json results = json::object();
  std::string status = "ok";
  int exit_code = kSuccess;
  std::string text;
};

json valuation_json(const Valuation& v) { return v.is_finite() ? json(v.value()) : json("inf"); }

std::string coeff_text(const puiseux::QuotientElem& e) { return to_string(e.value()); }

json series_json(const PuiseuxSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exponent", to_string(e)}, {"coeff", coeff_text(c)}});
  return {{"terms", terms}, {"precision", s.precision() ? json(to_string(*s.precision())) : json(nullptr)}};
}

std::string series_text(const PuiseuxSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_text(c) + ")";
    if (e != 0) out += "*t^" + to_string(e);
  }
  if (s.precision()) out += (out.empty() ? "" : " + ") + std::string("O(t^") + to_string(*s.precision()) + ")";
  return out.empty() ? "0" : out;
}

std::string case_text(const CaseLabel& c) {
  std::string s(1, static_cast<char>(c.kind));
  if (c.e) s += " (e = " + std::to_string(*c.e);
  if (c.rho) s += ", rho = " + std::to_string(*c.rho);
  if (c.e) s += ")";
  return s;
}

json case_json(const CaseLabel& c) {
  return {{"kind", std::string(1, static_cast<char>(c.kind))},
          {"e", c.e ? json(*c.e) : json(nullptr)},
          {"rho", c.rho ? json(*c.rho) : json(nullptr)}};
}

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(to_string(r));
  return a;
}

json report_to_json(const DiscriminantReport& r) {
  json j;
  j["nu"] = r.nu;
  j["m"] = r.m;
  j["s"] = to_string(r.s);
  j["q_modified"] = r.q_modified;
  j["p"] = r.p;
  j["q"] = r.q;
  j["mu"] = valuation_json(r.invariants.mu);
  j["sigma"] = valuation_json(r.invariants.sigma);
  j["case"] = case_json(r.case_label);
  j["curve"] = to_string(r.curve);
  j["polygon"] = {{"x_pow", r.polygon.x_pow}, {"hull_vertices", r.polygon.hull_vertices}};
  j["faces"] = json::array();
  for (const auto& f : r.faces)
    j["faces"].push_back({{"from", f.from},
                          {"to", f.to},
                          {"lambda", to_string(f.lambda)},
                          {"ramification", f.ramification},
                          {"face_poly", to_string(f.face_poly)}});
  j["branch_count"] = branch_count(r);
  j["branches"] = json::array();
  for (const auto& b : r.branches) {
    json jb{{"zero_branch", b.is_zero_branch}, {"multiplicity", b.multiplicity}};
    if (!b.is_zero_branch) {
      jb["lambda"] = to_string(b.lambda());
      jb["ramification"] = b.ramification;
      jb["conjugacy_size"] = b.conjugacy_size;
      jb["ring"] = to_string(b.ring()->phi());
      jb["x"] = series_json(b.x);
    }
    j["branches"].push_back(jb);
  }
  j["pprime"] = json::array();
  for (const auto& c : r.pprime)
    j["pprime"].push_back(
        {{"nonzero", c.nonzero}, {"leading_exponent", to_string(c.leading_exponent)}, {"leading_coeff", c.leading_coeff}});
  j["ubranches"] = json::array();
  for (const auto& u : r.ubranches)
    j["ubranches"].push_back({{"lambda", to_string(u.source.lambda())},
                              {"leading_exponent", u.leading_exponent ? json(to_string(*u.leading_exponent)) : json(nullptr)},
                              {"denominator", u.denominator.get_str()},
                              {"denominator_certified", u.denominator_certified},
                              {"essential_exponents", rats_json(u.essential_exponents)},
                              {"u", series_json(u.u)}});
  const Reducedness& red = r.reducedness;
  json sep = json::array();
  for (const auto& steps : red.separation) {
    json a = json::array();
    for (const auto& st : steps) a.push_back({{"exponent", to_string(st.exponent)}, {"dimension", st.dimension}});
    sep.push_back(a);
  }
  j["reducedness"] = {{"verdict", to_string(red.verdict)},
                      {"distinct_values", red.distinct_values},
                      {"separation", sep},
                      {"accounting_lhs", red.accounting_lhs},
                      {"mu", red.mu},
                      {"reason", red.reason}};
  j["retries_used"] = r.retries_used;
  j["notes"] = r.notes;
  return j;
}

AnalysisOptions analysis_options(const RunConfig& c) {
  AnalysisOptions o;
  o.initial_extra = c.extra;
  o.max_retries = c.retries;
  return o;
}

Rat parse_rat_arg(const std::string& text, const char* what) {
  try {
    return parse_rat(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad rational for ") + what + ": '" + text + "'");
  }
}

std::vector<Rat> parse_samples(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat_arg(item, "--s-samples"));
  if (out.empty()) throw UsageError("--s-samples is empty");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (lo < 1 || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad --nu-range '" + text + "', expected a..b with 1 <= a <= b");
  }
}

invariants::UnitSeries unit_series(const RunConfig& c) {
  invariants::UnitSeries a;
  if (!c.unit.empty()) a.terms = parse_unipoly(c.unit);
  return a;
}

Outcome cmd_invariants(const RunConfig& c) {
  Outcome o;
  const bool from_family = !c.family.empty();
  if (from_family == (!c.P.empty() || !c.Q.empty()))
    throw UsageError("give either --P/--Q or --family");
  invariants::GermPQ g{UniPoly(), UniPoly()};
  if (from_family) {
    o.inputs["family"] = c.family;
    if (c.family == "Jki") {
      o.inputs["k"] = c.k;
      o.inputs["i"] = c.i;
      g = invariants::normal_form(invariants::Jki{c.k, c.i, unit_series(c)});
    } else if (c.family == "E6k1") {
      o.inputs["k"] = c.k;
      g = invariants::normal_form(invariants::E6k1{c.k, unit_series(c)});
    } else {
      o.inputs["nu"] = c.nu;
      g = invariants::normal_form(invariants::BrieskornPham{c.nu});
    }
    if (!c.unit.empty()) o.inputs["unit"] = c.unit;
  } else {
    o.inputs["P"] = c.P.empty() ? "0" : c.P;
    o.inputs["Q"] = c.Q.empty() ? "0" : c.Q;
    g = invariants::GermPQ(parse_unipoly(c.P.empty() ? "0" : c.P), parse_unipoly(c.Q.empty() ? "0" : c.Q));
  }
  const invariants::InvariantPair inv = invariants::invariants(g);
  const Valuation oracle = invariants::milnor_oracle(g);
  const bool agrees = oracle == inv.mu;
  o.results = {{"P", to_string(g.P())},
               {"Q", to_string(g.Q())},
               {"mu", valuation_json(inv.mu)},
               {"sigma", valuation_json(inv.sigma)},
               {"oracle_mu", valuation_json(oracle)},
               {"oracle_agrees", agrees}};
  if (!agrees) {
    o.status = "fail";
    o.exit_code = kVerificationFailure;
  }
  std::ostringstream t;
  t << "P = " << to_string(g.P()) << "\nQ = " << to_string(g.Q()) << "\nmu = " << inv.mu << "\nsigma = " << inv.sigma
    << "\noracle: " << (agrees ? "agrees" : "DISAGREES") << " (mu = " << oracle << ")\n";
  o.text = t.str();
  return o;
}

Outcome cmd_branches(const RunConfig& c) {
  Outcome o;
  const int m = c.m > 0 ? c.m : c.nu;
  const Rat s = parse_rat_arg(c.s, "--s");
  o.inputs = {{"nu", c.nu}, {"m", m}, {"s", to_string(s)}, {"q_modified", !c.no_q}, {"extra", c.extra}, {"retries", c.retries}};
  const PerturbationFamily fam = select_perturbation(c.nu, m, !c.no_q);
  const DiscriminantReport r = analyze(fam, s, analysis_options(c));
  o.results["report"] = report_to_json(r);

  std::ostringstream t;
  t << "nu = " << r.nu << ", m = " << r.m << ", s = " << to_string(r.s) << ", case " << case_text(r.case_label) << "\n";
  t << "p = " << r.p << ", q = " << r.q << (r.q_modified ? "" : " (unmodified)") << "\n";
  t << "mu = " << r.invariants.mu << ", sigma = " << r.invariants.sigma << "\n";
  t << "curve: " << to_string(r.curve) << "\n";
  t << "Newton polygon (x^" << r.polygon.x_pow << " factored):";
  for (const auto& [j, i] : r.polygon.hull_vertices) t << " (" << j << "," << i << ")";
  t << "\nfaces:\n";
  for (const auto& f : r.faces)
    t << "  lambda = " << to_string(f.lambda) << ", ramification " << f.ramification << ", face polynomial "
      << to_string(f.face_poly) << "\n";
  t << "branches: " << branch_count(r) << "\n";
  for (std::size_t k = 0; k < r.branches.size(); ++k) {
    const auto& b = r.branches[k];
    if (b.is_zero_branch) {
      t << "  [" << k << "] x = 0, multiplicity " << b.multiplicity << "\n";
    } else {
      t << "  [" << k << "] " << b.conjugacy_size << " conjugate branch(es) over " << to_string(b.ring()->phi())
        << " = 0: x = " << series_text(b.x) << "\n";
    }
  }
  t << "u-branches:\n";
  for (const auto& u : r.ubranches) {
    t << "  lambda " << to_string(u.source.lambda()) << ": u = " << series_text(u.u) << "\n";
    t << "    leading exponent "
      << (u.leading_exponent ? to_string(*u.leading_exponent) : std::string("none (u = 0)")) << ", denominator "
      << u.denominator.get_str() << (u.denominator_certified ? "" : " (not certified)") << ", essential exponents";
    for (const Rat& e : u.essential_exponents) t << " " << to_string(e);
    t << "\n";
  }
  t << "reducedness: " << to_string(r.reducedness.verdict) << ", accounting 1 + sum = " << r.reducedness.accounting_lhs
    << " vs mu = " << r.reducedness.mu << "\n";
  if (!r.reducedness.reason.empty()) t << "  " << r.reducedness.reason << "\n";
  for (const auto& n : r.notes) t << "note: " << n << "\n";

  if (c.numeric) {
    json diags = json::array();
    const Unfolding unf = fam.at(s);
    t << "numeric check (diagnostic):\n";
    for (const auto& u : r.ubranches) {
      if (u.source.is_zero_branch) continue;
      const NumericDiagnostic d = numeric_validate(unf, u);
      diags.push_back({{"lambda", to_string(d.lambda)},
                       {"u_exponent", d.u_exponent ? json(to_string(*d.u_exponent)) : json(nullptr)},
                       {"worst_x_error", d.worst_x_error},
                       {"worst_u_error", d.worst_u_error},
                       {"within_tolerance", d.within_tolerance},
                       {"failure", d.failure}});
      t << "  lambda " << to_string(d.lambda) << ": worst relative slope error x " << d.worst_x_error << ", u "
        << d.worst_u_error << (d.within_tolerance ? " (ok)" : " (WARNING: outside 2%)") << "\n";
    }
    o.results["numeric"] = diags;
  }

  if (r.reducedness.verdict == Verdict::Inconclusive) {
    o.status = "inconclusive";
    o.exit_code = kInconclusive;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_verify(const RunConfig& c) {
  Outcome o;
  const auto [lo, hi] = parse_range(c.nu_range);
  const std::vector<Rat> samples = parse_samples(c.s_samples);
  o.inputs = {{"nu_range", std::to_string(lo) + ".." + std::to_string(hi)},
              {"s_samples", rats_json(samples)},
              {"q_modified", !c.no_q},
              {"extra", c.extra},
              {"retries", c.retries}};

  std::vector<std::pair<int, int>> work;
  for (int nu = lo; nu <= hi; ++nu)
    for (int m : admissible_m(nu)) work.emplace_back(nu, m);

  std::vector<Prop34Report> reports(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  const AnalysisOptions opts = analysis_options(c);
  auto worker = [&] {
    for (std::size_t k; (k = next++) < work.size();) {
      try {
        reports[k] = verify_prop34(work[k].first, work[k].second, samples, !c.no_q, opts);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned jobs = c.jobs > 0 ? static_cast<unsigned>(c.jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(jobs, work.size()); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::ostringstream t;
  t << "nu   m  case  mu (per s)        sigma (per s)     result\n";
  int passed = 0, failed = 0, inconclusive = 0;
  json rows = json::array();
  json counterexamples = json::array();
  for (const Prop34Report& rep : reports) {
    json mus = json::array(), sigmas = json::array();
    std::string mu_text, sigma_text;
    for (const auto& run : rep.runs) {
      mus.push_back(valuation_json(run.invariants.mu));
      sigmas.push_back(valuation_json(run.invariants.sigma));
      mu_text += (mu_text.empty() ? "" : ",") + run.invariants.mu.to_string();
      sigma_text += (sigma_text.empty() ? "" : ",") + run.invariants.sigma.to_string();
    }
    std::string result = rep.passed() ? "pass" : rep.inconclusive ? "inconclusive" : "fail";
    (rep.passed() ? passed : rep.inconclusive ? inconclusive : failed)++;
    json row{{"nu", rep.nu},
             {"m", rep.m},
             {"case", case_json(rep.runs.front().case_label)},
             {"mu", mus},
             {"sigma", sigmas},
             {"mu_constant", rep.mu_constant},
             {"reduced_and_constant", rep.reduced_and_constant},
             {"sigma_transition", rep.sigma_transition},
             {"result", result}};
    if (!rep.passed()) {
      const std::filesystem::path path = std::filesystem::path(c.report_dir) /
                                         ("counterexample_nu" + std::to_string(rep.nu) + "_m" + std::to_string(rep.m) + ".json");
      json runs = json::array();
      for (const auto& run : rep.runs) runs.push_back(report_to_json(run));
      std::ofstream f(path);
      f << runs.dump(2) << "\n";
      row["report_path"] = path.string();
      counterexamples.push_back(path.string());
    }
    rows.push_back(row);
    char line[160];
    std::snprintf(line, sizeof line, "%-4d %-3d %-5c %-17s %-17s %s", rep.nu, rep.m,
                  static_cast<char>(rep.runs.front().case_label.kind), mu_text.c_str(), sigma_text.c_str(), result.c_str());
    t << line << (row.contains("report_path") ? "  (" + row["report_path"].get<std::string>() + ")" : "") << "\n";
  }
  o.results = {{"runs", rows},
               {"summary", {{"pairs", reports.size()}, {"passed", passed}, {"failed", failed}, {"inconclusive", inconclusive}}},
               {"counterexamples", counterexamples},
               {"equivalence_note",
                "branch data equality across s (counts, exponents, denominators, separation) is the surrogate for "
                "topological equivalence"}};
  t << reports.size() << " (nu, m) pairs x " << samples.size() << " s-samples: " << passed << " passed, " << failed
    << " failed, " << inconclusive << " inconclusive\n";
  if (failed > 0) {
    o.status = "fail";
    o.exit_code = kVerificationFailure;
  } else if (inconclusive > 0) {
    o.status = "inconclusive";
    o.exit_code = kInconclusive;
  } else {
    o.status = "pass";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_present(const RunConfig& c) {
  using namespace discknot::presenter;
  Outcome o;
  o.inputs = {{"nu", c.nu}, {"syntax", c.syntax}};
  if (!c.quotient.empty()) {
    o.inputs["quotient"] = c.quotient;
    o.inputs["cap"] = c.cap;
  }
  const DynkinDiagram d = bp_diagram(c.nu);
  const GroupPresentation p = presentation(d);
  const RelatorCensus cen = census(p);
  const Abelianization ab = abelianization(p);

  json vertices = json::array(), edges = json::array();
  for (std::size_t v = 0; v < d.vertices.size(); ++v) vertices.push_back(d.label(static_cast<int>(v)));
  for (const auto& [a, b] : d.edges) edges.push_back({d.label(a), d.label(b)});
  json torsion = json::array();
  for (const Int& t : ab.torsion) torsion.push_back(t.get_str());
  o.results = {{"diagram", {{"vertices", vertices}, {"edges", edges}}},
               {"presentation", json::parse(export_presentation(p, "json"))},
               {"census", {{"commute", cen.commute}, {"braid", cen.braid}, {"triangle", cen.triangle}}},
               {"abelianization", {{"rank", ab.rank}, {"torsion", torsion}}}};

  std::ostringstream t;
  t << export_presentation(p, c.syntax);
  if (c.syntax == "plain") t << "\n";
  t << "relators: " << cen.commute << " commute, " << cen.braid << " braid, " << cen.triangle << " triangle\n";
  t << "abelianization: Z^" << ab.rank;
  for (const Int& x : ab.torsion) t << " + Z/" << x.get_str();
  t << "\n";

  if (!c.quotient.empty()) {
    const CosetTable table = todd_coxeter(p, squares(p), {}, c.cap);
    o.results["quotient"] = {{"relators", c.quotient},
                             {"complete", table.complete},
                             {"order", table.complete ? json(table.cosets) : json(nullptr)},
                             {"cosets_defined", table.max_cosets_defined}};
    if (table.complete) {
      t << "quotient by squares: order " << table.cosets << "\n";
    } else {
      t << "quotient by squares: coset cap " << c.cap << " exceeded\n";
      o.status = "cap_exceeded";
    }
  }
  o.text = t.str();
  return o;
}

void add_analysis_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--extra", c.extra, "extra precision past the leading u-exponent, in units of 1/ramification")
      ->check(CLI::Range(1, 1000));
  sub->add_option("--retries", c.retries, "precision doublings before giving up")->check(CLI::Range(0, 10));
  sub->add_flag("--no-q", c.no_q, "keep q = 0 (negative control)");
}

}  // namespace

std::string report_json(const DiscriminantReport& r, int indent) { return report_to_json(r).dump(indent); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Discriminant curves and knot groups of y^3 - P(x) y + Q(x)", "discknot"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", c.out_file, "write the report to FILE instead of stdout");
  app.add_option("--jobs", c.jobs, "parallel runs in verify (0 = all cores)")->check(CLI::Range(0, 1024));

  auto* inv = app.add_subcommand("invariants", "Milnor number and sigma of a germ");
  inv->add_option("--P", c.P, "P(x)");
  inv->add_option("--Q", c.Q, "Q(x)");
  inv->add_option("--family", c.family, "normal form family")->check(CLI::IsMember({"Jki", "E6k1", "BP"}));
  inv->add_option("--k", c.k, "family parameter k");
  inv->add_option("--i", c.i, "family parameter i (Jki)");
  inv->add_option("--nu", c.nu, "family parameter nu (BP)");
  inv->add_option("--unit", c.unit, "unit a(x) for Jki/E6k1, default 1");

  auto* br = app.add_subcommand("branches", "Puiseux analysis of one unfolding");
  br->add_option("--nu", c.nu, "nu")->required()->check(CLI::Range(1, 1000));
  br->add_option("--m", c.m, "perturbation exponent m (default nu)")->check(CLI::Range(1, 1000));
  br->add_option("--s", c.s, "value of s, a rational");
  br->add_flag("--numeric", c.numeric, "append the floating-point slope check");
  add_analysis_flags(br, c);

  auto* ver = app.add_subcommand("verify", "sweep over nu and admissible m");
  ver->add_option("--nu-range", c.nu_range, "a..b")->required();
  ver->add_option("--s-samples", c.s_samples, "comma-separated rationals");
  ver->add_option("--report-dir", c.report_dir, "where counterexample reports are written");
  add_analysis_flags(ver, c);

  auto* pr = app.add_subcommand("present", "knot group presentation");
  pr->add_option("--nu", c.nu, "nu")->required()->check(CLI::Range(1, 1000));
  pr->add_option("--syntax", c.syntax, "text syntax of the presentation")->check(CLI::IsMember({"plain", "gap"}));
  pr->add_option("--quotient", c.quotient, "enumerate a finite quotient")->check(CLI::IsMember({"squares"}));
  pr->add_option("--cap", c.cap, "coset cap")->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  Outcome o;
  try {
    if (c.subcommand == "invariants") o = cmd_invariants(c);
    else if (c.subcommand == "branches") o = cmd_branches(c);
    else if (c.subcommand == "verify") o = cmd_verify(c);
    else o = cmd_present(c);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconclusive;
  }

  std::string body;
  if (c.format == "json") {
    json env{{"tool_version", tool_version()},
             {"subcommand", c.subcommand},
             {"inputs", o.inputs},
             {"results", o.results},
             {"status", o.status}};
    body = env.dump(2) + "\n";
  } else {
    body = o.text;
  }
  if (c.out_file.empty()) {
    out << body;
  } else {
    std::ofstream f(c.out_file);
    if (!f) {
      err << "error: cannot write " << c.out_file << "\n";
      return kUsageError;
    }
    f << body;
  }
  return o.exit_code;
}

}  // namespace discknot::cli
