#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/fodc.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/pairing.hpp"
#include "cmhopf/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cmhopf;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string lambda_text;  // comma-separated list; empty means the defaults
  std::optional<int> N;
  int grade_bound = 4;
  std::string format = "text";
  unsigned seed = 1;
  int samples = 120;
  int degree = 3;
  std::string algebra;
};

std::vector<Q> parse_lambdas(const std::string& text) {
  std::vector<Q> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

Q single_lambda(const Options& o) {
  auto ls = parse_lambdas(o.lambda_text);
  if (ls.size() > 1) throw std::invalid_argument("this command takes a single --lambda");
  return ls.empty() ? Q(1) : ls[0];
}

// Tag text overridden by --lambda / --N when given.
AlgebraTag tag_of(const std::string& text, const Options& o) {
  AlgebraTag t = parse_tag(text);
  if (!o.lambda_text.empty()) t.lambda = single_lambda(o);
  if (o.N) t.N = *o.N;
  return t;
}

SuiteConfig config_of(const Options& o) {
  SuiteConfig c;
  c.lambdas = parse_lambdas(o.lambda_text);
  if (o.N) c.N = *o.N;
  c.grade_bound = o.grade_bound;
  c.seed = o.seed;
  c.samples = o.samples;
  if (!o.algebra.empty()) c.algebra = tag_of(o.algebra, o);
  return c;
}

int emit_value(const Options& o, const std::string& command, const std::string& input, const std::string& value) {
  if (o.format == "json") {
    ojson j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int emit_report(const Options& o, Report rep, const ojson& extra = ojson()) {
  rep.sort();
  if (o.format == "json") {
    ojson j = ojson::parse(rep.json());
    if (!extra.is_null()) j["result"] = extra;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.text();
  }
  return rep.ok() ? 0 : 1;
}

PairingPtr pairing_for(const AlgebraTag& a, const AlgebraTag& b) {
  auto make = [](const AlgebraTag& u, const AlgebraTag& f) -> PairingPtr {
    if (u.family == Family::Ud0 && f.family == Family::FD0) return pairing_ud0_fd0(build(u), build(f));
    if (u.family == Family::Ubplus && f.family == Family::FBplus) return pairing_ubplus_fbplus(build(u), build(f));
    if (u.family == Family::UCM && f.family == Family::HCM) return pairing_ucm_hcm(build(u), build(f));
    if (u.family == Family::UHeis && f.family == Family::KHeis) return pairing_uheis_kheis(build(u), build(f));
    return nullptr;
  };
  if (auto p = make(a, b)) return p;
  if (auto p = make(b, a)) return p;
  throw std::invalid_argument("no pairing between " + tag_name(a) + " and " + tag_name(b));
}

int run_pair(const Options& o, const std::string& left, const std::string& right, const std::string& u,
             const std::string& w) {
  PairingPtr P = pairing_for(tag_of(left, o), tag_of(right, o));
  // The first expression goes on whichever side it belongs to.
  NCPoly a, x;
  try {
    a = parse_poly(u, P->left.get());
    x = parse_poly(w, P->right.get());
  } catch (const std::exception&) {
    a = parse_poly(w, P->left.get());
    x = parse_poly(u, P->right.get());
  }
  return emit_value(o, "pair", "<" + u + ", " + w + ">", qstr(P->pair(a, x)));
}

int run_classify(const Options& o, const std::string& name) {
  const Q lambda = single_lambda(o);
  ClassifySpec spec = scenario(name, lambda, o.degree);
  ClassifyResult r = classify(spec);
  Report rep;
  const std::string suite = "classify:" + name;
  int k = 0;
  for (const FODC& F : r.solutions) {
    const std::string s = suite + ":solution" + std::to_string(++k);
    rep.merge(check_fodc_consistency(F, s + ":consistency"));
    for (const FormCoaction& C : spec.coactions) rep.merge(check_covariance(F, C, s + ":covariance:" + C.name));
  }
  for (Check& c : rep.checks) c.tag = tags::fodc;
  std::ostringstream counts;
  counts << r.unknowns << " unknowns, " << r.linear_equations << " linear and " << r.nonlinear_equations
         << " nonlinear equations, " << r.free_after_linear << " free after the linear stage"
         << (r.linear_inconsistent ? ", linear system inconsistent" : "");
  rep.pass(suite, "system", counts.str(), tags::fodc);

  ojson res;
  res["scenario"] = name;
  res["lambda"] = qstr(lambda);
  res["degree"] = o.degree;
  res["linear_inconsistent"] = r.linear_inconsistent;
  res["solutions"] = ojson::array();
  for (const FODC& F : r.solutions) res["solutions"].push_back(render_table(F));
  res["families"] = r.families;
  res["irrational"] = r.irrational;
  res["non_surjective"] = r.non_surjective;
  if (o.format != "json") {
    std::cout << "scenario " << name << " at lambda = " << qstr(lambda) << ", ansatz degree " << o.degree << "\n";
    std::cout << counts.str() << "\n";
    int i = 0;
    for (const FODC& F : r.solutions) std::cout << "solution " << ++i << ":\n" << render_table(F) << "\n";
    i = 0;
    for (const std::string& f : r.families) std::cout << "family " << ++i << ":\n" << f << "\n";
    for (const std::string& f : r.irrational) std::cout << "irrational:\n" << f << "\n";
    for (const std::string& f : r.non_surjective) std::cout << "bimodule without theta in A dA:\n" << f << "\n";
    if (r.empty()) std::cout << "no calculus\n";
  }
  return emit_report(o, rep, res);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic workbench for the Connes-Moscovici Hopf algebra family"};
  app.require_subcommand(1);
  Options o;
  int n_value = 0;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--lambda", o.lambda_text, "deformation parameter(s), comma-separated rationals");
    c->add_option("--N", n_value, "truncation bound")->check(CLI::Range(2, 64));
    c->add_option("--grade-bound", o.grade_bound, "grade bound for exhaustive checks")->check(CLI::Range(0, 8));
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--seed", o.seed, "seed for randomized samples");
    c->add_option("--algebra", o.algebra, "algebra tag, e.g. HCM(1/2)[N=8]");
  };

  std::string alg, expr, left, right, u, w, group, scen, what;
  auto* nf = app.add_subcommand("normal-form", "normal form of an expression");
  nf->add_option("tag", alg, "algebra tag, e.g. HCM or KHeis(1/2)")->required();
  nf->add_option("expr", expr)->required();
  auto* cop = app.add_subcommand("coproduct", "coproduct of an expression");
  cop->add_option("tag", alg, "algebra tag, e.g. HCM or KHeis(1/2)")->required();
  cop->add_option("expr", expr)->required();
  auto* ant = app.add_subcommand("antipode", "antipode of an expression");
  ant->add_option("tag", alg, "algebra tag, e.g. HCM or KHeis(1/2)")->required();
  ant->add_option("expr", expr)->required();
  auto* pr = app.add_subcommand("pair", "evaluate the dual pairing");
  pr->add_option("left", left)->required();
  pr->add_option("right", right)->required();
  pr->add_option("u", u)->required();
  pr->add_option("w", w)->required();
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", group)->required()->check(CLI::IsMember(verify_group_names()));
  ver->add_option("--samples", o.samples, "group-level samples for sl2")->check(CLI::Range(1, 100000));
  auto* cls = app.add_subcommand("classify-fodc", "classify covariant first-order calculi");
  cls->add_option("scenario", scen)->required()->check(CLI::IsMember(scenario_names()));
  cls->add_option("--degree", o.degree, "ansatz degree")->check(CLI::Range(1, 6));
  auto* rep = app.add_subcommand("report", "run every suite");
  rep->add_option("what", what)->required()->check(CLI::IsMember({"all"}));
  for (CLI::App* c : {nf, cop, ant, pr, ver, cls, rep}) add_common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  for (CLI::App* c : {nf, cop, ant, pr, ver, cls, rep})
    if (c->parsed() && c->count("--N")) o.N = n_value;

  try {
    if (nf->parsed() || cop->parsed() || ant->parsed()) {
      AlgebraPtr A = build(tag_of(alg, o));
      NCPoly x = parse_poly(expr, A.get());
      if (nf->parsed()) return emit_value(o, "normal-form", expr, render(x));
      if (cop->parsed()) return emit_value(o, "coproduct", expr, render(coproduct(*A, x)));
      return emit_value(o, "antipode", expr, render(antipode(*A, x)));
    }
    if (pr->parsed()) return run_pair(o, left, right, u, w);
    if (ver->parsed()) return emit_report(o, run_verify_group(group, config_of(o)));
    if (cls->parsed()) return run_classify(o, scen);
    if (rep->parsed()) return emit_report(o, suite_all(config_of(o)));
  } catch (const TruncationOverflow& e) {
    std::cerr << "skip: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
