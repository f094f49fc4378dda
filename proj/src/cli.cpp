#include "thomcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "thomcalc/errors.hpp"
#include "thomcalc/multidegree.hpp"
#include "thomcalc/partitions.hpp"
#include "thomcalc/polynomial_io.hpp"
#include "thomcalc/positivity.hpp"
#include "thomcalc/random.hpp"
#include "thomcalc/relations.hpp"
#include "thomcalc/residue.hpp"
#include "thomcalc/thom.hpp"
#include "thomcalc/verify.hpp"

namespace thomcalc {

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Globals {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> qhat_files;

  bool as_json() const { return format == "json"; }
  QhatRegistry registry() const {
    QhatRegistry r = QhatRegistry::from_environment();
    for (const auto& f : qhat_files) r.load_file(f);
    return r;
  }
};

int cmd_tp(const Globals& g, int d, int j, const std::string& basis, int order, std::ostream& out) {
  const QhatRegistry reg = g.registry();
  ThomPolynomial tp = order > 0 ? thom_polynomial(d, j, reg, TruncationPolicy{order, 2})
                                : thom_polynomial(d, j, reg);
  const bool series = basis == "thom-series";
  const Polynomial body = series ? thom_series_view(tp) : tp.body;
  if (g.as_json()) {
    emit(out, {{"d", d}, {"codim", j}, {"basis", basis}, {"polynomial", to_json(body)}});
  } else {
    out << to_text(body, TextOptions{!series}) << "\n";
  }
  return 0;
}

int cmd_residue(const Globals& g, const std::string& path, int order, std::ostream& out) {
  ResidueProblem p = residue_problem_from_json(read_json(path));
  const int base = order > 0 ? order : suggested_order(p);
  Polynomial r = iterated_residue(p, TruncationPolicy{base, 2});
  if (g.as_json()) {
    emit(out, {{"order", base}, {"result", to_json(r)}});
  } else {
    out << to_text(r) << "\n";
  }
  return 0;
}

WeightedRing ring_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("weights") ? j["weights"] : j;
  if (!list.is_array()) throw ParseError("weights must be a JSON array of linear forms");
  WeightedRing ring;
  int i = 0;
  for (const auto& w : list) {
    ring.coords.push_back(Variable::y(++i));
    ring.weights.push_back(w.is_string() ? parse_linear_form(w.get<std::string>()) : linear_form_from_json(w));
  }
  return ring;
}

PolynomialIdeal ideal_from_json(const json& j) {
  PolynomialIdeal I;
  const json& gens = j.is_object() && j.contains("generators") ? j["generators"] : j;
  if (!gens.is_array()) throw ParseError("ideal must list its generators in a JSON array");
  for (const auto& p : gens) {
    I.generators.push_back(p.is_string() ? parse_polynomial(p.get<std::string>()) : polynomial_from_json(p));
  }
  if (j.is_object() && j.contains("order")) {
    for (const auto& v : j["order"]) I.order.push_back(parse_variable(v.get<std::string>()));
  }
  return I;
}

int cmd_mdeg(const Globals& g, const std::string& ideal_path, const std::string& weights_path, bool monomial_only,
             std::ostream& out) {
  const WeightedRing ring = ring_from_json(read_json(weights_path));
  const PolynomialIdeal I = ideal_from_json(read_json(ideal_path));
  Polynomial result;
  if (monomial_only) {
    std::vector<Monomial> gens;
    for (const auto& p : I.generators) {
      if (p.size() != 1 || p.terms().front().coeff != 1 || !p.is_polynomial()) {
        throw PreconditionError("--monomial-only needs monic monomial generators, got " + to_text(p));
      }
      gens.push_back(p.terms().front().mono);
    }
    result = multidegree_monomial(MonomialIdeal::from_monomials(ring, gens), ring);
  } else {
    result = multidegree(I, ring);
  }
  if (g.as_json()) {
    emit(out, {{"multidegree", to_json(result)}});
  } else {
    out << to_text(result) << "\n";
  }
  return 0;
}

int cmd_admissible(const Globals& g, int d, bool complete_only, std::ostream& out) {
  json arr = json::array();
  for (const auto& pi : enumerate_admissible(d)) {
    const bool complete = is_complete(pi);
    if (complete_only && !complete) continue;
    if (g.as_json()) {
      json seq = json::array();
      for (const auto& p : pi) seq.push_back(p.parts());
      arr.push_back({{"sequence", seq}, {"defect", defect(pi)}, {"complete", complete}});
    } else {
      out << to_string(pi) << "  defect " << defect(pi) << "  " << (complete ? "complete" : "incomplete") << "\n";
    }
  }
  if (g.as_json()) emit(out, arr);
  return 0;
}

int cmd_relations(const Globals& g, int d, std::ostream& out) {
  json arr = json::array();
  for (const auto& r : basic_relations(d)) {
    if (g.as_json()) {
      arr.push_back({{"i", r.i}, {"j", r.j}, {"m", r.m}, {"l", r.l}, {"toric", r.toric},
                     {"weight", to_json(r.weight)}, {"polynomial", to_json(r.poly)}});
    } else {
      out << "R(" << r.i << "," << r.j << "," << r.m << ";" << r.l << ")" << (r.toric ? " toric" : "")
          << "  weight " << to_text(r.weight) << "\n  " << to_text(r.poly) << "\n";
    }
  }
  if (g.as_json()) emit(out, arr);
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.registry = g.registry();
  VerifyReport r = run_verify(suite, opt);
  if (g.as_json()) {
    emit(out, to_json(r));
  } else {
    out << to_text(r);
  }
  return r.exit_code();
}

int cmd_positivity(const Globals& g, int d, int order, std::ostream& out) {
  PositivityReport r = positivity_expansion(d, order, g.registry());
  if (g.as_json()) {
    emit(out, {{"d", d},
               {"order", order},
               {"terms", r.terms},
               {"min_coeff", r.min_coeff.get_str()},
               {"witness", to_json(Polynomial(r.witness, 1))},
               {"nonnegative", r.nonnegative()}});
  } else {
    out << "d " << d << ", order " << order << ": " << r.terms << " terms, minimum coefficient " << r.min_coeff
        << " at " << to_text(r.witness) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thom polynomial calculator: iterated residues, localization sums, multidegrees", "thomcalc"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for randomized checks; 0 draws one from the system");
  app.add_option("--qhat-file", g.qhat_files, "Register a Qhat plugin (polynomial JSON)")->check(CLI::ExistingFile);

  int d = 0, j = 0, order = 0;
  std::string basis = "chern", path, weights, suite = "all";
  bool flag = false;

  auto* tp = app.add_subcommand("tp", "Thom polynomial of A_d in codimension j");
  tp->add_option("--d", d, "Singularity index")->required()->check(CLI::Range(1, 64));
  tp->add_option("--codim", j, "Codimension offset j = k - n")->required()->check(CLI::NonNegativeNumber);
  tp->add_option("--basis", basis, "chern or thom-series")->check(CLI::IsMember({"chern", "thom-series"}));
  tp->add_option("--order", order, "Base truncation order (default: automatic)")->check(CLI::PositiveNumber);

  auto* res = app.add_subcommand("residue", "Iterated residue of a problem file");
  res->add_option("--problem", path, "ResidueProblem JSON")->required()->check(CLI::ExistingFile);
  res->add_option("--order", order, "Base truncation order (default: automatic)")->check(CLI::PositiveNumber);

  auto* md = app.add_subcommand("mdeg", "Multidegree of a weight-homogeneous ideal");
  md->add_option("--ideal", path, "Ideal JSON")->required()->check(CLI::ExistingFile);
  md->add_option("--weights", weights, "Weights JSON")->required()->check(CLI::ExistingFile);
  md->add_flag("--monomial-only", flag, "Generators are monomials; skip Groebner");

  auto* parts = app.add_subcommand("partitions", "Admissible sequences and basic relations");
  parts->require_subcommand(1);
  auto* adm = parts->add_subcommand("admissible", "Enumerate admissible sequences");
  adm->add_option("--d", d, "Length")->required()->check(CLI::Range(1, 8));
  adm->add_flag("--complete-only", flag, "Only complete sequences");
  auto* rel = parts->add_subcommand("relations", "Basic relations in degree d");
  rel->add_option("--d", d, "Degree")->required()->check(CLI::Range(1, 12));

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify_suites()));

  auto* pos = app.add_subcommand("positivity", "Coefficient signs of the residue integrand expansion");
  pos->add_option("--d", d, "Singularity index")->required()->check(CLI::Range(1, 64));
  pos->add_option("--order", order, "Total ratio order")->required()->check(CLI::NonNegativeNumber);

  for (auto* sub : {tp, res, md, parts, ver, pos}) sub->fallthrough();
  for (auto* sub : {adm, rel}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  g.seed = resolve_seed(seed);

  try {
    if (*tp) return cmd_tp(g, d, j, basis, order, out);
    if (*res) return cmd_residue(g, path, order, out);
    if (*md) return cmd_mdeg(g, path, weights, flag, out);
    if (*adm) return cmd_admissible(g, d, flag, out);
    if (*rel) return cmd_relations(g, d, out);
    if (*ver) return cmd_verify(g, suite, out);
    if (*pos) return cmd_positivity(g, d, order, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace thomcalc
