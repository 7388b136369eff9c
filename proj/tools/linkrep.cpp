#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "linkrep/analysis.hpp"
#include "linkrep/families.hpp"
#include "linkrep/freegroup.hpp"
#include "linkrep/jsonio.hpp"

namespace {

using namespace linkrep;

struct DiagramInput {
  std::string pd;    // inline PD text or @file
  std::string name;  // family/named-link name
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(Err::BadArgument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string text_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

LinkDiagram load_diagram(const DiagramInput& in) {
  if (!in.name.empty()) return named(in.name);
  if (!in.pd.empty()) return parse_pd(text_arg(in.pd));
  throw InputError(Err::BadArgument, "no diagram given (use --pd or --name)");
}

void add_diagram_opts(CLI::App* cmd, DiagramInput& in) {
  cmd->add_option("--pd", in.pd, "PD code, inline or @file");
  cmd->add_option("--name", in.name, "named link or family, e.g. L5m3 or Luv(5,-3)");
}

void emit(bool json, const Json& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string graph_text(const SimpleGraph& g) {
  std::ostringstream ss;
  ss << g.n << " vertices;";
  ss << " edges:";
  if (g.edges.empty()) ss << " (none)";
  for (auto& [a, b] : g.edges) ss << " " << a << "-" << b;
  return ss.str();
}

std::string verdict_text(const GraphVerdict& v) {
  std::ostringstream ss;
  switch (v.kind) {
    case GraphClassKind::Tree:
      ss << "forest (no cycle)";
      break;
    case GraphClassKind::InducedCycle: {
      ss << "induced cycle of length " << v.cycle.size() << ":";
      for (int x : v.cycle) ss << " " << x;
      break;
    }
    case GraphClassKind::InducedG0: {
      ss << "induced two-squares-sharing-an-edge subgraph on:";
      for (int x : v.g0_vertices) ss << " " << x;
      break;
    }
    case GraphClassKind::Coloring: {
      ss << "coloring:";
      for (auto& q : v.coloring) ss << " " << q.to_string();
      break;
    }
  }
  return ss.str();
}

std::string rep_text(const MeridianTracelessRep& rep) {
  std::ostringstream ss;
  for (size_t i = 0; i < rep.arc_values.size(); ++i)
    ss << "arc " << i << ": " << rep.arc_values[i].to_string() << "\n";
  ss << "irreducible: " << (rep.irreducible ? "yes" : "no")
     << "  verified: " << (rep.verified ? "yes" : "no") << "\n";
  return ss.str();
}

std::string cert_text(const CertificateSearchResult& res) {
  std::ostringstream ss;
  ss << "outcome: ";
  switch (res.outcome) {
    case SearchOutcome::Found: ss << "found"; break;
    case SearchOutcome::ExhaustedSearchSpace: ss << "exhausted search space"; break;
    case SearchOutcome::BudgetExhausted: ss << "budget exhausted"; break;
  }
  ss << "  nodes: " << res.nodes << "\n";
  if (res.certificate) {
    const Certificate& c = *res.certificate;
    ss << "p: " << c.p << "\n";
    for (size_t i = 0; i < c.arc_values.size(); ++i) {
      const auto& e = c.arc_values[i].e;
      ss << "arc " << i << ": [[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3]
         << "]]\n";
    }
    ss << "witness arcs: " << c.witness.first << ", " << c.witness.second << "\n";
  }
  return ss.str();
}

SimpleGraph parse_graph_arg(const std::string& arg) {
  // "n:1-2,2-3" with 1-based vertices, or just "n".
  std::string s = text_arg(arg);
  size_t colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument("");
  } catch (...) {
    throw InputError(Err::BadArgument, "bad vertex count '" + head + "'");
  }
  if (n < 0 || n > 64) throw InputError(Err::BadArgument, "vertex count out of range");
  SimpleGraph g(n);
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t dash = item.find('-');
      if (dash == std::string::npos)
        throw InputError(Err::BadArgument, "bad edge '" + item + "'");
      int a = 0, b = 0;
      try {
        a = std::stoi(item.substr(0, dash));
        b = std::stoi(item.substr(dash + 1));
      } catch (...) {
        throw InputError(Err::BadArgument, "bad edge '" + item + "'");
      }
      if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw InputError(Err::BadArgument, "edge endpoints out of range in '" + item + "'");
      g.add_edge(a - 1, b - 1);
    }
  }
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"linkrep: linking graphs, Alexander invariants and meridian-traceless "
               "representations of link diagrams"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  DiagramInput din;

  auto* cmd_parse = app.add_subcommand("parse", "validate a PD code and echo its structure");
  add_diagram_opts(cmd_parse, din);

  auto* cmd_inv = app.add_subcommand("invariants", "linking numbers and linking graph");
  add_diagram_opts(cmd_inv, din);

  auto* cmd_alex = app.add_subcommand("alexander", "Alexander polynomials, determinant, norms");
  add_diagram_opts(cmd_alex, din);

  auto* cmd_graph = app.add_subcommand("graph", "graph-level operations");
  cmd_graph->require_subcommand(1);
  auto* cmd_classify = cmd_graph->add_subcommand(
      "classify", "which of the four structure cases holds (diagram's linking graph or --graph)");
  add_diagram_opts(cmd_classify, din);
  std::string graph_arg;
  cmd_classify->add_option("--graph", graph_arg, "graph as 'n:1-2,2-3' (1-based), overrides --pd");

  auto* cmd_rep = app.add_subcommand("rep", "meridian-traceless representations");
  cmd_rep->require_subcommand(1);
  auto* rep_col = cmd_rep->add_subcommand("coloring", "axis coloring lifted to arc values");
  add_diagram_opts(rep_col, din);
  auto* rep_dih = cmd_rep->add_subcommand("dihedral", "binary dihedral solution set");
  add_diagram_opts(rep_dih, din);
  bool dih_all = false;
  rep_dih->add_flag("--all", dih_all, "list every solution (finite sets)");
  auto* rep_modp = cmd_rep->add_subcommand("modp", "search a mod-p certificate");
  add_diagram_opts(rep_modp, din);
  int prime = 3;
  long long budget = 0;
  rep_modp->add_option("--prime", prime, "odd prime modulus")->capture_default_str();
  rep_modp->add_option("--budget", budget, "node budget, 0 = unlimited")->capture_default_str();

  auto* cmd_cert = app.add_subcommand("certify", "search and print a mod-p certificate");
  add_diagram_opts(cmd_cert, din);
  cmd_cert->add_option("--prime", prime, "odd prime modulus")->capture_default_str();
  cmd_cert->add_option("--budget", budget, "node budget, 0 = unlimited")->capture_default_str();

  auto* cmd_vcert = app.add_subcommand("verify-cert", "check a certificate against a diagram");
  add_diagram_opts(cmd_vcert, din);
  std::string cert_arg;
  cmd_vcert->add_option("--cert", cert_arg, "certificate JSON, inline or @file")->required();

  auto* cmd_fam = app.add_subcommand("families", "built-in diagram generators");
  cmd_fam->require_subcommand(1);
  auto* fam_list = cmd_fam->add_subcommand("list", "list known names");
  auto* fam_emit = cmd_fam->add_subcommand("emit", "print the PD code of a named link");
  std::string emit_name;
  fam_emit->add_option("name", emit_name, "e.g. Hopf, L5m3, Chain(4), Luv(5,-3)")->required();

  auto* cmd_analyze = app.add_subcommand("analyze", "full evidence ladder with conclusion");
  add_diagram_opts(cmd_analyze, din);
  long long analyze_budget = 1000000;
  cmd_analyze->add_option("--budget", analyze_budget, "mod-p node budget per prime")
      ->capture_default_str();

  // Let global flags like --json appear after a subcommand name.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
      sc->fallthrough();
      enable_fallthrough(sc);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_parse->parsed()) {
    LinkDiagram d = load_diagram(din);
    std::ostringstream ss;
    ss << "pd: " << to_pd_string(d) << "\n";
    ss << "crossings: " << d.crossing_count() << "\nedges: " << d.edge_count << "\n";
    ss << "components: " << d.component_count() << " (";
    for (size_t i = 0; i < d.components.size(); ++i) {
      if (i) ss << ", ";
      ss << d.components[i].first << "-" << d.components[i].second;
    }
    ss << ")\n";
    ss << "planar: " << (is_planar(d) ? "yes" : "no") << "\n";
    emit(json, json_of(d), ss.str());
    return 0;
  }

  if (cmd_inv->parsed()) {
    LinkDiagram d = load_diagram(din);
    SimpleGraph g = linking_graph(d);
    GraphVerdict v = classify(g);
    std::ostringstream ss;
    ss << "components: " << d.component_count() << "\n";
    ss << "linking numbers:";
    int n = d.component_count();
    if (n < 2) ss << " (single component)";
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        ss << " " << i << "-" << k << ":" << linking_number(d, i, k);
    ss << "\nlinking graph: " << graph_text(g) << "\n";
    ss << "verdict: " << verdict_text(v) << "\n";
    Json j;
    j["diagram"] = json_of(d);
    j["linking_graph"] = json_of(g);
    j["verdict"] = json_of(v);
    emit(json, j, ss.str());
    return 0;
  }

  if (cmd_alex->parsed()) {
    LinkDiagram d = load_diagram(din);
    AlexanderReport r = alexander_report(d);
    std::ostringstream ss;
    ss << "components: " << r.components << "\n";
    ss << "multivariable: " << r.multivariable.to_string() << "\n";
    ss << "single_variable: " << r.single_variable.to_string() << "\n";
    ss << "determinant: " << r.determinant << "\n";
    ss << "multi_norm: " << r.multi_norm << "\n";
    ss << "single_norm: " << r.single_norm << "\n";
    ss << "instanton_bound: " << r.instanton_bound << "\n";
    emit(json, json_of(r), ss.str());
    return 0;
  }

  if (cmd_classify->parsed()) {
    SimpleGraph g = graph_arg.empty() ? linking_graph(load_diagram(din))
                                      : parse_graph_arg(graph_arg);
    GraphVerdict v = classify(g);
    std::ostringstream ss;
    ss << "graph: " << graph_text(g) << "\n";
    ss << "verdict: " << verdict_text(v) << "\n";
    Json j;
    j["graph"] = json_of(g);
    j["verdict"] = json_of(v);
    emit(json, j, ss.str());
    return 0;
  }

  if (rep_col->parsed()) {
    LinkDiagram d = load_diagram(din);
    SimpleGraph g = linking_graph(d);
    auto phi = ijk_coloring(g);
    if (!phi && g.n <= 12) phi = brute_force_coloring(g);
    if (!phi) {
      emit(json, Json(nullptr), "no valid coloring for this linking graph\n");
      return 0;
    }
    MeridianTracelessRep rep = rep_from_coloring(d, *phi);
    RepVerification ver = verify_rep(d, rep);
    std::ostringstream ss;
    ss << "coloring:";
    for (auto& q : *phi) ss << " " << q.to_string();
    ss << "\n" << rep_text(rep);
    ss << "verification passed: " << (ver.passed ? "yes" : "no") << "\n";
    Json j;
    j["coloring"] = json_of(GraphVerdict{GraphClassKind::Coloring, {}, {}, *phi})["coloring"];
    j["rep"] = json_of(rep);
    j["verification"] = json_of(ver);
    emit(json, j, ss.str());
    return 0;
  }

  if (rep_dih->parsed()) {
    LinkDiagram d = load_diagram(din);
    DihedralSolutionSet s = dihedral_solutions(d);
    std::ostringstream ss;
    ss << "base_arc: " << s.base_arc << "\n";
    ss << "finite: " << (s.finite ? "yes" : "no") << "\n";
    if (s.finite) ss << "count: " << s.count << "\n";
    ss << "abelian_count: " << s.abelian_count << "\nfree_rank: " << s.free_rank << "\n";
    Json j = json_of(s);
    auto reps = enumerate_dihedral(s);
    const MeridianTracelessRep* sample = nullptr;
    for (auto& r : reps)
      if (r.irreducible) {
        sample = &r;
        break;
      }
    if (sample) {
      ss << "irreducible sample:\n" << rep_text(*sample);
      j["irreducible_sample"] = json_of(*sample);
    } else {
      ss << "irreducible sample: none\n";
      j["irreducible_sample"] = nullptr;
    }
    if (dih_all) {
      Json all = Json::array();
      ss << "solutions: " << reps.size() << "\n";
      for (size_t i = 0; i < reps.size(); ++i) {
        ss << "-- solution " << i << "\n" << rep_text(reps[i]);
        all.push_back(json_of(reps[i]));
      }
      j["solutions"] = all;
    }
    emit(json, j, ss.str());
    return 0;
  }

  if (rep_modp->parsed() || cmd_cert->parsed()) {
    LinkDiagram d = load_diagram(din);
    CertificateSearchResult res = search_certificate(d, prime, budget);
    emit(json, json_of(res), cert_text(res));
    return 0;
  }

  if (cmd_vcert->parsed()) {
    LinkDiagram d = load_diagram(din);
    Json j;
    try {
      j = Json::parse(text_arg(cert_arg));
    } catch (const Json::exception& e) {
      throw InputError(Err::BadArgument, std::string("certificate is not JSON: ") + e.what());
    }
    // Accept either a bare certificate or a search result wrapping one.
    if (j.contains("certificate") && !j["certificate"].is_null()) j = j["certificate"];
    Certificate c = certificate_from_json(j);
    bool ok = verify_certificate(d, c);
    Json out;
    out["passed"] = ok;
    emit(json, out, std::string("verification passed: ") + (ok ? "yes" : "no") + "\n");
    return 0;
  }

  if (fam_list->parsed()) {
    Json names = Json::array();
    std::ostringstream ss;
    for (auto& n : family_names()) {
      ss << n << "\n";
      names.push_back(n);
    }
    emit(json, names, ss.str());
    return 0;
  }

  if (fam_emit->parsed()) {
    LinkDiagram d = named(emit_name);
    emit(json, json_of(d), to_pd_string(d) + "\n");
    return 0;
  }

  if (cmd_analyze->parsed()) {
    LinkDiagram d = load_diagram(din);
    AnalyzeOptions opt;
    opt.budget = analyze_budget;
    AnalysisReport r = analyze(d, opt);
    std::ostringstream ss;
    ss << "linking graph: " << graph_text(r.linking_graph) << "\n";
    ss << "verdict: " << verdict_text(r.verdict) << "\n";
    ss << "determinant: " << r.alexander.determinant << "\n";
    ss << "multi_norm: " << r.alexander.multi_norm << "\n";
    ss << "instanton_bound: " << r.alexander.instanton_bound << "\n";
    ss << "dihedral: " << (r.dihedral.finite ? "finite" : "infinite")
       << " count: " << r.dihedral.count << " abelian: " << r.dihedral.abelian_count
       << " free_rank: " << r.dihedral.free_rank << "\n";
    if (r.coloring_rep) ss << "coloring rep:\n" << rep_text(*r.coloring_rep);
    if (r.dihedral_rep) ss << "dihedral rep:\n" << rep_text(*r.dihedral_rep);
    for (auto& ps : r.certificates) ss << "mod-" << ps.p << " " << cert_text(ps.result);
    ss << "conclusion: "
       << (r.conclusion == Conclusion::IrreducibleRepFound ? "IrreducibleRepFound"
                                                           : "HopfSumConsistent");
    if (!r.witness_kind.empty()) ss << " (" << r.witness_kind << ")";
    ss << "\n";
    emit(json, json_of(r), ss.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const linkrep::InputError& e) {
    std::cerr << "input error [" << linkrep::err_name(e.code) << "]: " << e.what() << "\n";
    return 2;
  } catch (const linkrep::InexactDivision& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
