#include "linkrep/jsonio.hpp"

namespace linkrep {

namespace {

std::string big_str(const BigInt& b) { return b.str(); }

Json quat_json(const DihedralQuat& q) {
  Json j;
  j["text"] = q.to_string();
  j["reflection"] = q.reflection;
  j["angle"] = std::to_string(q.angle.numerator()) + "/" + std::to_string(q.angle.denominator());
  return j;
}

const char* kind_name(GraphClassKind k) {
  switch (k) {
    case GraphClassKind::Tree: return "tree";
    case GraphClassKind::InducedCycle: return "induced_cycle";
    case GraphClassKind::InducedG0: return "induced_g0";
    case GraphClassKind::Coloring: return "coloring";
  }
  return "?";
}

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::ExhaustedSearchSpace: return "exhausted_search_space";
    case SearchOutcome::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace

Json json_of(const LinkDiagram& d) {
  Json j;
  j["pd"] = to_pd_string(d);
  j["crossings"] = d.crossing_count();
  j["edges"] = d.edge_count;
  j["components"] = d.component_count();
  Json comps = Json::array();
  for (auto& [lo, hi] : d.components) comps.push_back({lo, hi});
  j["component_edge_ranges"] = comps;
  j["planar"] = is_planar(d);
  return j;
}

Json json_of(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.n;
  Json edges = Json::array();
  for (auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

Json json_of(const GraphVerdict& v) {
  Json j;
  j["kind"] = kind_name(v.kind);
  if (v.kind == GraphClassKind::InducedCycle) j["cycle"] = v.cycle;
  if (v.kind == GraphClassKind::InducedG0) j["g0_vertices"] = v.g0_vertices;
  if (v.kind == GraphClassKind::Coloring) {
    Json phi = Json::array();
    for (auto& q : v.coloring) phi.push_back(q.to_string());
    j["coloring"] = phi;
  }
  return j;
}

Json json_of(const AlexanderReport& r) {
  Json j;
  j["components"] = r.components;
  j["multivariable"] = r.multivariable.to_string();
  j["single_variable"] = r.single_variable.to_string();
  j["determinant"] = big_str(r.determinant);
  j["multi_norm"] = big_str(r.multi_norm);
  j["single_norm"] = big_str(r.single_norm);
  j["instanton_bound"] = big_str(r.instanton_bound);
  return j;
}

Json json_of(const MeridianTracelessRep& r) {
  Json j;
  Json vals = Json::array();
  for (auto& q : r.arc_values) vals.push_back(quat_json(q));
  j["arc_values"] = vals;
  j["irreducible"] = r.irreducible;
  j["verified"] = r.verified;
  return j;
}

Json json_of(const RepVerification& v) {
  Json j;
  Json rel = Json::array();
  for (char ok : v.relation_ok) rel.push_back((bool)ok);
  j["relation_ok"] = rel;
  j["all_relations"] = v.all_relations;
  j["all_traceless"] = v.all_traceless;
  j["irreducible"] = v.irreducible;
  j["base_is_i"] = v.base_is_i;
  j["passed"] = v.passed;
  return j;
}

Json json_of(const DihedralSolutionSet& s) {
  Json j;
  j["base_arc"] = s.base_arc;
  j["finite"] = s.finite;
  j["count"] = big_str(s.count);
  j["abelian_count"] = big_str(s.abelian_count);
  j["free_rank"] = s.free_rank;
  Json f = Json::array();
  for (auto& d : s.snf.invariant_factors) f.push_back(big_str(d));
  j["invariant_factors"] = f;
  return j;
}

Json json_of(const Certificate& c) {
  Json j;
  j["p"] = c.p;
  Json arcs = Json::array();
  for (auto& m : c.arc_values) arcs.push_back({m.e[0], m.e[1], m.e[2], m.e[3]});
  j["arc_values"] = arcs;
  j["witness"] = {c.witness.first, c.witness.second};
  return j;
}

Json json_of(const CertificateSearchResult& r) {
  Json j;
  j["outcome"] = outcome_name(r.outcome);
  j["nodes"] = r.nodes;
  j["certificate"] = r.certificate ? json_of(*r.certificate) : Json(nullptr);
  return j;
}

Json json_of(const AnalysisReport& r) {
  Json j;
  j["linking_graph"] = json_of(r.linking_graph);
  j["graph_verdict"] = json_of(r.verdict);
  j["alexander"] = json_of(r.alexander);
  Json dh;
  dh["base_arc"] = r.dihedral.base_arc;
  dh["finite"] = r.dihedral.finite;
  dh["count"] = big_str(r.dihedral.count);
  dh["abelian_count"] = big_str(r.dihedral.abelian_count);
  dh["free_rank"] = r.dihedral.free_rank;
  j["dihedral"] = dh;
  j["coloring_rep"] = r.coloring_rep ? json_of(*r.coloring_rep) : Json(nullptr);
  j["dihedral_rep"] = r.dihedral_rep ? json_of(*r.dihedral_rep) : Json(nullptr);
  Json certs = Json::array();
  for (auto& ps : r.certificates) {
    Json c;
    c["p"] = ps.p;
    c["result"] = json_of(ps.result);
    certs.push_back(c);
  }
  j["certificates"] = certs;
  j["conclusion"] = r.conclusion == Conclusion::IrreducibleRepFound ? "IrreducibleRepFound"
                                                                    : "HopfSumConsistent";
  j["witness_kind"] = r.witness_kind.empty() ? Json(nullptr) : Json(r.witness_kind);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.p = j.at("p").get<int>();
    for (auto& row : j.at("arc_values")) {
      if (!row.is_array() || row.size() != 4)
        throw InputError(Err::BadArgument, "certificate arc value is not a 4-entry array");
      Mat2p m;
      m.p = c.p;
      for (int k = 0; k < 4; ++k) m.e[k] = row[k].get<int>();
      c.arc_values.push_back(m);
    }
    auto& w = j.at("witness");
    if (!w.is_array() || w.size() != 2)
      throw InputError(Err::BadArgument, "certificate witness is not a pair");
    c.witness = {w[0].get<int>(), w[1].get<int>()};
    return c;
  } catch (const Json::exception& e) {
    throw InputError(Err::BadArgument, std::string("bad certificate JSON: ") + e.what());
  }
}

}  // namespace linkrep
