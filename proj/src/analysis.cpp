#include "linkrep/analysis.hpp"

namespace linkrep {

AnalysisReport analyze(const LinkDiagram& d, const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.linking_graph = linking_graph(d);
  r.verdict = classify(r.linking_graph);
  r.alexander = alexander_report(d);

  // The classifier only emits a coloring witness for graphs matching its
  // constructive cases, but colorings exist beyond those (triangles etc.),
  // so fall back to a direct search on small graphs.
  std::optional<IjkColoring> phi;
  if (r.verdict.kind == GraphClassKind::Coloring)
    phi = r.verdict.coloring;
  else if (r.linking_graph.n <= 12)
    phi = brute_force_coloring(r.linking_graph);
  if (phi) {
    MeridianTracelessRep rep = rep_from_coloring(d, *phi);
    if (rep.verified && rep.irreducible) {
      r.coloring_rep = rep;
      r.conclusion = Conclusion::IrreducibleRepFound;
      r.witness_kind = "coloring";
    }
  }

  DihedralSolutionSet sols = dihedral_solutions(d);
  r.dihedral.base_arc = sols.base_arc;
  r.dihedral.finite = sols.finite;
  r.dihedral.count = sols.count;
  r.dihedral.abelian_count = sols.abelian_count;
  r.dihedral.free_rank = sols.free_rank;

  if (r.witness_kind.empty() && (!sols.finite || sols.count > sols.abelian_count)) {
    for (const auto& rep : enumerate_dihedral(sols)) {
      if (!rep.irreducible) continue;
      RepVerification v = verify_rep(d, rep);
      if (v.passed && v.irreducible) {
        r.dihedral_rep = rep;
        r.conclusion = Conclusion::IrreducibleRepFound;
        r.witness_kind = "dihedral";
        break;
      }
    }
  }

  if (r.witness_kind.empty()) {
    for (int p : opt.primes) {
      PrimeSearch ps;
      ps.p = p;
      ps.result = search_certificate(d, p, opt.budget);
      bool found = ps.result.outcome == SearchOutcome::Found;
      r.certificates.push_back(std::move(ps));
      if (found) {
        r.conclusion = Conclusion::IrreducibleRepFound;
        r.witness_kind = "modp";
        break;
      }
    }
  }
  return r;
}

}  // namespace linkrep
