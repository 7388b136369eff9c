#include "linkrep/reps.hpp"

#include <algorithm>
#include <limits>

#include "linkrep/errors.hpp"

namespace linkrep {

bool values_irreducible(const std::vector<DihedralQuat>& values) {
  for (size_t a = 0; a < values.size(); ++a)
    for (size_t b = a + 1; b < values.size(); ++b)
      if (!dihedral_commute(values[a], values[b])) return true;
  return false;
}

MeridianTracelessRep rep_from_coloring(const LinkDiagram& d,
                                       const IjkColoring& phi) {
  SimpleGraph lg = linking_graph(d);
  if (!verify_coloring(lg, phi))
    throw InputError(Err::InvalidColoring,
                     "not a valid non-constant coloring of the linking graph");
  WirtingerPresentation p = wirtinger(d);

  std::vector<int> under_at(d.edge_count + 1, -1);
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci)
    under_at[d.crossings[ci].quad[0]] = ci;

  std::vector<DihedralQuat> values(p.generator_count);
  std::vector<char> assigned(p.generator_count, 0);
  for (int c = 0; c < d.component_count(); ++c) {
    auto [lo, hi] = d.components[c];
    int sign = 1;
    for (int e = lo; e <= hi; ++e) {
      int arc = p.arc_info.arc_of_edge[e];
      if (!assigned[arc]) {
        Q8 q = phi[c];
        q.sign = sign;
        values[arc] = DihedralQuat::from_q8(q);
        assigned[arc] = 1;
      }
      int ci = under_at[e];
      if (ci >= 0) {
        int over_comp = d.component_of(d.crossings[ci].quad[1]);
        if (phi[over_comp].axis != phi[c].axis) sign = -sign;
      }
    }
    // the walk is cyclic: the total number of sign flips must be even
    if (sign != 1)
      throw InternalError(
          "sign propagation inconsistent around a component despite a valid "
          "coloring");
  }

  MeridianTracelessRep rep;
  rep.arc_values = std::move(values);
  if (!relations_hold(p, rep.arc_values))
    throw InternalError("coloring construction violated a Wirtinger relation");
  rep.verified = true;
  rep.irreducible = values_irreducible(rep.arc_values);
  return rep;
}

static long long to_ll(const BigInt& b) {
  if (b > BigInt(std::numeric_limits<long long>::max() / 4) ||
      b < BigInt(std::numeric_limits<long long>::min() / 4))
    throw InternalError("solution transform entry out of range");
  return (long long)b;
}

DihedralSolutionSet dihedral_solutions(const LinkDiagram& d, int base_arc) {
  DihedralSolutionSet s;
  s.diagram = d;
  s.pres = wirtinger(d);
  s.base_arc = base_arc < 0 ? default_base_arc(s.pres) : base_arc;
  if (s.base_arc < 0 || s.base_arc >= s.pres.generator_count)
    throw InputError(Err::BadArgument, "base arc out of range");
  s.deleted_relation = (int)s.pres.relations.size() - 1;

  IntMat full = fox_matrix_at_minus_one(s.pres);
  IntMat mm;
  for (int r = 0; r < (int)full.size(); ++r) {
    if (r == s.deleted_relation) continue;
    std::vector<BigInt> row;
    for (int j = 0; j < (int)full[r].size(); ++j)
      if (j != s.base_arc) row.push_back(full[r][j]);
    mm.push_back(std::move(row));
  }
  for (int a = 0; a < s.pres.generator_count; ++a)
    if (a != s.base_arc) s.arc_order.push_back(a);

  s.snf = smith_normal_form(mm);
  s.free_rank = s.snf.free_rank;
  s.finite = s.free_rank == 0;
  if (s.finite) {
    s.count = 1;
    for (const BigInt& f : s.snf.invariant_factors) s.count *= f;
  }
  s.abelian_count = BigInt(1) << (d.component_count() - 1);
  return s;
}

std::vector<MeridianTracelessRep> enumerate_dihedral(
    const DihedralSolutionSet& s, const std::vector<Rat>& free_samples) {
  int cols = (int)s.arc_order.size();
  int m = (int)s.snf.invariant_factors.size();
  int free = cols - m;
  if (free > 0 && free_samples.empty())
    throw InputError(Err::NoSamplesForFreeDirection,
                     "free directions present but no sample angles given");

  // odometer over torsion indices k_i in 0..d_i-1 and sample indices
  std::vector<long long> torsion(m, 0), limit(m);
  for (int i = 0; i < m; ++i) limit[i] = to_ll(s.snf.invariant_factors[i]);
  std::vector<size_t> pick(free, 0);

  std::vector<MeridianTracelessRep> out;
  while (true) {
    std::vector<Rat> eta(cols);
    for (int i = 0; i < m; ++i) eta[i] = Rat(2 * torsion[i], limit[i]);
    for (int i = 0; i < free; ++i) eta[m + i] = free_samples[pick[i]];

    MeridianTracelessRep rep;
    rep.arc_values.assign(s.pres.generator_count, DihedralQuat::Reflection(0));
    for (int j = 0; j < cols; ++j) {
      Rat theta(0);
      for (int i = 0; i < cols; ++i) {
        long long vij = to_ll(s.snf.v[j][i]);
        if (vij != 0 && eta[i] != Rat(0)) theta += Rat(vij) * eta[i];
      }
      rep.arc_values[s.arc_order[j]] = DihedralQuat::Reflection(theta);
    }
    if (!relations_hold(s.pres, rep.arc_values))
      throw InternalError("dihedral solution failed exact relation check");
    rep.verified = true;
    rep.irreducible = values_irreducible(rep.arc_values);
    out.push_back(std::move(rep));

    // advance the odometer: torsion indices first, then sample choices
    int pos = m - 1;
    while (pos >= 0 && torsion[pos] + 1 == limit[pos]) torsion[pos--] = 0;
    if (pos >= 0) {
      ++torsion[pos];
      continue;
    }
    int fp = free - 1;
    while (fp >= 0 && pick[fp] + 1 == free_samples.size()) pick[fp--] = 0;
    if (fp < 0) break;
    ++pick[fp];
  }
  return out;
}

RepVerification verify_rep(const LinkDiagram& d,
                           const MeridianTracelessRep& rep) {
  WirtingerPresentation p = wirtinger(d);
  if ((int)rep.arc_values.size() != p.generator_count)
    throw InputError(Err::BadArgument,
                     "arc value count does not match the diagram");
  RepVerification v;
  std::vector<int> failed;
  v.all_relations = relations_hold(p, rep.arc_values, &failed);
  v.relation_ok.assign(p.relations.size(), 1);
  for (int f : failed) v.relation_ok[f] = 0;
  v.all_traceless = true;
  for (const DihedralQuat& q : rep.arc_values)
    if (!q.traceless()) v.all_traceless = false;
  v.irreducible = values_irreducible(rep.arc_values);
  v.base_is_i =
      rep.arc_values[default_base_arc(p)] == DihedralQuat::Reflection(0);
  v.passed = v.all_relations && v.all_traceless;
  return v;
}

}  // namespace linkrep
