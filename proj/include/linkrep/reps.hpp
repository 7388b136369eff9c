#pragma once

#include <optional>
#include <vector>

#include "linkrep/diagram.hpp"
#include "linkrep/graphs.hpp"
#include "linkrep/presentation.hpp"
#include "linkrep/quat.hpp"
#include "linkrep/snf.hpp"

namespace linkrep {

// Exact assignment of a traceless binary-dihedral unit quaternion (Q8 values
// included) to every arc meridian.
struct MeridianTracelessRep {
  std::vector<DihedralQuat> arc_values;
  bool irreducible = false;  // some pair of values fails to commute
  bool verified = false;     // all Wirtinger relations checked exactly
};

struct RepVerification {
  std::vector<char> relation_ok;
  bool all_relations = false;
  bool all_traceless = false;
  bool irreducible = false;
  bool base_is_i = false;  // default base arc carries i
  bool passed = false;     // relations and tracelessness
};

// Solutions of the binary dihedral angle system 2θ_over = θ_in + θ_out
// (angles in units of π, modulo 2) with the base arc pinned to θ = 0.
struct DihedralSolutionSet {
  int base_arc = 0;
  SnfResult snf;  // of the deleted t = -1 Fox matrix
  bool finite = true;
  BigInt count = 0;  // product of invariant factors (finite case)
  BigInt abelian_count = 0;
  int free_rank = 0;
  // context used by enumerate_dihedral
  LinkDiagram diagram;
  WirtingerPresentation pres;
  std::vector<int> arc_order;  // system columns: all arcs except the base
  int deleted_relation = 0;
};

// Assigns ±φ(component) to arcs with the sign flipping at every
// under-passage below an arc of a different axis; requires a valid coloring
// of the linking graph.
MeridianTracelessRep rep_from_coloring(const LinkDiagram& d,
                                       const IjkColoring& phi);

// base_arc -1 selects the default (lowest arc of the highest component).
DihedralSolutionSet dihedral_solutions(const LinkDiagram& d, int base_arc = -1);

// All solutions in a deterministic order; free directions take each sample
// angle in turn (required non-empty when free_rank > 0).
std::vector<MeridianTracelessRep> enumerate_dihedral(
    const DihedralSolutionSet& s,
    const std::vector<Rat>& free_samples = {Rat(1, 4)});

RepVerification verify_rep(const LinkDiagram& d,
                           const MeridianTracelessRep& rep);

bool values_irreducible(const std::vector<DihedralQuat>& values);

}  // namespace linkrep
