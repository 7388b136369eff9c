#pragma once

#include <optional>
#include <vector>

#include "linkrep/diagram.hpp"
#include "linkrep/laurent.hpp"
#include "linkrep/quat.hpp"
#include "linkrep/snf.hpp"

namespace linkrep {

// One relation per crossing: x_out = x_over^sign * x_in * x_over^-sign.
struct WirtingerRelation {
  int over_arc, in_arc, out_arc;
  int sign;      // crossing sign
  int crossing;  // index into the diagram's crossing list
};

struct WirtingerPresentation {
  int generator_count = 0;  // one generator (meridian) per arc
  std::vector<WirtingerRelation> relations;
  std::vector<int> component_of;  // per generator
  int component_count = 0;
  Arcs arc_info;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

// Arc whose meridian is sent to i by convention: the lowest-numbered arc of
// the highest-indexed component.
int default_base_arc(const WirtingerPresentation& p);

// Fox-calculus Alexander matrix: one row per relation, one column per
// generator, entries Laurent polynomials in one variable per component.
using FoxMatrix = std::vector<std::vector<LaurentPoly>>;
FoxMatrix fox_matrix(const WirtingerPresentation& p);

// The same matrix with every variable evaluated at -1 (rows 2, -1, -1); this
// is the coefficient matrix of the binary dihedral angle system.
IntMat fox_matrix_at_minus_one(const WirtingerPresentation& p);

// Exponent-sum (abelianization) matrix of the relations.
IntMat abelianization_matrix(const WirtingerPresentation& p);

// Checks every Wirtinger relation exactly for an arc assignment into the
// binary dihedral group (Q8 values included via the embedding).
bool relations_hold(const WirtingerPresentation& p,
                    const std::vector<DihedralQuat>& values,
                    std::vector<int>* failed = nullptr);

// Assignment on the diagram enlarged by a small meridian circle at a point p
// of the base arc, together with the connecting arc's sign wall. Going along
// the strand: base_left | wall | mid | under the circle | base_right; the
// circle contributes front (its over piece at p) and back.
struct NaturalExtension {
  int base_arc = 0;
  DihedralQuat base_left, mid, base_right, circle_front, circle_back;
  std::vector<DihedralQuat> original_values;
  bool relations_ok = false;
};

// Requires rep(base_arc) = i; maps the circle's meridian to j and fills the
// local picture so every relation (old and new) holds.
NaturalExtension extend_to_natural(const WirtingerPresentation& p,
                                   const std::vector<DihedralQuat>& values,
                                   int base_arc);

}  // namespace linkrep
