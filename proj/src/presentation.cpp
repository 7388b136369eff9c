#include "linkrep/presentation.hpp"

#include <string>

#include "linkrep/errors.hpp"

namespace linkrep {

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  WirtingerPresentation p;
  p.arc_info = arcs(d);
  p.generator_count = p.arc_info.count;
  p.component_count = d.component_count();
  p.component_of = p.arc_info.component;
  p.relations.reserve(d.crossings.size());
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    const auto& q = d.crossings[ci].quad;
    WirtingerRelation r;
    r.over_arc = p.arc_info.arc_of_edge[q[1]];
    r.in_arc = p.arc_info.arc_of_edge[q[0]];
    r.out_arc = p.arc_info.arc_of_edge[q[2]];
    r.sign = crossing_sign(d, ci);
    r.crossing = ci;
    p.relations.push_back(r);
  }
  return p;
}

int default_base_arc(const WirtingerPresentation& p) {
  int last_comp = p.component_count - 1;
  int best = -1;
  for (int a = 0; a < p.generator_count; ++a) {
    if (p.component_of[a] != last_comp) continue;
    if (best < 0 || p.arc_info.min_edge[a] < p.arc_info.min_edge[best]) best = a;
  }
  if (best < 0) throw InternalError("no arc on the last component");
  return best;
}

FoxMatrix fox_matrix(const WirtingerPresentation& p) {
  int n = p.component_count;
  LaurentPoly zero(n);
  FoxMatrix m(p.relations.size(),
              std::vector<LaurentPoly>(p.generator_count, zero));
  LaurentPoly one = LaurentPoly::constant(n, 1);
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    const auto& r = p.relations[ri];
    int co = p.component_of[r.over_arc];
    int ca = p.component_of[r.in_arc];
    if (r.sign > 0) {
      // d/dx of  o a o^-1 out^-1:  col o: 1 - x_ca, col a: x_co, col out: -1
      m[ri][r.over_arc] =
          m[ri][r.over_arc] + one - LaurentPoly::variable(n, ca);
      m[ri][r.in_arc] = m[ri][r.in_arc] + LaurentPoly::variable(n, co);
    } else {
      // o^-1 a o out^-1: col o: x_co^-1 (x_ca - 1), col a: x_co^-1
      LaurentPoly oinv = LaurentPoly::variable(n, co, -1);
      m[ri][r.over_arc] =
          m[ri][r.over_arc] + oinv * (LaurentPoly::variable(n, ca) - one);
      m[ri][r.in_arc] = m[ri][r.in_arc] + oinv;
    }
    m[ri][r.out_arc] = m[ri][r.out_arc] - one;
  }
  return m;
}

IntMat fox_matrix_at_minus_one(const WirtingerPresentation& p) {
  IntMat m(p.relations.size(),
           std::vector<BigInt>(p.generator_count, BigInt(0)));
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    const auto& r = p.relations[ri];
    m[ri][r.over_arc] += 2;
    m[ri][r.in_arc] -= 1;
    m[ri][r.out_arc] -= 1;
  }
  return m;
}

IntMat abelianization_matrix(const WirtingerPresentation& p) {
  IntMat m(p.relations.size(),
           std::vector<BigInt>(p.generator_count, BigInt(0)));
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    const auto& r = p.relations[ri];
    m[ri][r.in_arc] += 1;
    m[ri][r.out_arc] -= 1;
  }
  return m;
}

static DihedralQuat conj_signed(const DihedralQuat& o, const DihedralQuat& a,
                                int sign) {
  if (sign > 0) return dihedral_conj(o, a);
  return dihedral_conj(dihedral_inv(o), a);
}

bool relations_hold(const WirtingerPresentation& p,
                    const std::vector<DihedralQuat>& values,
                    std::vector<int>* failed) {
  if ((int)values.size() != p.generator_count)
    throw InputError(Err::BadArgument, "assignment size does not match arc count");
  bool ok = true;
  for (size_t ri = 0; ri < p.relations.size(); ++ri) {
    const auto& r = p.relations[ri];
    DihedralQuat lhs = conj_signed(values[r.over_arc], values[r.in_arc], r.sign);
    if (!(lhs == values[r.out_arc])) {
      ok = false;
      if (failed) failed->push_back((int)ri);
    }
  }
  return ok;
}

NaturalExtension extend_to_natural(const WirtingerPresentation& p,
                                   const std::vector<DihedralQuat>& values,
                                   int base_arc) {
  if (base_arc < 0 || base_arc >= p.generator_count)
    throw InputError(Err::BadArgument, "base arc out of range");
  if (!relations_hold(p, values))
    throw InputError(Err::BadArgument,
                     "assignment does not satisfy the Wirtinger relations");
  DihedralQuat i_val = DihedralQuat::from_q8(q8_i());
  if (!(values[base_arc] == i_val))
    throw InputError(Err::BasepointNotI,
                     "basepoint arc must carry the value i");

  // Local picture at the basepoint: the base arc is cut into
  // base_left | sign wall | mid | (under the earring circle) | base_right,
  // the circle carries front/back pieces and crosses under the connecting
  // arc's wall once. Every plain crossing relation is conjugation.
  NaturalExtension ext;
  ext.base_arc = base_arc;
  ext.original_values = values;
  ext.base_left = i_val;
  ext.mid = dihedral_neg(ext.base_left);
  ext.circle_front = DihedralQuat::from_q8(q8_j());
  ext.base_right = dihedral_conj(ext.circle_front, ext.mid);
  ext.circle_back = dihedral_conj(ext.base_right, ext.circle_front);

  bool ok = true;
  // wall on the strand
  ok = ok && (ext.mid == dihedral_neg(ext.base_left));
  // strand passes under the circle
  ok = ok && (ext.base_right == dihedral_conj(ext.circle_front, ext.mid));
  // circle passes under the strand
  ok = ok && (ext.circle_back == dihedral_conj(ext.base_right, ext.circle_front));
  // circle passes under the connecting arc's wall and closes up
  ok = ok && (ext.circle_front == dihedral_neg(ext.circle_back));
  // old relations still read the same value on both halves of the base arc
  ok = ok && (ext.base_left == values[base_arc]) &&
       (ext.base_right == values[base_arc]);
  // everything stays meridian-traceless
  ok = ok && ext.base_left.traceless() && ext.mid.traceless() &&
       ext.base_right.traceless() && ext.circle_front.traceless() &&
       ext.circle_back.traceless();
  ext.relations_ok = ok;
  if (!ok) throw InternalError("natural extension failed to close up");
  return ext;
}

}  // namespace linkrep
