#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkrep/errors.hpp"
#include "linkrep/simple_graph.hpp"

namespace linkrep {

// One PD crossing X[a,b,c,d]: edge labels counterclockwise starting from the
// incoming under-edge. The under strand runs a -> c; the over strand occupies
// slots b and d.
struct Crossing {
  std::array<int, 4> quad;
};

// A validated link diagram. Edge labels are 1..edge_count; the edges of each
// component form a consecutive interval traversed in increasing cyclic order
// (wrapping from the interval's max to its min).
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int edge_count = 0;
  // Component intervals [lo, hi], sorted by lo; index in this vector is the
  // component index used everywhere downstream.
  std::vector<std::pair<int, int>> components;
  // Per crossing: which over slot (1 or 3) holds the incoming over-edge.
  std::vector<int> over_in_slot;

  int component_count() const { return (int)components.size(); }
  int component_of(int edge) const;
  int succ(int edge) const;  // cyclic successor within the component
  int crossing_count() const { return (int)crossings.size(); }
};

// Parses and validates PD notation: "PD[X[a,b,c,d], ...]" or bare
// whitespace-separated X[...] tokens.
LinkDiagram parse_pd(const std::string& text);

// Builds a diagram from raw crossings (used by generators); same validation
// as parse_pd.
LinkDiagram validate_diagram(std::vector<Crossing> crossings);

std::string to_pd_string(const LinkDiagram& d);

// Arc partition: maximal over-strand runs. Two edges share an arc iff they
// meet at some crossing as its two over-edges.
struct Arcs {
  int count = 0;
  std::vector<int> arc_of_edge;  // size edge_count + 1, index by edge label
  std::vector<int> min_edge;     // representative (lowest) edge per arc
  std::vector<int> component;    // component index per arc
};
Arcs arcs(const LinkDiagram& d);

// +1 iff the incoming over-edge sits in slot 3 (counterclockwise previous
// from the incoming under-edge); -1 for slot 1. Calibrated so that
// "X[1,3,2,4] X[3,1,4,2]" carries +1 at both crossings.
int crossing_sign(const LinkDiagram& d, int crossing_index);

// Faces of the 4-valent projection, traced from the counterclockwise slot
// order at each crossing.
int face_count(const LinkDiagram& d);

// Euler check that the code describes a diagram drawable in the plane:
// V - E + F == 2 for every connected piece of the projection.
bool is_planar(const LinkDiagram& d);

// Half the signed count of crossings between the two components.
int linking_number(const LinkDiagram& d, int comp_i, int comp_j);

// Vertex per component, edge where the pairwise linking number is odd.
SimpleGraph linking_graph(const LinkDiagram& d);

// All crossings switched (over/under exchanged). Involution; negates linking
// numbers, preserves the linking graph.
LinkDiagram mirror(const LinkDiagram& d);

// A one-crossing unknot diagram (Reidemeister-I kink); the only way to encode
// an unknot component, since crossing-free components have no PD edges.
LinkDiagram kinked_unknot();

// Disjoint union: relabels b's edges above a's.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace linkrep
