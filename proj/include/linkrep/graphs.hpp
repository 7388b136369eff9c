#pragma once

#include <optional>
#include <vector>

#include "linkrep/quat.hpp"
#include "linkrep/simple_graph.hpp"

namespace linkrep {

// One Q8 axis element (i, j or k, sign +1) per vertex.
using IjkColoring = std::vector<Q8>;

// The 6-vertex, 7-edge obstruction graph: two 4-cycles sharing one edge.
SimpleGraph g0_graph();

// An induced cycle of length >= 3 and != 4, if any. Odd cycles are found via
// a shortest-odd-closed-walk argument (a shortest odd cycle is induced);
// even cycles >= 6 by DFS over induced paths.
std::optional<std::vector<int>> find_induced_cycle_ne4(const SimpleGraph& g);

// Six vertices of g inducing a copy of g0: result[k] plays g0's vertex k.
std::optional<std::vector<int>> find_induced_g0(const SimpleGraph& g);

// Constructive recursion: a non-constant {i,j,k}-coloring where every
// vertex's value commutes with the Q8 product over its neighbors. Guaranteed
// to succeed when g is not a tree, has no induced cycle != 4 and no induced
// g0 copy.
std::optional<IjkColoring> ijk_coloring(const SimpleGraph& g);

bool verify_coloring(const SimpleGraph& g, const IjkColoring& phi);

// Witness checkers used by tests and by classify().
bool verify_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle);
bool verify_induced_g0(const SimpleGraph& g, const std::vector<int>& map6);

// First valid coloring in lexicographic {i,j,k}^V order, or none (oracle).
std::optional<IjkColoring> brute_force_coloring(const SimpleGraph& g);

enum class GraphClassKind { Tree, InducedCycle, InducedG0, Coloring };

struct GraphVerdict {
  GraphClassKind kind = GraphClassKind::Tree;
  std::vector<int> cycle;        // InducedCycle
  std::vector<int> g0_vertices;  // InducedG0
  IjkColoring coloring;          // Coloring
};

// Fixed priority: forest, then induced cycle != 4, then induced g0 copy,
// then coloring. Every returned witness is re-verified; exhaustion of all
// four cases is an internal error.
GraphVerdict classify(const SimpleGraph& g);

// All isomorphism classes of simple graphs on exactly n vertices (n <= 8),
// canonical representatives in a deterministic order.
std::vector<SimpleGraph> nonisomorphic_graphs(int n);

}  // namespace linkrep
