#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace linkrep {

// Finite simple graph on vertices 0..n-1: no loops, no multi-edges.
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized u < v

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices) : n(vertices) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  uint64_t neighbor_mask(int v) const;  // requires n <= 64
  int edge_count() const { return (int)edges.size(); }

  bool operator==(const SimpleGraph&) const = default;

  // Connected components as sorted vertex lists.
  std::vector<std::vector<int>> components() const;
  bool connected() const;
  bool acyclic() const;  // forest test
  bool is_tree() const { return connected() && acyclic(); }
  // Two-coloring; empty result when the graph is not bipartite.
  std::vector<int> bipartition() const;

  // Induced subgraph on the given vertices (in the given order; vertex i of
  // the result corresponds to verts[i]).
  SimpleGraph induced(const std::vector<int>& verts) const;
};

}  // namespace linkrep
