#include "linkrep/simple_graph.hpp"

#include <stdexcept>

namespace linkrep {

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::logic_error("self-loop rejected");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::logic_error("vertex out of range");
  if (u > v) std::swap(u, v);
  edges.insert({u, v});
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

uint64_t SimpleGraph::neighbor_mask(int v) const {
  uint64_t m = 0;
  for (int w : neighbors(v)) m |= (uint64_t)1 << w;
  return m;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v))
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

bool SimpleGraph::connected() const {
  return n == 0 || components().size() == 1;
}

bool SimpleGraph::acyclic() const {
  // forest iff |E| = n - #components
  return (int)edges.size() == n - (int)components().size();
}

std::vector<int> SimpleGraph::bipartition() const {
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts) const {
  SimpleGraph g((int)verts.size());
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (has_edge(verts[i], verts[j])) g.add_edge(i, j);
  return g;
}

}  // namespace linkrep
