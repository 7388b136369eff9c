#include "linkrep/graphs.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "linkrep/errors.hpp"

namespace linkrep {

SimpleGraph g0_graph() {
  SimpleGraph g(6);
  // vertices 0..5 stand for the labels 1..6 of the two-squares picture
  const int e[7][2] = {{1, 3}, {1, 6}, {3, 4}, {4, 6}, {4, 5}, {5, 2}, {2, 6}};
  for (auto& uv : e) g.add_edge(uv[0] - 1, uv[1] - 1);
  return g;
}

bool verify_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  int len = (int)cycle.size();
  if (len < 3 || len == 4) return false;
  std::set<int> seen(cycle.begin(), cycle.end());
  if ((int)seen.size() != len) return false;
  for (int v : cycle)
    if (v < 0 || v >= g.n) return false;
  int edges_inside = 0;
  for (int u : cycle)
    for (int v : cycle)
      if (u < v && g.has_edge(u, v)) ++edges_inside;
  if (edges_inside != len) return false;
  for (int idx = 0; idx < len; ++idx)
    if (!g.has_edge(cycle[idx], cycle[(idx + 1) % len])) return false;
  return true;
}

bool verify_induced_g0(const SimpleGraph& g, const std::vector<int>& map6) {
  if ((int)map6.size() != 6) return false;
  std::set<int> seen(map6.begin(), map6.end());
  if (seen.size() != 6) return false;
  SimpleGraph g0 = g0_graph();
  for (int a = 0; a < 6; ++a) {
    if (map6[a] < 0 || map6[a] >= g.n) return false;
    for (int b = a + 1; b < 6; ++b)
      if (g.has_edge(map6[a], map6[b]) != g0.has_edge(a, b)) return false;
  }
  return true;
}

// ---- induced cycle search ----------------------------------------------

// Shortest odd cycle: minimal odd closed walk via BFS layers from every
// root; a shortest odd cycle has no chord (a chord would split off a
// shorter odd cycle), but we shortcut defensively anyway.
static std::optional<std::vector<int>> shortest_odd_cycle(const SimpleGraph& g) {
  std::vector<int> best;
  for (int root = 0; root < g.n; ++root) {
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          queue.push_back(w);
        }
    }
    for (auto& [u, v] : g.edges) {
      if (dist[u] < 0 || dist[v] < 0 || dist[u] != dist[v]) continue;
      // odd closed walk root..u - v..root; intersect the two ancestor paths
      std::vector<int> pu{u}, pv{v};
      while (par[pu.back()] >= 0) pu.push_back(par[pu.back()]);
      while (par[pv.back()] >= 0) pv.push_back(par[pv.back()]);
      // drop the common tail to make the walk simple
      while (pu.size() >= 2 && pv.size() >= 2 &&
             pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
      }
      std::vector<int> cyc(pu.rbegin(), pu.rend());
      cyc.insert(cyc.end(), pv.begin(), pv.end());
      cyc.pop_back();  // shared apex appears once
      std::reverse(cyc.begin(), cyc.end());
      if (cyc.size() % 2 == 0) continue;
      if (best.empty() || cyc.size() < best.size()) best = cyc;
    }
  }
  if (best.empty()) return std::nullopt;
  // shortcut across chords until induced, keeping the odd side
  for (bool changed = true; changed;) {
    changed = false;
    int len = (int)best.size();
    for (int a = 0; a < len && !changed; ++a)
      for (int b = a + 2; b < len && !changed; ++b) {
        if (a == 0 && b == len - 1) continue;  // cycle edge
        if (!g.has_edge(best[a], best[b])) continue;
        std::vector<int> c1(best.begin() + a, best.begin() + b + 1);
        std::vector<int> c2(best.begin() + b, best.end());
        c2.insert(c2.end(), best.begin(), best.begin() + a + 1);
        best = (c1.size() % 2 == 1) ? c1 : c2;
        changed = true;
      }
  }
  return best;
}

// DFS over induced paths with canonical orientation (start at the cycle's
// minimum vertex, second vertex smaller than the closing vertex).
static bool even_cycle_dfs(const SimpleGraph& g, std::vector<int>& path,
                           std::vector<char>& in_path,
                           std::vector<int>& result) {
  int v0 = path.front();
  int last = path.back();
  for (int w : g.neighbors(last)) {
    if (w <= v0 || in_path[w]) continue;
    bool touches_interior = false;
    for (size_t idx = 0; idx + 1 < path.size() && !touches_interior; ++idx)
      if (idx > 0 && g.has_edge(w, path[idx])) touches_interior = true;
    bool closes = g.has_edge(w, v0);
    if (touches_interior) continue;
    if (closes) {
      if (path.size() + 1 >= 6 && w > path[1]) {
        result = path;
        result.push_back(w);
        return true;
      }
      continue;  // would create a chord or a short cycle; w cannot extend
    }
    path.push_back(w);
    in_path[w] = 1;
    if (even_cycle_dfs(g, path, in_path, result)) return true;
    in_path[w] = 0;
    path.pop_back();
  }
  return false;
}

std::optional<std::vector<int>> find_induced_cycle_ne4(const SimpleGraph& g) {
  if (g.bipartition().empty() && g.n > 0) {
    auto odd = shortest_odd_cycle(g);
    if (!odd || !verify_induced_cycle(g, *odd))
      throw InternalError("odd cycle extraction failed");
    return odd;
  }
  for (int v0 = 0; v0 < g.n; ++v0) {
    for (int v1 : g.neighbors(v0)) {
      if (v1 <= v0) continue;
      std::vector<int> path{v0, v1};
      std::vector<char> in_path(g.n, 0);
      in_path[v0] = in_path[v1] = 1;
      std::vector<int> result;
      if (even_cycle_dfs(g, path, in_path, result)) {
        if (!verify_induced_cycle(g, result))
          throw InternalError("even cycle search returned a bad witness");
        return result;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced_g0(const SimpleGraph& g) {
  if (g.n < 6) return std::nullopt;
  SimpleGraph g0 = g0_graph();
  // choose 6 vertices, prefilter by induced degree multiset (2,2,2,2,3,3)
  for (int a = 0; a < g.n - 5; ++a)
    for (int b = a + 1; b < g.n - 4; ++b)
      for (int c = b + 1; c < g.n - 3; ++c)
        for (int d = c + 1; d < g.n - 2; ++d)
          for (int e = d + 1; e < g.n - 1; ++e)
            for (int f = e + 1; f < g.n; ++f) {
              std::array<int, 6> six{a, b, c, d, e, f};
              std::array<int, 6> deg{};
              int edges_inside = 0;
              for (int s = 0; s < 6; ++s)
                for (int t = s + 1; t < 6; ++t)
                  if (g.has_edge(six[s], six[t])) {
                    ++deg[s];
                    ++deg[t];
                    ++edges_inside;
                  }
              if (edges_inside != 7) continue;
              std::array<int, 6> sorted_deg = deg;
              std::sort(sorted_deg.begin(), sorted_deg.end());
              if (sorted_deg != std::array<int, 6>{2, 2, 2, 2, 3, 3}) continue;
              std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
              do {
                bool ok = true;
                for (int s = 0; s < 6 && ok; ++s)
                  for (int t = s + 1; t < 6 && ok; ++t)
                    if (g.has_edge(six[perm[s]], six[perm[t]]) !=
                        g0.has_edge(s, t))
                      ok = false;
                if (ok) {
                  std::vector<int> map6(6);
                  for (int s = 0; s < 6; ++s) map6[s] = six[perm[s]];
                  return map6;
                }
              } while (std::next_permutation(perm.begin(), perm.end()));
            }
  return std::nullopt;
}

// ---- coloring ------------------------------------------------------------

bool verify_coloring(const SimpleGraph& g, const IjkColoring& phi) {
  if ((int)phi.size() != g.n || g.n == 0) return false;
  for (const Q8& q : phi)
    if (q.sign != 1 || q.axis == Axis::One) return false;
  bool nonconstant = false;
  for (const Q8& q : phi)
    if (q.axis != phi[0].axis) nonconstant = true;
  if (!nonconstant) return false;
  for (int v = 0; v < g.n; ++v) {
    Q8 prod = q8_one();
    for (int w : g.neighbors(v)) prod = q8_mul(prod, phi[w]);
    if (!q8_commute(phi[v], prod)) return false;
  }
  return true;
}

static const std::array<Q8, 3> kAxes{q8_i(), q8_j(), q8_k()};

std::optional<IjkColoring> brute_force_coloring(const SimpleGraph& g) {
  if (g.n == 0 || g.n > 16) return std::nullopt;
  std::vector<int> pick(g.n, 0);
  while (true) {
    IjkColoring phi(g.n);
    for (int v = 0; v < g.n; ++v) phi[v] = kAxes[pick[v]];
    if (verify_coloring(g, phi)) return phi;
    int pos = g.n - 1;
    while (pos >= 0 && pick[pos] == 2) pick[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++pick[pos];
  }
}

static bool component_is_tree(const SimpleGraph& g,
                              const std::vector<int>& comp) {
  SimpleGraph sub = g.induced(comp);
  return sub.edge_count() == (int)comp.size() - 1;
}

static std::optional<IjkColoring> color_rec(const SimpleGraph& g);

// Color one subset of the vertices by recursion and extend by a constant.
static std::optional<IjkColoring> color_piece_and_fill(
    const SimpleGraph& g, const std::vector<int>& piece,
    std::optional<int> constant_from /* piece-local index, or none */) {
  auto sub_phi = color_rec(g.induced(piece));
  if (!sub_phi) return std::nullopt;
  IjkColoring phi(g.n);
  for (size_t idx = 0; idx < piece.size(); ++idx)
    phi[piece[idx]] = (*sub_phi)[idx];
  Q8 fill;
  if (constant_from) {
    fill = (*sub_phi)[*constant_from];
  } else {
    // a constant with a different axis keeps the result non-constant
    fill = (*sub_phi)[0].axis == Axis::I ? q8_j() : q8_i();
  }
  fill.sign = 1;
  std::vector<char> covered(g.n, 0);
  for (int v : piece) covered[v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!covered[v]) phi[v] = fill;
  return phi;
}

static std::optional<IjkColoring> color_rec(const SimpleGraph& g) {
  if (g.n == 0) return std::nullopt;
  auto comps = g.components();

  if (comps.size() > 1) {
    // Disconnected: color one non-tree component by recursion, the rest by
    // constants; all-tree forests take one constant per component.
    int piece_idx = -1;
    for (size_t ci = 0; ci < comps.size(); ++ci)
      if (!component_is_tree(g, comps[ci])) {
        piece_idx = (int)ci;
        break;
      }
    if (piece_idx < 0) {
      IjkColoring phi(g.n);
      for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) phi[v] = kAxes[ci % 3];
      return phi;
    }
    return color_piece_and_fill(g, comps[piece_idx], std::nullopt);
  }

  // connected
  if (g.n == 1 || g.acyclic()) return std::nullopt;  // tree: only constants
  std::vector<int> side = g.bipartition();
  if (side.empty()) return std::nullopt;  // odd cycle: hypotheses violated

  // Case 1: a vertex of degree <= 1 inherits its neighbor's color.
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) > 1) continue;
    int nb = g.neighbors(v).front();
    std::vector<int> rest;
    for (int w = 0; w < g.n; ++w)
      if (w != v) rest.push_back(w);
    auto sub_phi = color_rec(g.induced(rest));
    if (!sub_phi) return std::nullopt;
    IjkColoring phi(g.n);
    for (size_t idx = 0; idx < rest.size(); ++idx) phi[rest[idx]] = (*sub_phi)[idx];
    phi[v] = phi[nb];
    return phi;
  }

  // Both parts now have >= 2 vertices. Pick the pair inside one fixed part
  // with the largest common neighborhood.
  std::vector<int> part1;
  for (int v = 0; v < g.n; ++v)
    if (side[v] == side[0]) part1.push_back(v);
  int x0 = -1;
  std::vector<int> a_set;
  for (size_t s = 0; s < part1.size(); ++s)
    for (size_t t = s + 1; t < part1.size(); ++t) {
      std::vector<int> common;
      for (int w : g.neighbors(part1[s]))
        if (g.has_edge(part1[t], w)) common.push_back(w);
      if (x0 < 0 || common.size() > a_set.size()) {
        x0 = part1[s];
        a_set = common;
      }
    }
  if (x0 < 0 || a_set.size() < 2) return std::nullopt;  // no induced 4-cycle

  std::vector<int> b_set;
  for (int v : part1) {
    bool all = true;
    for (int w : a_set)
      if (!g.has_edge(v, w)) {
        all = false;
        break;
      }
    if (all) b_set.push_back(v);
  }

  // Case 2: some x in B has neighbors beyond A; removing it disconnects G.
  for (int x : b_set) {
    if (g.degree(x) == (int)a_set.size()) continue;
    std::vector<int> rest;
    for (int w = 0; w < g.n; ++w)
      if (w != x) rest.push_back(w);
    auto pieces = g.induced(rest).components();
    if (pieces.size() < 2) return std::nullopt;  // hypotheses violated
    for (auto& piece : pieces) {
      std::vector<int> verts;
      for (int local : piece) verts.push_back(rest[local]);
      verts.push_back(x);
      std::sort(verts.begin(), verts.end());
      if (component_is_tree(g, verts)) continue;
      int x_local = (int)(std::lower_bound(verts.begin(), verts.end(), x) -
                          verts.begin());
      return color_piece_and_fill(g, verts, x_local);
    }
    return std::nullopt;  // all pieces trees would make G a tree
  }

  // Case 3: N(x) = A for every x in B.
  int x1 = b_set[0], x2 = b_set[1];
  std::vector<int> rest;
  for (int w = 0; w < g.n; ++w)
    if (w != x1 && w != x2) rest.push_back(w);
  SimpleGraph gp = g.induced(rest);

  if (!gp.is_tree()) {
    // Case 3.1: recurse on G', give x1 = x2 an element commuting with the
    // product over A; their square is central so A's products stay valid.
    auto sub_phi = color_rec(gp);
    if (!sub_phi) return std::nullopt;
    IjkColoring phi(g.n);
    for (size_t idx = 0; idx < rest.size(); ++idx) phi[rest[idx]] = (*sub_phi)[idx];
    Q8 prod = q8_one();
    for (int w : a_set) prod = q8_mul(prod, phi[w]);
    Q8 chosen = prod.axis == Axis::One ? q8_i() : Q8{1, prod.axis};
    phi[x1] = phi[x2] = chosen;
    return phi;
  }

  // Case 3.2: G' is a tree, so G is complete bipartite; color each part
  // with a product of +-1.
  std::vector<int> part2;
  for (int v = 0; v < g.n; ++v)
    if (side[v] != side[0]) part2.push_back(v);
  for (int u : part1)
    for (int w : part2)
      if (!g.has_edge(u, w)) return std::nullopt;  // hypotheses violated
  IjkColoring phi(g.n);
  auto fill_part = [&](const std::vector<int>& part, Q8 pad) {
    if (part.size() % 2 == 0) {
      for (int v : part) phi[v] = pad;
    } else {
      for (size_t idx = 0; idx < part.size(); ++idx)
        phi[part[idx]] = idx < 3 ? kAxes[idx] : pad;
    }
  };
  fill_part(part1, q8_i());
  fill_part(part2, q8_j());
  return phi;
}

std::optional<IjkColoring> ijk_coloring(const SimpleGraph& g) {
  auto phi = color_rec(g);
  if (!phi) return std::nullopt;
  if (!verify_coloring(g, *phi)) return std::nullopt;
  return phi;
}

GraphVerdict classify(const SimpleGraph& g) {
  GraphVerdict verdict;
  if (g.acyclic()) {
    verdict.kind = GraphClassKind::Tree;
    return verdict;
  }
  if (auto cyc = find_induced_cycle_ne4(g)) {
    if (!verify_induced_cycle(g, *cyc))
      throw InternalError("induced cycle witness failed verification");
    verdict.kind = GraphClassKind::InducedCycle;
    verdict.cycle = *cyc;
    return verdict;
  }
  if (auto map6 = find_induced_g0(g)) {
    if (!verify_induced_g0(g, *map6))
      throw InternalError("induced g0 witness failed verification");
    verdict.kind = GraphClassKind::InducedG0;
    verdict.g0_vertices = *map6;
    return verdict;
  }
  if (auto phi = ijk_coloring(g)) {
    verdict.kind = GraphClassKind::Coloring;
    verdict.coloring = *phi;
    return verdict;
  }
  throw InternalError(
      "classification exhausted all four cases; the structure theorem "
      "guarantees this cannot happen");
}

// ---- isomorphism-class enumeration ---------------------------------------

static uint64_t canonical_code(const SimpleGraph& g) {
  std::vector<uint64_t> adj(g.n, 0);
  for (int v = 0; v < g.n; ++v) adj[v] = g.neighbor_mask(v);
  std::vector<int> perm(g.n);
  for (int v = 0; v < g.n; ++v) perm[v] = v;
  uint64_t best = ~0ull;
  do {
    uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v, ++bit)
        if (adj[perm[u]] >> perm[v] & 1) code |= 1ull << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

static SimpleGraph graph_from_code(int n, uint64_t code) {
  SimpleGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

std::vector<SimpleGraph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 8)
    throw InputError(Err::BadArgument, "enumeration supported for 1..8 vertices");
  std::set<uint64_t> codes{0};  // single vertex, no edges
  for (int size = 2; size <= n; ++size) {
    std::set<uint64_t> next;
    for (uint64_t code : codes) {
      SimpleGraph base = graph_from_code(size - 1, code);
      SimpleGraph grown = base;
      grown.n = size;
      for (uint32_t mask = 0; mask < (1u << (size - 1)); ++mask) {
        SimpleGraph h = grown;
        for (int v = 0; v < size - 1; ++v)
          if (mask >> v & 1) h.add_edge(v, size - 1);
        next.insert(canonical_code(h));
      }
    }
    codes = std::move(next);
  }
  std::vector<SimpleGraph> out;
  out.reserve(codes.size());
  for (uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace linkrep
