#include "linkrep/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace linkrep {

const char* err_name(Err c) {
  switch (c) {
    case Err::MalformedPd: return "MalformedPd";
    case Err::InvalidEdgeMultiplicity: return "InvalidEdgeMultiplicity";
    case Err::BrokenComponentChain: return "BrokenComponentChain";
    case Err::SameComponent: return "SameComponent";
    case Err::SingleComponent: return "SingleComponent";
    case Err::UTooSmall: return "UTooSmall";
    case Err::NotAForest: return "NotAForest";
    case Err::UnknownName: return "UnknownName";
    case Err::NotOddPrime: return "NotOddPrime";
    case Err::BasepointNotI: return "BasepointNotI";
    case Err::InvalidColoring: return "InvalidColoring";
    case Err::NoSamplesForFreeDirection: return "NoSamplesForFreeDirection";
    case Err::BadArgument: return "BadArgument";
  }
  return "?";
}

int LinkDiagram::component_of(int edge) const {
  for (int i = 0; i < (int)components.size(); ++i)
    if (edge >= components[i].first && edge <= components[i].second) return i;
  throw InternalError("edge label out of range");
}

int LinkDiagram::succ(int edge) const {
  auto [lo, hi] = components[component_of(edge)];
  return edge == hi ? lo : edge + 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LinkDiagram validate_diagram(std::vector<Crossing> crossings) {
  if (crossings.empty())
    throw InputError(Err::MalformedPd, "diagram has no crossings");
  LinkDiagram d;
  d.crossings = std::move(crossings);
  int m = (int)d.crossings.size();
  d.edge_count = 2 * m;

  // Every label in 1..2m exactly twice.
  std::vector<int> mult(d.edge_count + 1, 0);
  for (auto& c : d.crossings)
    for (int e : c.quad) {
      if (e < 1 || e > d.edge_count)
        throw InputError(Err::InvalidEdgeMultiplicity,
                         "edge label " + std::to_string(e) + " outside 1.." +
                             std::to_string(d.edge_count));
      ++mult[e];
    }
  for (int e = 1; e <= d.edge_count; ++e)
    if (mult[e] != 2)
      throw InputError(Err::InvalidEdgeMultiplicity,
                       "edge label " + std::to_string(e) + " appears " +
                           std::to_string(mult[e]) + " times (expected 2)");

  // Components: strands through a crossing stay together.
  UnionFind uf(d.edge_count + 1);
  for (auto& c : d.crossings) {
    uf.unite(c.quad[0], c.quad[2]);
    uf.unite(c.quad[1], c.quad[3]);
  }
  std::map<int, std::pair<int, int>> classes;  // root -> [min, max]
  std::map<int, int> class_size;
  for (int e = 1; e <= d.edge_count; ++e) {
    int r = uf.find(e);
    auto it = classes.find(r);
    if (it == classes.end()) {
      classes[r] = {e, e};
      class_size[r] = 1;
    } else {
      it->second.first = std::min(it->second.first, e);
      it->second.second = std::max(it->second.second, e);
      ++class_size[r];
    }
  }
  for (auto& [r, range] : classes) {
    int span = range.second - range.first + 1;
    if (span != class_size[r])
      throw InputError(Err::BrokenComponentChain,
                       "component edges are not a consecutive interval near edge " +
                           std::to_string(range.first));
    if (span < 2)
      throw InputError(Err::BrokenComponentChain,
                       "component with a single edge at " + std::to_string(range.first));
  }
  for (auto& [r, range] : classes) d.components.push_back(range);
  std::sort(d.components.begin(), d.components.end());

  // Under-strand transitions must follow the successor relation.
  for (auto& c : d.crossings)
    if (d.succ(c.quad[0]) != c.quad[2])
      throw InputError(Err::BrokenComponentChain,
                       "under strand " + std::to_string(c.quad[0]) + "->" +
                           std::to_string(c.quad[2]) + " is not a successor step");

  // Resolve the incoming over slot per crossing. Each edge is consumed
  // exactly once (as an incoming edge) and produced exactly once.
  std::vector<int> consumed(d.edge_count + 1, 0), produced(d.edge_count + 1, 0);
  for (auto& c : d.crossings) {
    ++consumed[c.quad[0]];
    ++produced[c.quad[2]];
  }
  d.over_in_slot.assign(m, 0);
  auto try_fix = [&](int ci) {
    if (d.over_in_slot[ci]) return;
    const auto& q = d.crossings[ci].quad;
    bool b_ok = d.succ(q[1]) == q[3];  // over runs b -> d
    bool d_ok = d.succ(q[3]) == q[1];  // over runs d -> b
    if (!b_ok && !d_ok)
      throw InputError(Err::BrokenComponentChain,
                       "over edges " + std::to_string(q[1]) + "," + std::to_string(q[3]) +
                           " are not consecutive in their component");
    if (b_ok && d_ok) {
      // Both readings are successor-consistent (two-edge component); decide
      // by the consumed/produced balance when it is already forced.
      if (consumed[q[1]] || produced[q[3]]) b_ok = false;
      if (consumed[q[3]] || produced[q[1]]) d_ok = false;
      if (b_ok && d_ok) return;  // still free; deferred
      if (!b_ok && !d_ok)
        throw InputError(Err::BrokenComponentChain,
                         "over orientation conflict at X[" + std::to_string(q[0]) + ",...]");
    }
    d.over_in_slot[ci] = b_ok ? 1 : 3;
    int in = b_ok ? q[1] : q[3];
    int out = b_ok ? q[3] : q[1];
    ++consumed[in];
    ++produced[out];
  };
  for (;;) {
    bool progress = false, pending = false;
    for (int ci = 0; ci < m; ++ci) {
      if (d.over_in_slot[ci]) continue;
      try_fix(ci);
      if (d.over_in_slot[ci])
        progress = true;
      else
        pending = true;
    }
    if (!pending) break;
    if (!progress) {
      // Fully ambiguous crossings remain: components that only ever pass
      // over, with two edges. Orient the lowest such crossing so its lower
      // over-edge is the incoming one, then continue propagating.
      for (int ci = 0; ci < m; ++ci) {
        if (d.over_in_slot[ci]) continue;
        const auto& q = d.crossings[ci].quad;
        int in = std::min(q[1], q[3]);
        int out = in == q[1] ? q[3] : q[1];
        d.over_in_slot[ci] = in == q[1] ? 1 : 3;
        ++consumed[in];
        ++produced[out];
        break;
      }
    }
  }
  for (int e = 1; e <= d.edge_count; ++e)
    if (consumed[e] != 1 || produced[e] != 1)
      throw InputError(Err::BrokenComponentChain,
                       "edge " + std::to_string(e) + " is not traversed once in, once out");
  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<Crossing> crossings;
  size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  // Separators between crossings: whitespace and/or commas.
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ','))
      ++i;
  };
  skip_ws();
  bool wrapped = false;
  bool closed = false;
  if (text.compare(i, 3, "PD[") == 0) {
    wrapped = true;
    i += 3;
  }
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    if (wrapped && text[i] == ']') {
      ++i;
      closed = true;
      break;
    }
    if (text[i] != 'X')
      throw InputError(Err::MalformedPd,
                       "expected 'X' at position " + std::to_string(i));
    ++i;
    if (i >= text.size() || text[i] != '[')
      throw InputError(Err::MalformedPd, "expected '[' after X");
    ++i;
    Crossing c{};
    for (int k = 0; k < 4; ++k) {
      skip_spaces();
      size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (start == i)
        throw InputError(Err::MalformedPd, "expected integer in X[...]");
      c.quad[k] = std::stoi(text.substr(start, i - start));
      if (c.quad[k] < 1)
        throw InputError(Err::MalformedPd, "edge labels start at 1");
      skip_spaces();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw InputError(Err::MalformedPd, "X[...] needs 4 comma-separated labels");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw InputError(Err::MalformedPd, "X[...] needs exactly 4 labels");
    ++i;
    crossings.push_back(c);
  }
  if (wrapped && !closed)
    throw InputError(Err::MalformedPd, "unterminated PD[...] wrapper");
  skip_ws();
  if (i != text.size())
    throw InputError(Err::MalformedPd, "trailing characters after PD expression");
  return validate_diagram(std::move(crossings));
}

std::string to_pd_string(const LinkDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    if (i) os << ", ";
    const auto& q = d.crossings[i].quad;
    os << "X[" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "]";
  }
  os << "]";
  return os.str();
}

Arcs arcs(const LinkDiagram& d) {
  UnionFind uf(d.edge_count + 1);
  for (auto& c : d.crossings) uf.unite(c.quad[1], c.quad[3]);
  std::map<int, int> root_to_arc;  // keyed by lowest edge of the class
  std::vector<int> lowest(d.edge_count + 1, 0);
  for (int e = 1; e <= d.edge_count; ++e) {
    int r = uf.find(e);
    if (!lowest[r]) lowest[r] = e;
  }
  Arcs a;
  a.arc_of_edge.assign(d.edge_count + 1, -1);
  for (int e = 1; e <= d.edge_count; ++e) {
    int low = lowest[uf.find(e)];
    auto it = root_to_arc.find(low);
    if (it == root_to_arc.end()) {
      it = root_to_arc.emplace(low, a.count++).first;
      a.min_edge.push_back(low);
      a.component.push_back(d.component_of(low));
    }
    a.arc_of_edge[e] = it->second;
  }
  return a;
}

int face_count(const LinkDiagram& d) {
  int n = d.crossing_count();
  // The two (crossing, slot) incidences of each edge label.
  std::vector<std::array<int, 2>> inc(d.edge_count + 1, {-1, -1});
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c].quad[s];
      inc[e][inc[e][0] < 0 ? 0 : 1] = c * 4 + s;
    }
  // A dart is an incidence we just arrived through. Walking a face boundary:
  // turn to the counterclockwise-next slot, cross that edge to its far end.
  std::vector<char> seen(4 * n, 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int dart = start;
    while (!seen[dart]) {
      seen[dart] = 1;
      int c = dart / 4, s = dart % 4;
      int exit = c * 4 + (s + 1) % 4;
      int e = d.crossings[c].quad[(s + 1) % 4];
      dart = inc[e][0] == exit ? inc[e][1] : inc[e][0];
    }
  }
  return faces;
}

bool is_planar(const LinkDiagram& d) {
  int n = d.crossing_count();
  if (n == 0) return true;
  // Connected pieces of the projection, via shared edge labels.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> owner(d.edge_count + 1, -1);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[c].quad[s];
      if (owner[e] < 0)
        owner[e] = c;
      else
        parent[find(owner[e])] = find(c);
    }
  int pieces = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++pieces;
  // Each crossing carries 4 incidences and each edge 2, so E = 2V and the
  // Euler relation per sphere-embedded piece sums to V - 2V + F = 2 * pieces.
  return face_count(d) - n == 2 * pieces;
}

int crossing_sign(const LinkDiagram& d, int ci) {
  // Calibrated so that "X[1,3,2,4] X[3,1,4,2]" comes out +1/+1 (lk = +1):
  // there the balance rule forces the incoming over-edge into slot 3 at both
  // crossings. Mirroring swaps the slot and flips every sign.
  return d.over_in_slot[ci] == 3 ? 1 : -1;
}

int linking_number(const LinkDiagram& d, int comp_i, int comp_j) {
  if (comp_i == comp_j)
    throw InputError(Err::SameComponent, "linking number needs two distinct components");
  int twice = 0;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& q = d.crossings[ci].quad;
    int cu = d.component_of(q[0]);
    int co = d.component_of(q[1]);
    if ((cu == comp_i && co == comp_j) || (cu == comp_j && co == comp_i))
      twice += crossing_sign(d, ci);
  }
  if (twice % 2 != 0)
    throw InternalError("signed inter-component crossing count is odd");
  return twice / 2;
}

SimpleGraph linking_graph(const LinkDiagram& d) {
  int n = d.component_count();
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (linking_number(d, i, j) % 2 != 0) g.add_edge(i, j);
  return g;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossings.size());
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& q = d.crossings[ci].quad;
    // Relist the same planar vertex counterclockwise from the new incoming
    // under-edge (= the old incoming over-edge).
    if (d.over_in_slot[ci] == 1)
      out.push_back({{q[1], q[2], q[3], q[0]}});
    else
      out.push_back({{q[3], q[0], q[1], q[2]}});
  }
  return validate_diagram(std::move(out));
}

LinkDiagram kinked_unknot() {
  return validate_diagram({Crossing{{1, 2, 2, 1}}});
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> all = a.crossings;
  for (auto c : b.crossings) {
    for (auto& e : c.quad) e += a.edge_count;
    all.push_back(c);
  }
  return validate_diagram(std::move(all));
}

}  // namespace linkrep
