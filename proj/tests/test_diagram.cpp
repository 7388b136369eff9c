#include <vector>

#include "doctest.h"
#include "linkrep/diagram.hpp"
#include "linkrep/errors.hpp"

using namespace linkrep;

namespace {

// Appendix-style PD codes used as fixed fixtures throughout the suite.
const char* kHopf = "PD[X[1,3,2,4], X[3,1,4,2]]";
const char* kTrefoil = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]";
const char* kL5m3 =
    "PD[X[5,1,6,4], X[1,20,2,19], X[18,3,19,2], X[3,7,4,6], X[9,5,10,8], "
    "X[7,11,8,10], X[13,9,14,12], X[11,15,12,14], X[15,23,16,24], "
    "X[24,16,25,13], X[25,23,26,22], X[21,17,22,26], X[17,21,18,20]]";
const char* kG0Link =
    "PD[X[5,1,6,4], X[3,7,4,6], X[16,1,17,2], X[2,15,3,16], X[23,7,24,8], "
    "X[8,28,9,23], X[9,13,10,12], X[11,5,12,10], X[22,13,19,14], "
    "X[14,21,11,22], X[19,28,20,27], X[26,21,27,20], X[24,15,25,18], "
    "X[17,26,18,25]]";

std::vector<int> all_signs(const LinkDiagram& d) {
  std::vector<int> s;
  for (int i = 0; i < d.crossing_count(); ++i)
    s.push_back(crossing_sign(d, i));
  return s;
}

Err parse_err(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const InputError& e) {
    return e.code;
  }
  FAIL("expected parse failure for: " << text);
  return Err::MalformedPd;
}

}  // namespace

TEST_CASE("positive Hopf link calibrates the sign convention") {
  LinkDiagram d = parse_pd(kHopf);
  CHECK(d.crossing_count() == 2);
  CHECK(d.edge_count == 4);
  CHECK(d.component_count() == 2);
  CHECK(d.components ==
        std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  // Both crossings positive, so the linking number is +1.
  CHECK(all_signs(d) == std::vector<int>{1, 1});
  CHECK(linking_number(d, 0, 1) == 1);
  SimpleGraph g = linking_graph(d);
  CHECK(g.n == 2);
  CHECK(g.has_edge(0, 1));
  // Cyclic successor wraps inside each component interval.
  CHECK(d.succ(1) == 2);
  CHECK(d.succ(2) == 1);
  CHECK(d.succ(4) == 3);
  CHECK(d.component_of(2) == 0);
  CHECK(d.component_of(3) == 1);
}

TEST_CASE("parser accepts bare tokens and round-trips through to_pd_string") {
  LinkDiagram a = parse_pd(kHopf);
  LinkDiagram b = parse_pd("X[1,3,2,4]  X[3,1,4,2]");
  LinkDiagram c = parse_pd(" PD[ X[1, 3, 2, 4] ,X[3 ,1,4,2] ] ");
  CHECK(to_pd_string(a) == kHopf);
  CHECK(to_pd_string(b) == kHopf);
  CHECK(to_pd_string(c) == kHopf);
  CHECK(to_pd_string(parse_pd(to_pd_string(parse_pd(kL5m3)))) ==
        to_pd_string(parse_pd(kL5m3)));
}

TEST_CASE("parser rejects malformed and inconsistent codes") {
  CHECK(parse_err("") == Err::MalformedPd);
  CHECK(parse_err("X[1,2,3]") == Err::MalformedPd);
  CHECK(parse_err("X[1,2,3,4,5]") == Err::MalformedPd);
  CHECK(parse_err("PD[X[1,3,2,4], X[3,1,4,2]") == Err::MalformedPd);
  CHECK(parse_err("Y[1,3,2,4] X[3,1,4,2]") == Err::MalformedPd);
  CHECK(parse_err("X[0,1,2,3] X[2,3,0,1]") == Err::MalformedPd);
  // A single crossing uses each label once: multiplicity failure.
  CHECK(parse_err("X[1,3,2,4]") == Err::InvalidEdgeMultiplicity);
  // Labels must be exactly 1..2n each twice.
  CHECK(parse_err("X[1,3,2,4] X[3,1,4,5]") == Err::InvalidEdgeMultiplicity);
  // Valid multiplicities but no consistent strand orientation.
  CHECK(parse_err("X[1,2,3,4] X[1,2,3,4]") == Err::BrokenComponentChain);
}

TEST_CASE("trefoil: one component, all negative crossings") {
  LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.components == std::vector<std::pair<int, int>>{{1, 6}});
  CHECK(all_signs(d) == std::vector<int>{-1, -1, -1});
  CHECK(arcs(d).count == 3);
  CHECK(linking_graph(d).n == 1);
  CHECK(linking_graph(d).edge_count() == 0);
}

TEST_CASE("mirror is an involution that flips every sign") {
  for (const char* code : {kHopf, kTrefoil, kL5m3, kG0Link}) {
    LinkDiagram d = parse_pd(code);
    LinkDiagram m = mirror(d);
    CHECK(m.crossing_count() == d.crossing_count());
    std::vector<int> s = all_signs(d), t = all_signs(m);
    for (size_t i = 0; i < s.size(); ++i) CHECK(t[i] == -s[i]);
    CHECK(to_pd_string(mirror(m)) == to_pd_string(d));
    // Odd linking numbers stay odd: the linking graph is preserved.
    CHECK(linking_graph(m).edges == linking_graph(d).edges);
    for (int i = 0; i < d.component_count(); ++i)
      for (int j = i + 1; j < d.component_count(); ++j)
        CHECK(linking_number(m, i, j) == -linking_number(d, i, j));
  }
}

TEST_CASE("kinked unknot") {
  LinkDiagram d = kinked_unknot();
  CHECK(d.crossing_count() == 1);
  CHECK(d.component_count() == 1);
  CHECK(arcs(d).count == 1);
  CHECK(face_count(d) == 3);
  CHECK(is_planar(d));
}

TEST_CASE("five-component chain-with-clasp fixture") {
  LinkDiagram d = parse_pd(kL5m3);
  CHECK(d.crossing_count() == 13);
  CHECK(d.edge_count == 26);
  CHECK(d.component_count() == 5);
  CHECK(d.components == std::vector<std::pair<int, int>>{
                            {1, 4}, {5, 8}, {9, 12}, {13, 16}, {17, 26}});
  CHECK(all_signs(d) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, -1, -1, 1, 1,
                                         1});
  // Linking graph is the 5-cycle 0-1-2-3-4-0.
  SimpleGraph g = linking_graph(d);
  CHECK(g.n == 5);
  CHECK(g.edges == std::set<std::pair<int, int>>{
                       {0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(linking_number(d, 3, 4) == -1);
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(linking_number(d, 0, 2) == 0);
  CHECK(arcs(d).count == 13);
}

TEST_CASE("six-component fixture whose linking graph needs the sixth case") {
  LinkDiagram d = parse_pd(kG0Link);
  CHECK(d.crossing_count() == 14);
  CHECK(d.edge_count == 28);
  CHECK(d.component_count() == 6);
  SimpleGraph g = linking_graph(d);
  CHECK(g.n == 6);
  CHECK(g.edges == std::set<std::pair<int, int>>{{0, 1},
                                                 {0, 3},
                                                 {1, 2},
                                                 {1, 5},
                                                 {2, 4},
                                                 {3, 5},
                                                 {4, 5}});
  CHECK(all_signs(d) ==
        std::vector<int>{1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1});
  // Even linking numbers leave no edge: components 0 and 2 cross but cancel.
  CHECK(linking_number(d, 0, 2) == 0);
}

TEST_CASE("arc partition groups edges across over-strands") {
  // In the Hopf code each component's two edges join into one arc per
  // component (each passes over once).
  Arcs a = arcs(parse_pd(kHopf));
  CHECK(a.count == 2);
  CHECK(a.arc_of_edge[1] == a.arc_of_edge[2]);
  CHECK(a.arc_of_edge[3] == a.arc_of_edge[4]);
  CHECK(a.arc_of_edge[1] != a.arc_of_edge[3]);
  CHECK(a.component[a.arc_of_edge[1]] == 0);
  CHECK(a.component[a.arc_of_edge[3]] == 1);
  CHECK(a.min_edge[a.arc_of_edge[3]] == 3);
}

TEST_CASE("disjoint union relabels and never links") {
  LinkDiagram h = parse_pd(kHopf);
  LinkDiagram t = parse_pd(kTrefoil);
  LinkDiagram u = disjoint_union(h, t);
  CHECK(u.crossing_count() == 5);
  CHECK(u.edge_count == 10);
  CHECK(u.component_count() == 3);
  CHECK(all_signs(u) == std::vector<int>{1, 1, -1, -1, -1});
  CHECK(linking_number(u, 0, 2) == 0);
  CHECK(linking_number(u, 1, 2) == 0);
  CHECK(linking_number(u, 0, 1) == 1);
  SimpleGraph g = linking_graph(u);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(is_planar(u));
}

TEST_CASE("Euler-characteristic planarity check") {
  for (const char* code : {kHopf, kTrefoil, kL5m3, kG0Link})
    CHECK(is_planar(parse_pd(code)));
  // V - E + F: Hopf has 2 vertices, 4 edges, 4 faces.
  CHECK(face_count(parse_pd(kHopf)) == 4);
  CHECK(face_count(parse_pd(kTrefoil)) == 5);
  CHECK(face_count(parse_pd(kL5m3)) == 15);
  CHECK(face_count(parse_pd(kG0Link)) == 16);
  // A virtual two-crossing code: combinatorially consistent but not drawable
  // in the plane (2 vertices, 4 edges, only 2 faces).
  LinkDiagram v = parse_pd("X[1,3,2,4] X[2,4,1,3]");
  CHECK(v.crossing_count() == 2);
  CHECK(face_count(v) == 2);
  CHECK_FALSE(is_planar(v));
}

TEST_CASE("validate_diagram applies the same checks as the parser") {
  std::vector<Crossing> quads = {{{1, 3, 2, 4}}, {{3, 1, 4, 2}}};
  LinkDiagram d = validate_diagram(quads);
  CHECK(to_pd_string(d) == kHopf);
  std::vector<Crossing> bad = {{{1, 3, 2, 4}}};
  CHECK_THROWS_AS((void)validate_diagram(bad), InputError);
}
