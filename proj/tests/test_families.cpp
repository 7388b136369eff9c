#include <cstdlib>

#include "doctest.h"
#include "linkrep/alexander.hpp"
#include "linkrep/errors.hpp"
#include "linkrep/families.hpp"
#include "linkrep/graphs.hpp"

using namespace linkrep;

namespace {

Err family_err(const std::string& name) {
  try {
    named(name);
  } catch (const InputError& e) {
    return e.code;
  }
  FAIL("expected failure for: " << name);
  return Err::BadArgument;
}

}  // namespace

TEST_CASE("chain generators") {
  // chain(1) is a kinked unknot; chain(2) is the calibration Hopf code.
  CHECK(chain(1).component_count() == 1);
  CHECK(to_pd_string(chain(2)) == "PD[X[1,3,2,4], X[3,1,4,2]]");
  for (int n = 1; n <= 6; ++n) {
    LinkDiagram d = chain(n);
    CHECK(d.component_count() == n);
    CHECK(is_planar(d));
    SimpleGraph g = linking_graph(d);
    // Path graph on n vertices.
    CHECK(g.edge_count() == n - 1);
    CHECK(g.acyclic());
    CHECK(g.connected());
    CHECK(link_determinant(d) == (BigInt(1) << (n - 1)));
  }
}

TEST_CASE("hopf forest realizes any forest as a linking graph") {
  SimpleGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  LinkDiagram d = hopf_forest(star);
  CHECK(d.component_count() == 4);
  CHECK(linking_graph(d).edges == star.edges);
  CHECK(link_determinant(d) == 8);
  CHECK(is_planar(d));

  // Isolated vertices become split kinked unknots.
  SimpleGraph dots(2);
  LinkDiagram u = hopf_forest(dots);
  CHECK(u.component_count() == 2);
  CHECK(linking_graph(u).edge_count() == 0);
  AlexanderReport r = alexander_report(u);
  CHECK(r.multivariable.is_zero());
  CHECK(r.determinant == 0);
  CHECK(r.multi_norm == 0);

  // Mixed: one edge plus an isolated vertex.
  SimpleGraph mix(3);
  mix.add_edge(1, 2);
  LinkDiagram m = hopf_forest(mix);
  CHECK(m.component_count() == 3);
  CHECK(linking_graph(m).edges == mix.edges);
  CHECK(link_determinant(m) == 0);  // split diagrams have determinant 0

  // Single edge: exactly the Hopf link.
  SimpleGraph e(2);
  e.add_edge(0, 1);
  CHECK(to_pd_string(hopf_forest(e)) == "PD[X[1,3,2,4], X[3,1,4,2]]");

  // Cyclic or empty inputs are rejected.
  SimpleGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  try {
    hopf_forest(tri);
    FAIL("expected NotAForest");
  } catch (const InputError& ex) {
    CHECK(ex.code == Err::NotAForest);
  }
  SimpleGraph empty(0);
  CHECK_THROWS_AS((void)hopf_forest(empty), InputError);
}

TEST_CASE("closed chain with twists: determinant formula across the grid") {
  // det = 2^(u-1) * |u + 2v|, linking graph the u-cycle.
  for (int u = 3; u <= 6; ++u) {
    for (int v = -3; v <= 3; ++v) {
      LinkDiagram d = luv(u, v);
      CHECK(d.component_count() == u);
      CHECK(d.crossing_count() == 2 * u + std::abs(v));
      CHECK(is_planar(d));
      SimpleGraph g = linking_graph(d);
      CHECK(g.n == u);
      CHECK(g.edge_count() == u);
      CHECK(g.connected());
      CHECK_FALSE(g.acyclic());
      for (int i = 0; i < u; ++i) CHECK(g.degree(i) == 2);
      BigInt expected = (BigInt(1) << (u - 1)) * std::abs(u + 2 * v);
      CHECK(link_determinant(d) == expected);
    }
  }
  CHECK(family_err("Luv(2,0)") == Err::UTooSmall);
}

TEST_CASE("twisted chain matches the stored five-component fixture") {
  AlexanderReport a = alexander_report(luv(5, -3));
  AlexanderReport b = alexander_report(named("L5m3"));
  CHECK(a.multivariable == b.multivariable);
  CHECK(a.multi_norm == 300);
  CHECK(a.determinant == 16);
  CHECK(a.instanton_bound == 19);
  CHECK(luv(5, -3).crossing_count() == named("L5m3").crossing_count());
}

TEST_CASE("mirrored twisted chain matches the determinant-zero fixture") {
  AlexanderReport a = alexander_report(mirror(luv(4, -2)));
  AlexanderReport b = alexander_report(named("L8n8"));
  CHECK(a.determinant == 0);
  CHECK(b.determinant == 0);
  CHECK(a.multi_norm == b.multi_norm);
  CHECK(a.single_norm == b.single_norm);
  CHECK(a.multi_norm == 36);
}

TEST_CASE("stored diagrams parse and have the advertised shapes") {
  CHECK(named("Hopf").component_count() == 2);
  CHECK(named("Trefoil").component_count() == 1);
  CHECK(named("L6n1").component_count() == 3);
  CHECK(named("L8n8").component_count() == 4);
  CHECK(named("L5m3").component_count() == 5);
  CHECK(named("G0Link").component_count() == 6);
  for (const char* n : {"Hopf", "Trefoil", "L6n1", "L8n8", "L5m3", "G0Link",
                        "Chain(5)", "Luv(4,2)", "HopfForest(3:1-3)"}) {
    LinkDiagram d = named(n);
    CHECK(d.crossing_count() > 0);
    CHECK(is_planar(d));
  }
  // The six-component fixture's linking graph is the two-squares graph, up
  // to relabeling.
  auto found = find_induced_g0(linking_graph(named("G0Link")));
  REQUIRE(found.has_value());
  CHECK(linking_graph(named("G0Link")).edge_count() == 7);
}

TEST_CASE("parametric names") {
  CHECK(named("Chain(4)").component_count() == 4);
  CHECK(link_determinant(named("Luv(3,1)")) == 20);
  LinkDiagram hf = named("HopfForest(3:1-2,2-3)");
  CHECK(hf.component_count() == 3);
  CHECK(linking_graph(hf).has_edge(0, 1));
  CHECK(linking_graph(hf).has_edge(1, 2));
  CHECK_FALSE(linking_graph(hf).has_edge(0, 2));
  CHECK(named("HopfForest(2:)").component_count() == 2);
  CHECK(family_err("HopfForest(3:1-2,2-3,1-3)") == Err::NotAForest);
  CHECK(family_err("Nonesuch") == Err::UnknownName);
  CHECK(family_err("Chain(0)") == Err::BadArgument);
  CHECK(family_err("Chain(x)") == Err::BadArgument);
  CHECK(family_err("Luv(3)") == Err::BadArgument);
  // Negative twists parse.
  CHECK(link_determinant(named("Luv(4,-2)")) == 0);
}

TEST_CASE("family_names lists every stored diagram") {
  std::vector<std::string> names = family_names();
  for (const char* want :
       {"Hopf", "Trefoil", "L6n1", "L8n8", "L5m3", "G0Link"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
}
