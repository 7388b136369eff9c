#include <vector>

#include "doctest.h"
#include "linkrep/errors.hpp"
#include "linkrep/families.hpp"
#include "linkrep/reps.hpp"

using namespace linkrep;

namespace {

DihedralQuat refl(int num, int den = 1) {
  return DihedralQuat::Reflection(Rat(num, den));
}

}  // namespace

TEST_CASE("Hopf link: two solutions, all abelian") {
  DihedralSolutionSet s = dihedral_solutions(named("Hopf"));
  CHECK(s.base_arc == 1);
  CHECK(s.finite);
  CHECK(s.count == 2);
  CHECK(s.abelian_count == 2);
  CHECK(s.free_rank == 0);
  std::vector<MeridianTracelessRep> sols = enumerate_dihedral(s);
  CHECK(sols.size() == 2);
  for (const auto& r : sols) {
    CHECK(r.verified);
    CHECK_FALSE(r.irreducible);
    RepVerification v = verify_rep(s.diagram, r);
    CHECK(v.passed);
    CHECK_FALSE(v.irreducible);
  }
}

TEST_CASE("trefoil: three solutions, two irreducible") {
  DihedralSolutionSet s = dihedral_solutions(named("Trefoil"));
  CHECK(s.base_arc == 0);
  CHECK(s.finite);
  CHECK(s.count == 3);
  CHECK(s.abelian_count == 1);
  std::vector<MeridianTracelessRep> sols = enumerate_dihedral(s);
  REQUIRE(sols.size() == 3);
  CHECK(sols[0].arc_values ==
        std::vector<DihedralQuat>{refl(0), refl(0), refl(0)});
  CHECK_FALSE(sols[0].irreducible);
  // The two irreducible solutions assign the three cube-root angles.
  CHECK(sols[1].arc_values ==
        std::vector<DihedralQuat>{refl(0), refl(4, 3), refl(2, 3)});
  CHECK(sols[2].arc_values ==
        std::vector<DihedralQuat>{refl(0), refl(2, 3), refl(4, 3)});
  for (int i : {1, 2}) {
    CHECK(sols[i].irreducible);
    CHECK(sols[i].verified);
    RepVerification v = verify_rep(s.diagram, sols[i]);
    CHECK(v.passed);
    CHECK(v.all_relations);
    CHECK(v.all_traceless);
    CHECK(v.irreducible);
    CHECK(v.base_is_i);
  }
  // Tampering with one value breaks some relation.
  MeridianTracelessRep bad = sols[1];
  bad.arc_values[2] = refl(1, 3);
  RepVerification v = verify_rep(s.diagram, bad);
  CHECK_FALSE(v.passed);
  CHECK_FALSE(v.all_relations);
  bool some_failed = false;
  for (char ok : v.relation_ok) some_failed = some_failed || !ok;
  CHECK(some_failed);
}

TEST_CASE("three-ring chain: all four solutions abelian") {
  DihedralSolutionSet s = dihedral_solutions(chain(3));
  CHECK(s.finite);
  CHECK(s.count == 4);
  CHECK(s.abelian_count == 4);
  std::vector<MeridianTracelessRep> sols = enumerate_dihedral(s);
  CHECK(sols.size() == 4);
  for (const auto& r : sols) CHECK_FALSE(r.irreducible);
}

TEST_CASE("closed 3-braid: binary dihedral images are all abelian") {
  // Determinant 4 equals the solution count and the abelian count, so no
  // irreducible image lives in the binary dihedral family; the irreducible
  // witness for this link must come from a quaternion coloring instead.
  DihedralSolutionSet s = dihedral_solutions(named("L6n1"));
  CHECK(s.finite);
  CHECK(s.count == 4);
  CHECK(s.abelian_count == 4);
  for (const auto& r : enumerate_dihedral(s)) CHECK_FALSE(r.irreducible);
}

TEST_CASE("determinant-zero link: infinite solution set with free direction") {
  DihedralSolutionSet s = dihedral_solutions(named("L8n8"));
  CHECK_FALSE(s.finite);
  CHECK(s.free_rank == 1);
  CHECK(s.abelian_count == 8);
  std::vector<MeridianTracelessRep> sols = enumerate_dihedral(s);
  REQUIRE(sols.size() == 4);
  for (const auto& r : sols) {
    CHECK(r.verified);
    CHECK(r.irreducible);
    CHECK(verify_rep(s.diagram, r).passed);
  }
  // The free direction takes the sample angle: the first solution starts
  // with reflections at 7/4 and 1/4.
  CHECK(sols[0].arc_values[0] == refl(7, 4));
  CHECK(sols[0].arc_values[1] == refl(1, 4));
  CHECK(sols[0].arc_values[6] == refl(0));
  // More samples multiply the enumeration.
  std::vector<MeridianTracelessRep> more =
      enumerate_dihedral(s, {Rat(1, 4), Rat(1, 3)});
  CHECK(more.size() == 8);
  // No samples for a free direction is an input error.
  try {
    enumerate_dihedral(s, {});
    FAIL("expected NoSamplesForFreeDirection");
  } catch (const InputError& e) {
    CHECK(e.code == Err::NoSamplesForFreeDirection);
  }
}

TEST_CASE("rep from coloring: closed 3-braid with i, j, k") {
  LinkDiagram d = named("L6n1");
  MeridianTracelessRep rep = rep_from_coloring(d, {q8_i(), q8_j(), q8_k()});
  CHECK(rep.verified);
  CHECK(rep.irreducible);
  CHECK(rep.arc_values.size() == 6);
  RepVerification v = verify_rep(d, rep);
  CHECK(v.passed);
  CHECK(v.irreducible);
  // Every arc value is a signed copy of its component's axis.
  WirtingerPresentation p = wirtinger(d);
  Q8 axes[3] = {q8_i(), q8_j(), q8_k()};
  for (int a = 0; a < p.generator_count; ++a) {
    Q8 q = rep.arc_values[a].to_q8();
    CHECK(q.axis == axes[p.component_of[a]].axis);
  }
}

TEST_CASE("rep from coloring: determinant-zero link with i, j, i, j") {
  LinkDiagram d = named("L8n8");
  MeridianTracelessRep rep =
      rep_from_coloring(d, {q8_i(), q8_j(), q8_i(), q8_j()});
  CHECK(rep.verified);
  CHECK(rep.irreducible);
  CHECK(verify_rep(d, rep).passed);
}

TEST_CASE("rep from coloring rejects invalid colorings") {
  // (i, j) on the Hopf link: the linking-graph condition fails (each vertex
  // must commute with its neighborhood product).
  try {
    rep_from_coloring(named("Hopf"), {q8_i(), q8_j()});
    FAIL("expected InvalidColoring");
  } catch (const InputError& e) {
    CHECK(e.code == Err::InvalidColoring);
  }
  // Constant colorings are rejected as well.
  try {
    rep_from_coloring(named("L6n1"), {q8_i(), q8_i(), q8_i()});
    FAIL("expected InvalidColoring");
  } catch (const InputError& e) {
    CHECK(e.code == Err::InvalidColoring);
  }
  // Wrong vertex count.
  CHECK_THROWS_AS(rep_from_coloring(named("Hopf"), {q8_i()}), InputError);
}

TEST_CASE("verify_rep validates sizes") {
  MeridianTracelessRep rep;
  rep.arc_values = {refl(0)};
  try {
    verify_rep(named("Hopf"), rep);
    FAIL("expected BadArgument");
  } catch (const InputError& e) {
    CHECK(e.code == Err::BadArgument);
  }
}

TEST_CASE("irreducibility means some pair of values anticommutes") {
  CHECK_FALSE(values_irreducible({refl(0), refl(0)}));
  CHECK_FALSE(values_irreducible({refl(0), refl(1)}));  // i and -i commute
  CHECK(values_irreducible({refl(0), refl(1, 2)}));     // i and j do not
  CHECK(values_irreducible(
      {refl(0), DihedralQuat::Rotation(Rat(1, 2))}));  // i and k
  CHECK_FALSE(values_irreducible({}));
  // Rotations commute among themselves.
  CHECK_FALSE(values_irreducible({DihedralQuat::Rotation(Rat(1, 2)),
                                  DihedralQuat::Rotation(Rat(3, 2))}));
}

TEST_CASE("base arc can be overridden") {
  LinkDiagram d = named("Trefoil");
  DihedralSolutionSet s = dihedral_solutions(d, 2);
  CHECK(s.base_arc == 2);
  CHECK(s.count == 3);
  std::vector<MeridianTracelessRep> sols = enumerate_dihedral(s);
  CHECK(sols.size() == 3);
  for (const auto& r : sols) {
    CHECK(r.verified);
    CHECK(r.arc_values[2] == refl(0));
  }
  CHECK_THROWS_AS(dihedral_solutions(d, 7), InputError);
}
