#include <random>

#include "doctest.h"
#include "linkrep/alexander.hpp"
#include "linkrep/families.hpp"

using namespace linkrep;

namespace {

const char* kHopf = "PD[X[1,3,2,4], X[3,1,4,2]]";
const char* kTrefoil = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]";

}  // namespace

TEST_CASE("positive Hopf link") {
  AlexanderReport r = alexander_report(parse_pd(kHopf));
  CHECK(r.components == 2);
  CHECK(r.multivariable.to_string() == "1");
  CHECK(r.single_variable.to_string() == "1 - x");
  CHECK(r.determinant == 2);
  CHECK(r.multi_norm == 4);
  CHECK(r.single_norm == 2);
  CHECK(r.instanton_bound == 2);
}

TEST_CASE("left trefoil") {
  AlexanderReport r = alexander_report(parse_pd(kTrefoil));
  CHECK(r.components == 1);
  CHECK(r.multivariable.to_string() == "1 - x + x^2");
  CHECK(r.single_variable == r.multivariable);
  CHECK(r.determinant == 3);
  CHECK(r.multi_norm == 3);
  CHECK(r.single_norm == 3);
  CHECK(r.instanton_bound == 3);
}

TEST_CASE("kinked unknot is trivial") {
  AlexanderReport r = alexander_report(kinked_unknot());
  CHECK(r.multivariable.to_string() == "1");
  CHECK(r.determinant == 1);
  CHECK(r.instanton_bound == 1);
}

TEST_CASE("three-component closed braid") {
  AlexanderReport r = alexander_report(named("L6n1"));
  CHECK(r.components == 3);
  CHECK(r.multivariable.to_string() == "1 - x1*x2*x3");
  CHECK(r.single_variable.to_string() == "1 - x - x^3 + x^4");
  CHECK(r.determinant == 4);
  CHECK(r.multi_norm == 16);
  CHECK(r.single_norm == 4);
  CHECK(r.instanton_bound == 4);
}

TEST_CASE("four-component link with vanishing determinant") {
  AlexanderReport r = alexander_report(named("L8n8"));
  CHECK(r.components == 4);
  CHECK(r.multivariable.to_string() ==
        "1 - x2*x4 - x1*x3 + x1*x2*x3*x4");
  CHECK(r.single_variable.to_string() ==
        "1 - x - 2*x^2 + 2*x^3 + x^4 - x^5");
  CHECK(r.determinant == 0);
  CHECK(r.multi_norm == 36);
  CHECK(r.single_norm == 8);
  CHECK(r.instanton_bound == 5);
  // The multivariable polynomial factors as (1 - x1*x3)(1 - x2*x4).
  LaurentPoly f1 = LaurentPoly::constant(4, 1) -
                   LaurentPoly::variable(4, 0) * LaurentPoly::variable(4, 2);
  LaurentPoly f2 = LaurentPoly::constant(4, 1) -
                   LaurentPoly::variable(4, 1) * LaurentPoly::variable(4, 3);
  CHECK(r.multivariable == f1 * f2);
}

TEST_CASE("five-component chain with clasp") {
  AlexanderReport r = alexander_report(named("L5m3"));
  CHECK(r.components == 5);
  CHECK(r.multi_norm == 300);
  CHECK(r.determinant == 16);
  CHECK(r.single_norm == 16);
  CHECK(r.instanton_bound == 19);
  CHECK(r.single_variable.to_string() ==
        "1 - 3*x + 3*x^2 - 2*x^3 + 3*x^4 - 3*x^5 + x^6");
  CHECK(r.multivariable.term_count() == 12);
  CHECK(r.multivariable.norm() == 12);
}

TEST_CASE("six-component link: norms feeding the instanton bound") {
  AlexanderReport r = alexander_report(named("G0Link"));
  CHECK(r.components == 6);
  CHECK(r.multi_norm == 1216);
  CHECK(r.determinant == 32);
  // Single-variable form collapses to (1-x)^5.
  CHECK(r.single_variable.to_string() ==
        "1 - 5*x + 10*x^2 - 10*x^3 + 5*x^4 - x^5");
  CHECK(r.instanton_bound == 38);  // ceil(1216 / 2^5)
}

TEST_CASE("deleted row and column do not change the normalized result") {
  for (const char* name : {"Hopf", "Trefoil", "L6n1", "L5m3"}) {
    LinkDiagram d = named(name);
    WirtingerPresentation p = wirtinger(d);
    LaurentPoly base = multivariable_alexander(d);
    for (int rel = 0; rel < (int)p.relations.size(); rel += 2) {
      for (int arc = 0; arc < p.generator_count; arc += 3) {
        AlexanderOptions opt;
        opt.deleted_relation = rel;
        opt.deleted_arc = arc;
        CHECK(multivariable_alexander(d, opt) == base);
        CHECK(link_determinant(d, opt) == link_determinant(d));
      }
    }
  }
}

TEST_CASE("mirror preserves norms and determinant") {
  for (const char* name : {"Hopf", "Trefoil", "L6n1", "L8n8", "L5m3",
                           "G0Link"}) {
    LinkDiagram d = named(name);
    AlexanderReport a = alexander_report(d);
    AlexanderReport b = alexander_report(mirror(d));
    CHECK(a.determinant == b.determinant);
    CHECK(a.multi_norm == b.multi_norm);
    CHECK(a.single_norm == b.single_norm);
    CHECK(a.instanton_bound == b.instanton_bound);
  }
}

TEST_CASE("chains of Hopf links double the determinant per ring") {
  for (int n = 2; n <= 5; ++n) {
    AlexanderReport r = alexander_report(chain(n));
    CHECK(r.components == n);
    CHECK(r.determinant == (BigInt(1) << (n - 1)));
  }
}

TEST_CASE("polynomial determinant is thread-count independent") {
  // Random small Laurent matrix; exact determinant must not depend on the
  // number of worker threads.
  std::mt19937 rng(98765);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(-1, 1);
  for (int iter = 0; iter < 5; ++iter) {
    int n = 4 + iter % 2;
    std::vector<std::vector<LaurentPoly>> m(
        n, std::vector<LaurentPoly>(n, LaurentPoly(2)));
    for (auto& row : m)
      for (auto& e : row) {
        e.add_term({expo(rng), expo(rng)}, coef(rng));
        e.add_term({expo(rng), 0}, coef(rng));
      }
    LaurentPoly d1 = poly_det(m, 1);
    LaurentPoly d4 = poly_det(m, 4);
    CHECK(d1 == d4);
  }
  // Fox-matrix path through the public API as well.
  LinkDiagram d = named("L5m3");
  AlexanderOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(multivariable_alexander(d, one) == multivariable_alexander(d, four));
}

TEST_CASE("link determinant is the single-variable value at -1") {
  for (const char* name : {"Hopf", "Trefoil", "L6n1", "L8n8", "L5m3",
                           "G0Link"}) {
    LinkDiagram d = named(name);
    AlexanderReport r = alexander_report(d);
    BigInt v = r.single_variable.eval_all_minus_one();
    if (v < 0) v = -v;
    CHECK(v == r.determinant);
    CHECK(link_determinant(d) == r.determinant);
  }
}
