#include <random>

#include "doctest.h"
#include "linkrep/snf.hpp"

using namespace linkrep;

namespace {

IntMat random_mat(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, std::vector<BigInt>(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

BigInt product(const std::vector<BigInt>& v) {
  BigInt p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("smith normal form of identity and zero matrices") {
  SnfResult id = smith_normal_form(identity_mat(3));
  CHECK(id.invariant_factors == std::vector<BigInt>{1, 1, 1});
  CHECK(id.free_rank == 0);

  IntMat z(2, std::vector<BigInt>(4, 0));
  SnfResult zr = smith_normal_form(z);
  CHECK(zr.invariant_factors.empty());
  CHECK(zr.free_rank == 4);
  CHECK(zr.rows == 2);
  CHECK(zr.cols == 4);
}

TEST_CASE("known small invariant factors") {
  // [[2,4],[6,8]]: det -8, gcd of entries 2, so factors are 2, 4.
  IntMat m = {{2, 4}, {6, 8}};
  SnfResult r = smith_normal_form(m);
  CHECK(r.invariant_factors == std::vector<BigInt>{2, 4});
  CHECK(r.free_rank == 0);

  // diag(4, 6) has invariant factors 2, 12.
  IntMat d = {{4, 0}, {0, 6}};
  SnfResult rd = smith_normal_form(d);
  CHECK(rd.invariant_factors == std::vector<BigInt>{2, 12});

  // Rank-deficient: second row is a multiple of the first.
  IntMat s = {{1, 2}, {2, 4}};
  SnfResult rs = smith_normal_form(s);
  CHECK(rs.invariant_factors == std::vector<BigInt>{1});
  CHECK(rs.free_rank == 1);
}

TEST_CASE("divisibility chain and determinant agreement on random matrices") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + iter % 5;
    IntMat m = random_mat(rng, n, n, -7, 7);
    SnfResult r = smith_normal_form(m);
    for (size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
      CHECK(r.invariant_factors[i] > 0);
      CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
    }
    BigInt det = int_det(m);
    if (det == 0) {
      CHECK(r.free_rank > 0);
    } else {
      CHECK(r.free_rank == 0);
      CHECK(product(r.invariant_factors) == abs(det));
    }
    CHECK((int)r.invariant_factors.size() + r.free_rank == n);
  }
}

TEST_CASE("rectangular matrices: free_rank counts unconstrained columns") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 30; ++iter) {
    int rows = 1 + iter % 4;
    int cols = 1 + (iter * 7) % 5;
    IntMat m = random_mat(rng, rows, cols, -5, 5);
    SnfResult r = smith_normal_form(m);
    CHECK((int)r.invariant_factors.size() + r.free_rank == cols);
    CHECK((int)r.invariant_factors.size() <= rows);
    // U and V are square of the right sizes.
    CHECK((int)r.u.size() == rows);
    CHECK((int)r.v.size() == cols);
  }
}

TEST_CASE("transform matrices are unimodular and reconstruct the diagonal") {
  IntMat m = {{6, 10, 15}, {10, 15, 6}, {15, 6, 10}};
  SnfResult r = smith_normal_form(m);
  CHECK(abs(int_det(r.u)) == 1);
  CHECK(abs(int_det(r.v)) == 1);
  IntMat d = mat_mul(mat_mul(r.u, m), r.v);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BigInt want = 0;
      if (i == j && i < (int)r.invariant_factors.size())
        want = r.invariant_factors[i];
      CHECK(d[i][j] == want);
    }
}

TEST_CASE("Bareiss determinant matches cofactor expansion on small inputs") {
  IntMat a = {{3}};
  CHECK(int_det(a) == 3);
  IntMat b = {{1, 2}, {3, 4}};
  CHECK(int_det(b) == -2);
  IntMat c = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  // 2*(3-2) - 0 + 1*(1-3) = 0
  CHECK(int_det(c) == 0);
  IntMat v = {{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};  // Vandermonde(1,2,3) = 2
  CHECK(int_det(v) == 2);
}

TEST_CASE("gf2 nullity") {
  IntMat m = {{1, 1}, {1, 1}};
  CHECK(gf2_nullity(m) == 1);
  CHECK(gf2_nullity(identity_mat(4)) == 0);
  // Even entries vanish mod 2.
  IntMat e = {{2, 4}, {6, 8}};
  CHECK(gf2_nullity(e) == 2);
  // Rank over Q can exceed rank over GF(2): [[1,1],[1,-1]] has det -2.
  IntMat q = {{1, 1}, {1, -1}};
  CHECK(int_det(q) == -2);
  CHECK(gf2_nullity(q) == 1);
}
