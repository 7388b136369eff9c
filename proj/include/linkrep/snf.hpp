#pragma once

#include <vector>

#include "linkrep/laurent.hpp"

namespace linkrep {

// Dense integer matrix with arbitrary-precision entries.
using IntMat = std::vector<std::vector<BigInt>>;

struct SnfResult {
  // Positive, each dividing the next. Trailing zero diagonal entries are
  // reported through free_rank instead.
  std::vector<BigInt> invariant_factors;
  int free_rank = 0;  // columns of the domain not constrained (nullity)
  // Unimodular transforms with U * M * V = diag(invariant_factors, 0...).
  IntMat u, v;
  int rows = 0, cols = 0;
};

// Smith normal form of an arbitrary integer matrix. Pivoting favors the
// smallest nonzero magnitude to limit coefficient growth. The reconstruction
// identity U*M*V = D is checked on every call.
SnfResult smith_normal_form(const IntMat& m);

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination).
BigInt int_det(const IntMat& m);

// Dimension of the kernel of m over GF(2).
int gf2_nullity(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(int n);

}  // namespace linkrep
