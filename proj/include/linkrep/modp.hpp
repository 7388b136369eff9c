#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "linkrep/diagram.hpp"
#include "linkrep/quat.hpp"

namespace linkrep {

// 2x2 matrix over Z/p, row-major entries in [0, p).
struct Mat2p {
  int p = 3;
  std::array<int, 4> e{0, 0, 0, 0};

  bool operator==(const Mat2p&) const = default;
};

Mat2p m2_mul(const Mat2p& a, const Mat2p& b);
Mat2p m2_inv(const Mat2p& a);  // for determinant-1 matrices
bool m2_commute(const Mat2p& a, const Mat2p& b);
int m2_trace(const Mat2p& a);
int m2_det(const Mat2p& a);

// All trace-0, determinant-1 matrices over Z/p in lexicographic entry order.
std::vector<Mat2p> traceless_elements(int p);

struct Certificate {
  int p = 3;
  std::vector<Mat2p> arc_values;  // indexed by arc
  std::pair<int, int> witness{0, 0};  // non-commuting arc pair
};

enum class SearchOutcome { Found, ExhaustedSearchSpace, BudgetExhausted };

struct CertificateSearchResult {
  SearchOutcome outcome = SearchOutcome::ExhaustedSearchSpace;
  std::optional<Certificate> certificate;
  long long nodes = 0;  // branch assignments expanded
};

// Backtracking over arc assignments with constraint propagation; the first
// arc is pinned to [[0,1],[p-1,0]] (all traceless det-1 elements are
// conjugate, so this loses no solutions and exhaustion proves nonexistence).
// node_budget 0 means unlimited.
CertificateSearchResult search_certificate(const LinkDiagram& d, int p,
                                           long long node_budget = 0);

// Relation, tracelessness, determinant and witness checks; does not require
// the first-arc normalization (conjugation-invariant).
bool verify_certificate(const LinkDiagram& d, const Certificate& c);

// The Q8 embedding into SL(2,3): i -> [[0,-1],[1,0]], j -> [[1,1],[1,-1]],
// k -> [[-1,1],[1,1]] (mod 3).
Mat2p q8_to_mat3(Q8 q);
std::optional<Q8> mat3_to_q8(const Mat2p& m);

}  // namespace linkrep
