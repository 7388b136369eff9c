#pragma once

#include <vector>

#include "linkrep/diagram.hpp"
#include "linkrep/laurent.hpp"
#include "linkrep/presentation.hpp"

namespace linkrep {

struct AlexanderOptions {
  int deleted_relation = -1;  // -1: the last relation
  int deleted_arc = -1;       // -1: the default base arc
  int threads = 0;            // 0: LINKREP_THREADS env, else 1
};

struct AlexanderReport {
  int components = 0;
  LaurentPoly multivariable;    // reduced multivariable polynomial (Delta for knots)
  LaurentPoly single_variable;  // one-variable specialization
  BigInt determinant;
  BigInt multi_norm;
  BigInt single_norm;
  BigInt instanton_bound;  // ceil(multi_norm / 2^(components-1))
};

// Determinant of a square Laurent-polynomial matrix by dynamic programming
// over column subsets; exact, deterministic, optionally multithreaded
// (identical result for any thread count).
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m,
                     int threads = 0);

// First minor of the Fox matrix after deleting one relation row and one
// generator column (defaults as in AlexanderOptions).
LaurentPoly alexander_minor(const LinkDiagram& d,
                            const AlexanderOptions& opt = {});

// Multivariable polynomial: for >= 2 components the minor divided exactly by
// (x_c - 1), c the component of the deleted arc, unit-normalized; for knots
// the normalized minor itself.
LaurentPoly multivariable_alexander(const LinkDiagram& d,
                                    const AlexanderOptions& opt = {});

LaurentPoly single_variable_alexander(const LinkDiagram& d,
                                      const AlexanderOptions& opt = {});

// |det| of the integer minor at all variables = -1 (fast path, no
// polynomial arithmetic).
BigInt link_determinant(const LinkDiagram& d, const AlexanderOptions& opt = {});

AlexanderReport alexander_report(const LinkDiagram& d,
                                 const AlexanderOptions& opt = {});

}  // namespace linkrep
