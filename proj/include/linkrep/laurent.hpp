#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkrep {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial. Lexicographic order (the map order)
// is also the canonical term order used for printing and unit normalization.
using Mono = std::vector<int>;

struct InexactDivision : std::runtime_error {
  InexactDivision() : std::runtime_error("inexact Laurent division") {}
};

// Multivariate Laurent polynomial over arbitrary-precision integers.
// Invariant: no zero coefficients are stored; every key has size var_count.
class LaurentPoly {
 public:
  LaurentPoly() : vars_(0) {}
  explicit LaurentPoly(int var_count) : vars_(var_count) {}

  static LaurentPoly constant(int var_count, const BigInt& c);
  static LaurentPoly variable(int var_count, int index, int power = 1);
  static LaurentPoly monomial(int var_count, const Mono& m, const BigInt& c);

  int var_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, BigInt>& terms() const { return terms_; }

  void add_term(const Mono& m, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Sum of absolute values of the coefficients; invariant under
  // multiplication by +-monomials.
  BigInt norm() const;

  // Substitute every variable by a single new variable t (index 0 of a
  // 1-variable polynomial): x_i -> t for all i.
  LaurentPoly collapse_to_single() const;

  // Evaluate at x_i = -1 for all i.
  BigInt eval_all_minus_one() const;

  // Multiplies by the unique +-monomial making every variable's minimum
  // exponent 0 and the lexicographically first coefficient positive.
  LaurentPoly normalized_units() const;

  // Exact division; throws InexactDivision when g does not divide f.
  static LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

  // Canonical text form, terms in lexicographic exponent order, e.g.
  // "1 - x1*x2^-1 + 3*x2^2". Variables are named x1..xn ("x" when n == 1).
  std::string to_string() const;

 private:
  int vars_;
  std::map<Mono, BigInt> terms_;
};

}  // namespace linkrep
