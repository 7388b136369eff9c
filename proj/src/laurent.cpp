#include "linkrep/laurent.hpp"

#include <sstream>

namespace linkrep {

LaurentPoly LaurentPoly::constant(int var_count, const BigInt& c) {
  LaurentPoly p(var_count);
  p.add_term(Mono(var_count, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int var_count, int index, int power) {
  Mono m(var_count, 0);
  m.at(index) = power;
  return monomial(var_count, m, 1);
}

LaurentPoly LaurentPoly::monomial(int var_count, const Mono& m, const BigInt& c) {
  LaurentPoly p(var_count);
  p.add_term(m, c);
  return p;
}

void LaurentPoly::add_term(const Mono& m, const BigInt& c) {
  if (c == 0) return;
  if ((int)m.size() != vars_) throw std::logic_error("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(vars_);
  Mono sum(vars_);
  for (auto& [m1, c1] : terms_) {
    for (auto& [m2, c2] : o.terms_) {
      for (int i = 0; i < vars_; ++i) sum[i] = m1[i] + m2[i];
      r.add_term(sum, c1 * c2);
    }
  }
  return r;
}

BigInt LaurentPoly::norm() const {
  BigInt n = 0;
  for (auto& [m, c] : terms_) n += abs(c);
  return n;
}

LaurentPoly LaurentPoly::collapse_to_single() const {
  LaurentPoly r(1);
  for (auto& [m, c] : terms_) {
    int total = 0;
    for (int e : m) total += e;
    r.add_term(Mono{total}, c);
  }
  return r;
}

BigInt LaurentPoly::eval_all_minus_one() const {
  BigInt v = 0;
  for (auto& [m, c] : terms_) {
    int total = 0;
    for (int e : m) total += e;
    // (-1)^total, exponents may be negative
    v += (total % 2 == 0) ? c : -c;
  }
  return v;
}

LaurentPoly LaurentPoly::normalized_units() const {
  if (terms_.empty()) return *this;
  Mono shift(vars_, 0);
  for (int i = 0; i < vars_; ++i) {
    int lo = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (first || m[i] < lo) lo = m[i];
      first = false;
    }
    shift[i] = -lo;
  }
  LaurentPoly r(vars_);
  Mono m2(vars_);
  for (auto& [m, c] : terms_) {
    for (int i = 0; i < vars_; ++i) m2[i] = m[i] + shift[i];
    r.terms_.emplace(m2, c);
  }
  if (r.terms_.begin()->second < 0) return -r;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw InexactDivision();
  if (f.is_zero()) return f;
  int vars = f.vars_;
  // Shift both into ordinary polynomials (min exponents 0); the monomial
  // units cancel in the quotient up to a shift we undo at the end.
  LaurentPoly fn = f.normalized_units();
  LaurentPoly gn = g.normalized_units();
  bool fneg = false, gneg = false;
  {  // track the signs dropped by normalized_units
    fneg = f.terms_.begin()->second < 0;
    gneg = g.terms_.begin()->second < 0;
  }
  // Divide with the divisor's lex-greatest term as the leading term.
  Mono glead = gn.terms().rbegin()->first;
  BigInt gcoef = gn.terms().rbegin()->second;
  LaurentPoly q(vars);
  LaurentPoly rem = fn;
  Mono qm(vars);
  while (!rem.is_zero()) {
    const Mono& rlead = rem.terms().rbegin()->first;
    const BigInt& rcoef = rem.terms().rbegin()->second;
    for (int i = 0; i < vars; ++i) {
      qm[i] = rlead[i] - glead[i];
      if (qm[i] < 0) throw InexactDivision();
    }
    if (rcoef % gcoef != 0) throw InexactDivision();
    BigInt qc = rcoef / gcoef;
    LaurentPoly t = monomial(vars, qm, qc);
    q.add_term(qm, qc);
    rem = rem - t * gn;
  }
  // Undo the unit discrepancy: f = unit_f * fn, g = unit_g * gn, so
  // f/g = (unit_f/unit_g) * q. Recover the monomial part by comparing leads.
  Mono flead_orig = f.terms_.rbegin()->first;
  Mono glead_orig = g.terms_.rbegin()->first;
  Mono fnlead = fn.terms().rbegin()->first;
  Mono shift(vars);
  for (int i = 0; i < vars; ++i)
    shift[i] = (flead_orig[i] - fnlead[i]) - (glead_orig[i] - glead[i]);
  LaurentPoly unit = monomial(vars, shift, (fneg != gneg) ? BigInt(-1) : BigInt(1));
  LaurentPoly result = q * unit;
  if (result * g != f) throw InexactDivision();
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool all_zero = true;
    for (int e : m) all_zero = all_zero && e == 0;
    if (all_zero) {
      os << a.str();
    } else {
      bool coef_shown = false;
      if (a != 1) {
        os << a.str();
        coef_shown = true;
      }
      bool any = false;
      for (int i = 0; i < vars_; ++i) {
        if (m[i] == 0) continue;
        if (coef_shown || any) os << "*";
        os << (vars_ == 1 ? std::string("x") : "x" + std::to_string(i + 1));
        if (m[i] != 1) os << "^" << m[i];
        any = true;
      }
    }
  }
  return os.str();
}

}  // namespace linkrep
