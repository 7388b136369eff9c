#include "linkrep/modp.hpp"

#include <algorithm>

#include "linkrep/errors.hpp"
#include "linkrep/presentation.hpp"

namespace linkrep {

Mat2p m2_mul(const Mat2p& a, const Mat2p& b) {
  int p = a.p;
  Mat2p r;
  r.p = p;
  r.e[0] = (a.e[0] * b.e[0] + a.e[1] * b.e[2]) % p;
  r.e[1] = (a.e[0] * b.e[1] + a.e[1] * b.e[3]) % p;
  r.e[2] = (a.e[2] * b.e[0] + a.e[3] * b.e[2]) % p;
  r.e[3] = (a.e[2] * b.e[1] + a.e[3] * b.e[3]) % p;
  return r;
}

Mat2p m2_inv(const Mat2p& a) {
  int p = a.p;
  Mat2p r;
  r.p = p;
  r.e[0] = a.e[3] % p;
  r.e[1] = (p - a.e[1] % p) % p;
  r.e[2] = (p - a.e[2] % p) % p;
  r.e[3] = a.e[0] % p;
  return r;
}

bool m2_commute(const Mat2p& a, const Mat2p& b) {
  return m2_mul(a, b) == m2_mul(b, a);
}

int m2_trace(const Mat2p& a) { return (a.e[0] + a.e[3]) % a.p; }

int m2_det(const Mat2p& a) {
  int p = a.p;
  return ((a.e[0] * a.e[3] - a.e[1] * a.e[2]) % p + p) % p;
}

static bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

std::vector<Mat2p> traceless_elements(int p) {
  if (!is_odd_prime(p))
    throw InputError(Err::NotOddPrime, "p must be an odd prime");
  std::vector<Mat2p> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        Mat2p m{p, {a, b, c, (p - a) % p}};
        if (m2_det(m) == 1) out.push_back(m);
      }
  return out;
}

static Mat2p conj_signed_p(const Mat2p& o, const Mat2p& a, int sign) {
  if (sign > 0) return m2_mul(m2_mul(o, a), m2_inv(o));
  return m2_mul(m2_mul(m2_inv(o), a), o);
}

namespace {

struct Searcher {
  const WirtingerPresentation& pres;
  const std::vector<Mat2p>& domain;
  int p;
  long long budget;
  long long nodes = 0;
  bool budget_hit = false;
  std::vector<std::optional<Mat2p>> val;
  // relations touching each arc
  std::vector<std::vector<int>> touching;

  Searcher(const WirtingerPresentation& pr, const std::vector<Mat2p>& dom,
           int prime, long long b)
      : pres(pr), domain(dom), p(prime), budget(b),
        val(pr.generator_count), touching(pr.generator_count) {
    for (int ri = 0; ri < (int)pres.relations.size(); ++ri) {
      const auto& r = pres.relations[ri];
      for (int arc : {r.over_arc, r.in_arc, r.out_arc}) {
        auto& t = touching[arc];
        if (std::find(t.begin(), t.end(), ri) == t.end()) t.push_back(ri);
      }
    }
  }

  // Plug every known value into relation ri; returns false on violation,
  // assigns a forced arc (recording it on the trail) when exactly one of
  // in/out is missing and the over-arc is known.
  bool apply_relation(int ri, std::vector<int>& trail, bool& progressed) {
    const auto& r = pres.relations[ri];
    const auto& o = val[r.over_arc];
    const auto& a = val[r.in_arc];
    const auto& c = val[r.out_arc];
    if (!o) return true;
    if (a && c) return conj_signed_p(*o, *a, r.sign) == *c;
    if (a && !c) {
      val[r.out_arc] = conj_signed_p(*o, *a, r.sign);
      trail.push_back(r.out_arc);
      progressed = true;
      return true;
    }
    if (!a && c) {
      val[r.in_arc] = conj_signed_p(*o, *c, -r.sign);
      trail.push_back(r.in_arc);
      progressed = true;
      return true;
    }
    return true;
  }

  bool propagate(std::vector<int>& trail) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (int ri = 0; ri < (int)pres.relations.size(); ++ri)
        if (!apply_relation(ri, trail, progressed)) return false;
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()].reset();
      trail.pop_back();
    }
  }

  int pick_arc() const {
    int best = -1, best_known = -1;
    for (int arc = 0; arc < pres.generator_count; ++arc) {
      if (val[arc]) continue;
      int known = 0;
      for (int ri : touching[arc]) {
        const auto& r = pres.relations[ri];
        known += (bool)val[r.over_arc] + (bool)val[r.in_arc] +
                 (bool)val[r.out_arc];
      }
      if (known > best_known) {
        best_known = known;
        best = arc;
      }
    }
    return best;
  }

  bool candidate_ok(int arc, const Mat2p& v) const {
    auto lookup = [&](int a) { return a == arc ? &v : (val[a] ? &*val[a] : nullptr); };
    for (int ri : touching[arc]) {
      const auto& r = pres.relations[ri];
      const Mat2p* o = lookup(r.over_arc);
      const Mat2p* a = lookup(r.in_arc);
      const Mat2p* c = lookup(r.out_arc);
      if (!o || !a || !c) continue;
      if (!(conj_signed_p(*o, *a, r.sign) == *c)) return false;
    }
    return true;
  }

  std::optional<std::pair<int, int>> witness() const {
    for (int a = 0; a < pres.generator_count; ++a)
      for (int b = a + 1; b < pres.generator_count; ++b)
        if (!m2_commute(*val[a], *val[b])) return std::make_pair(a, b);
    return std::nullopt;
  }

  bool dfs(std::vector<int>& trail, std::optional<Certificate>& found) {
    int arc = pick_arc();
    if (arc < 0) {
      auto w = witness();
      if (!w) return false;  // abelian image: keep searching
      Certificate cert;
      cert.p = p;
      cert.arc_values.reserve(pres.generator_count);
      for (auto& v : val) cert.arc_values.push_back(*v);
      cert.witness = *w;
      found = cert;
      return true;
    }
    for (const Mat2p& v : domain) {
      if (budget > 0 && nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      if (!candidate_ok(arc, v)) continue;
      size_t mark = trail.size();
      val[arc] = v;
      trail.push_back(arc);
      if (propagate(trail) && dfs(trail, found)) return true;
      undo(trail, mark);
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

CertificateSearchResult search_certificate(const LinkDiagram& d, int p,
                                           long long node_budget) {
  std::vector<Mat2p> domain = traceless_elements(p);
  WirtingerPresentation pres = wirtinger(d);
  Searcher s(pres, domain, p, node_budget);

  // conjugation normalization: arc 0 carries [[0,1],[-1,0]]
  Mat2p seed{p, {0, 1, p - 1, 0}};
  std::vector<int> trail;
  s.val[0] = seed;
  trail.push_back(0);

  CertificateSearchResult res;
  std::optional<Certificate> found;
  bool ok = s.propagate(trail) && s.dfs(trail, found);
  res.nodes = s.nodes;
  if (ok && found) {
    if (!verify_certificate(d, *found))
      throw InternalError("search produced a certificate that fails verification");
    res.outcome = SearchOutcome::Found;
    res.certificate = found;
  } else if (s.budget_hit) {
    res.outcome = SearchOutcome::BudgetExhausted;
  } else {
    res.outcome = SearchOutcome::ExhaustedSearchSpace;
  }
  return res;
}

bool verify_certificate(const LinkDiagram& d, const Certificate& c) {
  if (!is_odd_prime(c.p)) return false;
  WirtingerPresentation pres = wirtinger(d);
  if ((int)c.arc_values.size() != pres.generator_count) return false;
  for (const Mat2p& m : c.arc_values) {
    if (m.p != c.p) return false;
    for (int x : m.e)
      if (x < 0 || x >= c.p) return false;
    if (m2_trace(m) != 0 || m2_det(m) != 1) return false;
  }
  for (const auto& r : pres.relations) {
    Mat2p expect =
        conj_signed_p(c.arc_values[r.over_arc], c.arc_values[r.in_arc], r.sign);
    if (!(expect == c.arc_values[r.out_arc])) return false;
  }
  auto [wa, wb] = c.witness;
  if (wa < 0 || wb < 0 || wa >= pres.generator_count ||
      wb >= pres.generator_count || wa == wb)
    return false;
  return !m2_commute(c.arc_values[wa], c.arc_values[wb]);
}

Mat2p q8_to_mat3(Q8 q) {
  Mat2p m{3, {0, 0, 0, 0}};
  switch (q.axis) {
    case Axis::One: m.e = {1, 0, 0, 1}; break;
    case Axis::I: m.e = {0, 2, 1, 0}; break;
    case Axis::J: m.e = {1, 1, 1, 2}; break;
    case Axis::K: m.e = {2, 1, 1, 1}; break;
  }
  if (q.sign < 0)
    for (int& x : m.e) x = (3 - x) % 3;
  return m;
}

std::optional<Q8> mat3_to_q8(const Mat2p& m) {
  if (m.p != 3) return std::nullopt;
  for (int sign : {1, -1})
    for (Axis ax : {Axis::One, Axis::I, Axis::J, Axis::K}) {
      Q8 q{sign, ax};
      if (q8_to_mat3(q) == m) return q;
    }
  return std::nullopt;
}

}  // namespace linkrep
