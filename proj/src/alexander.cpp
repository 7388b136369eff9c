#include "linkrep/alexander.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>
#include <utility>

#include "linkrep/errors.hpp"
#include "linkrep/snf.hpp"

namespace linkrep {

static int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LINKREP_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v > 64 ? 64 : v;
  }
  return 1;
}

using Layer = std::map<uint64_t, LaurentPoly>;

// Processes one row: every partial determinant over a column subset S is
// extended by each usable column j of this row. The sign is the parity of
// the columns already used above j (inversion count of the permutation).
static void push_row(const Layer& layer, size_t begin, size_t end,
                     const std::vector<std::pair<int, const LaurentPoly*>>& cols,
                     Layer& out) {
  auto it = layer.begin();
  std::advance(it, (long)begin);
  for (size_t idx = begin; idx < end; ++idx, ++it) {
    uint64_t s = it->first;
    const LaurentPoly& partial = it->second;
    for (auto& [j, entry] : cols) {
      if (s >> j & 1) continue;
      LaurentPoly contrib = partial * *entry;
      if (std::popcount(s >> (j + 1)) & 1) contrib = -contrib;
      auto [pos, inserted] = out.try_emplace(s | (1ull << j), contrib);
      if (!inserted) pos->second = pos->second + contrib;
    }
  }
}

LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m,
                     int threads) {
  int n = (int)m.size();
  if (n == 0) throw InternalError("determinant of an empty matrix");
  if (n > 63) throw InternalError("determinant size above subset-mask limit");
  int vars = m[0][0].var_count();
  int workers = resolve_threads(threads);

  Layer layer;
  layer.emplace(0ull, LaurentPoly::constant(vars, 1));
  for (int row = 0; row < n; ++row) {
    std::vector<std::pair<int, const LaurentPoly*>> cols;
    for (int j = 0; j < n; ++j)
      if (!m[row][j].is_zero()) cols.emplace_back(j, &m[row][j]);
    Layer next;
    size_t total = layer.size();
    size_t chunk = workers > 1 ? (total + workers - 1) / workers : total;
    if (workers <= 1 || total < 32 || chunk == 0) {
      push_row(layer, 0, total, cols, next);
    } else {
      std::vector<Layer> parts((total + chunk - 1) / chunk);
      std::vector<std::thread> pool;
      for (size_t p = 0; p < parts.size(); ++p) {
        size_t b = p * chunk, e = std::min(total, b + chunk);
        pool.emplace_back(push_row, std::cref(layer), b, e, std::cref(cols),
                          std::ref(parts[p]));
      }
      for (auto& t : pool) t.join();
      for (auto& part : parts)
        for (auto& [s, poly] : part) {
          auto [pos, inserted] = next.try_emplace(s, poly);
          if (!inserted) pos->second = pos->second + poly;
        }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    layer = std::move(next);
  }
  auto it = layer.find(n == 63 ? ~0ull >> 1 : (1ull << n) - 1);
  return it == layer.end() ? LaurentPoly(vars) : it->second;
}

struct MinorChoice {
  WirtingerPresentation pres;
  int row, col;
};

static MinorChoice minor_choice(const LinkDiagram& d,
                                const AlexanderOptions& opt) {
  MinorChoice c{wirtinger(d), 0, 0};
  int rels = (int)c.pres.relations.size();
  c.row = opt.deleted_relation < 0 ? rels - 1 : opt.deleted_relation;
  c.col = opt.deleted_arc < 0 ? default_base_arc(c.pres) : opt.deleted_arc;
  if (c.row < 0 || c.row >= rels)
    throw InputError(Err::BadArgument, "deleted relation out of range");
  if (c.col < 0 || c.col >= c.pres.generator_count)
    throw InputError(Err::BadArgument, "deleted arc out of range");
  return c;
}

LaurentPoly alexander_minor(const LinkDiagram& d, const AlexanderOptions& opt) {
  MinorChoice c = minor_choice(d, opt);
  FoxMatrix f = fox_matrix(c.pres);
  std::vector<std::vector<LaurentPoly>> mm;
  for (int r = 0; r < (int)f.size(); ++r) {
    if (r == c.row) continue;
    std::vector<LaurentPoly> row;
    for (int j = 0; j < (int)f[r].size(); ++j)
      if (j != c.col) row.push_back(f[r][j]);
    mm.push_back(std::move(row));
  }
  if (mm.empty()) {
    // single-crossing diagram (kinked unknot): empty minor has determinant 1
    return LaurentPoly::constant(d.component_count(), 1);
  }
  return poly_det(mm, opt.threads);
}

LaurentPoly multivariable_alexander(const LinkDiagram& d,
                                    const AlexanderOptions& opt) {
  MinorChoice c = minor_choice(d, opt);
  LaurentPoly minor = alexander_minor(d, opt);
  int n = c.pres.component_count;
  if (n == 1) return minor.normalized_units();
  if (minor.is_zero()) return minor;
  int comp = c.pres.component_of[c.col];
  LaurentPoly divisor =
      LaurentPoly::variable(n, comp) - LaurentPoly::constant(n, 1);
  return LaurentPoly::divide_exact(minor, divisor).normalized_units();
}

LaurentPoly single_variable_alexander(const LinkDiagram& d,
                                      const AlexanderOptions& opt) {
  LaurentPoly multi = multivariable_alexander(d, opt);
  int n = d.component_count();
  if (n == 1) return multi;
  LaurentPoly collapsed = multi.collapse_to_single();
  LaurentPoly one_minus_t =
      LaurentPoly::constant(1, 1) - LaurentPoly::variable(1, 0);
  return (one_minus_t * collapsed).normalized_units();
}

BigInt link_determinant(const LinkDiagram& d, const AlexanderOptions& opt) {
  MinorChoice c = minor_choice(d, opt);
  IntMat f = fox_matrix_at_minus_one(c.pres);
  IntMat mm;
  for (int r = 0; r < (int)f.size(); ++r) {
    if (r == c.row) continue;
    std::vector<BigInt> row;
    for (int j = 0; j < (int)f[r].size(); ++j)
      if (j != c.col) row.push_back(f[r][j]);
    mm.push_back(std::move(row));
  }
  if (mm.empty()) return 1;
  BigInt det = int_det(mm);
  return det < 0 ? BigInt(-det) : det;
}

AlexanderReport alexander_report(const LinkDiagram& d,
                                 const AlexanderOptions& opt) {
  AlexanderReport rep;
  int n = d.component_count();
  rep.components = n;
  rep.multivariable = multivariable_alexander(d, opt);
  rep.single_variable = single_variable_alexander(d, opt);

  if (n == 1) {
    rep.multi_norm = rep.multivariable.norm();
  } else {
    LaurentPoly prod = rep.multivariable;
    for (int c = 0; c < n; ++c) {
      LaurentPoly factor =
          LaurentPoly::constant(n, 1) - LaurentPoly::variable(n, c);
      prod = prod * factor;
    }
    rep.multi_norm = prod.norm();
  }
  rep.single_norm = rep.single_variable.norm();

  BigInt at_minus_one = rep.single_variable.eval_all_minus_one();
  rep.determinant = at_minus_one < 0 ? BigInt(-at_minus_one) : at_minus_one;
  BigInt check = link_determinant(d, opt);
  if (check != rep.determinant)
    throw InternalError("determinant disagreement between the integer and "
                        "polynomial evaluations");

  BigInt denom = BigInt(1) << (n - 1);
  rep.instanton_bound = (rep.multi_norm + denom - 1) / denom;
  return rep;
}

}  // namespace linkrep
