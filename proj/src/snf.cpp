#include "linkrep/snf.hpp"

#include <stdexcept>

namespace linkrep {

IntMat identity_mat(int n) {
  IntMat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  int n = (int)a.size(), k = n ? (int)a[0].size() : 0;
  int p = b.empty() ? 0 : (int)b[0].size();
  IntMat r(n, std::vector<BigInt>(p, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

namespace {

// Row/column elementary operations mirrored into the transforms.
struct SnfWork {
  IntMat m, u, v;
  int rows, cols;

  void swap_rows(int a, int b) {
    std::swap(m[a], m[b]);
    std::swap(u[a], u[b]);
  }
  void swap_cols(int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  }
  void add_row(int dst, int src, const BigInt& f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  }
  void add_col(int dst, int src, const BigInt& f) {
    for (int i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  }
  void negate_row(int a) {
    for (auto& x : m[a]) x = -x;
    for (auto& x : u[a]) x = -x;
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& input) {
  SnfWork w;
  w.rows = (int)input.size();
  w.cols = w.rows ? (int)input[0].size() : 0;
  w.m = input;
  w.u = identity_mat(w.rows);
  w.v = identity_mat(w.cols);

  int n = std::min(w.rows, w.cols);
  for (int t = 0; t < n; ++t) {
    // Find smallest nonzero |entry| in the remaining block.
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < w.cols; ++j) {
        if (w.m[i][j] == 0) continue;
        BigInt a = abs(w.m[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // Clear row and column t; a reduction may reintroduce entries, loop.
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.m[i][t] == 0) continue;
        BigInt q = w.m[i][t] / w.m[t][t];
        w.add_row(i, t, -q);
        if (w.m[i][t] != 0) {  // remainder smaller than pivot: swap up
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.m[t][j] == 0) continue;
        BigInt q = w.m[t][j] / w.m[t][t];
        w.add_col(j, t, -q);
        if (w.m[t][j] != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }

    // Divisibility fix-up: pivot must divide every later entry.
    for (;;) {
      int bi = -1;
      for (int i = t + 1; i < w.rows && bi < 0; ++i)
        for (int j = t + 1; j < w.cols; ++j)
          if (w.m[i][j] % w.m[t][t] != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      w.add_row(t, bi, 1);  // brings a non-multiple into row t
      // re-clear row t and redo the pivot loop
      for (;;) {
        bool clean = true;
        for (int j = t + 1; j < w.cols; ++j) {
          if (w.m[t][j] == 0) continue;
          BigInt q = w.m[t][j] / w.m[t][t];
          w.add_col(j, t, -q);
          if (w.m[t][j] != 0) {
            w.swap_cols(t, j);
            clean = false;
          }
        }
        for (int i = t + 1; i < w.rows; ++i) {
          if (w.m[i][t] == 0) continue;
          BigInt q = w.m[i][t] / w.m[t][t];
          w.add_row(i, t, -q);
          if (w.m[i][t] != 0) {
            w.swap_rows(t, i);
            clean = false;
          }
        }
        if (clean) break;
      }
    }
    if (w.m[t][t] < 0) w.negate_row(t);
  }

  SnfResult res;
  res.rows = w.rows;
  res.cols = w.cols;
  for (int t = 0; t < n; ++t)
    if (w.m[t][t] != 0) res.invariant_factors.push_back(w.m[t][t]);
  res.free_rank = w.cols - (int)res.invariant_factors.size();
  res.u = w.u;
  res.v = w.v;

  // Reconstruction check: U * input * V == D, bit exact.
  IntMat d = mat_mul(mat_mul(w.u, input), w.v);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < w.cols; ++j) {
      BigInt want = 0;
      if (i == j && i < (int)res.invariant_factors.size())
        want = res.invariant_factors[i];
      if (d[i][j] != want)
        throw std::logic_error("smith normal form reconstruction failed");
    }
  for (size_t i = 1; i < res.invariant_factors.size(); ++i)
    if (res.invariant_factors[i] % res.invariant_factors[i - 1] != 0)
      throw std::logic_error("smith normal form divisibility chain failed");
  return res;
}

BigInt int_det(const IntMat& input) {
  int n = (int)input.size();
  if (n == 0) return 1;
  IntMat m = input;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int gf2_nullity(const IntMat& input) {
  int rows = (int)input.size();
  int cols = rows ? (int)input[0].size() : 0;
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[i][j] = (int)(((input[i][j] % 2) + 2) % 2);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = 0; i < rows; ++i)
      if (i != rank && m[i][col])
        for (int j = col; j < cols; ++j) m[i][j] ^= m[rank][j];
    ++rank;
  }
  return cols - rank;
}

}  // namespace linkrep
