#include "core/lattice.hpp"

#include <algorithm>

namespace monfaces {

IntegerMatrix::IntegerMatrix(std::vector<IntVec> rows_in)
    : rows(rows_in.size()), cols(rows_in.empty() ? 0 : rows_in[0].size()),
      data(std::move(rows_in)) {
  for (const auto& r : data)
    if (r.size() != cols)
      throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data[i][i] = 1;
  return m;
}

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows)
    throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.data[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.data[i][j] += aik * b.data[k][j];
    }
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.data[j][i] = a.data[i][j];
  return out;
}

IntVec row_times(const IntVec& x, const IntegerMatrix& a) {
  if (x.size() != a.rows)
    throw Error(ErrorCode::dimension_mismatch, "row-vector product mismatch");
  IntVec out(a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols; ++j) out[j] += x[i] * a.data[i][j];
  }
  return out;
}

IntVec apply_col(const IntegerMatrix& a, const IntVec& x) {
  if (x.size() != a.cols)
    throw Error(ErrorCode::dimension_mismatch, "column-vector product mismatch");
  IntVec out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) out[i] = dot(a.data[i], x);
  return out;
}

Int determinant(const IntegerMatrix& a) {
  if (a.rows != a.cols)
    throw Error(ErrorCode::dimension_mismatch, "determinant needs a square matrix");
  const std::size_t n = a.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<IntVec> m = a.data;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntegerMatrix adjugate(const IntegerMatrix& a) {
  if (a.rows != a.cols)
    throw Error(ErrorCode::dimension_mismatch, "adjugate needs a square matrix");
  const std::size_t n = a.rows;
  IntegerMatrix out(n, n);
  if (n == 0) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.data[mr][mc++] = a.data[r][c];
        }
        ++mr;
      }
      Int cof = determinant(minor);
      out.data[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return out;
}

std::size_t rational_rank(const IntegerMatrix& a) {
  std::vector<IntVec> m = a.data;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Int f1 = m[rank][c], f2 = m[i][c];
      for (std::size_t j = c; j < a.cols; ++j)
        m[i][j] = m[i][j] * f1 - m[rank][j] * f2;
    }
    ++rank;
  }
  return rank;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncation toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntegerMatrix& a) {
  HnfResult res;
  res.h = a;
  res.u = IntegerMatrix::identity(a.rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    // Gather the column below r to a single nonzero pivot by gcd row ops.
    while (true) {
      std::size_t best = a.rows;
      for (std::size_t i = r; i < a.rows; ++i) {
        if (res.h[i][c] == 0) continue;
        if (best == a.rows ||
            abs(res.h[i][c]) < abs(res.h[best][c]))
          best = i;
      }
      if (best == a.rows) break;  // column is zero below r
      if (best != r) {
        std::swap(res.h.data[best], res.h.data[r]);
        std::swap(res.u.data[best], res.u.data[r]);
      }
      bool cleared = true;
      for (std::size_t i = r + 1; i < a.rows; ++i) {
        if (res.h[i][c] == 0) continue;
        Int q = res.h[i][c] / res.h[r][c];
        for (std::size_t j = 0; j < a.cols; ++j)
          res.h[i][j] -= q * res.h[r][j];
        for (std::size_t j = 0; j < a.rows; ++j)
          res.u[i][j] -= q * res.u[r][j];
        if (res.h[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (res.h[r][c] == 0) continue;
    if (res.h[r][c] < 0) {
      for (auto& x : res.h[r]) x = -x;
      for (auto& x : res.u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {  // reduce entries above the pivot
      Int q = floor_div(res.h[i][c], res.h[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < a.cols; ++j)
        res.h[i][j] -= q * res.h[r][j];
      for (std::size_t j = 0; j < a.rows; ++j)
        res.u[i][j] -= q * res.u[r][j];
    }
    res.pivots.emplace_back(r, c);
    ++r;
  }
  res.rank = r;
  return res;
}

bool in_row_lattice(const HnfResult& hnf, const IntVec& v) {
  if (v.size() != hnf.h.cols)
    throw Error(ErrorCode::dimension_mismatch, "vector size mismatch");
  IntVec w = v;
  for (auto [r, c] : hnf.pivots) {
    if (w[c] % hnf.h[r][c] != 0) return false;
    Int q = w[c] / hnf.h[r][c];
    if (q == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * hnf.h[r][j];
  }
  return is_zero_vec(w);
}

IntVec reduce_mod_lattice(const HnfResult& hnf, IntVec v) {
  if (v.size() != hnf.h.cols)
    throw Error(ErrorCode::dimension_mismatch, "vector size mismatch");
  for (auto [r, c] : hnf.pivots) {
    Int q = floor_div(v[c], hnf.h[r][c]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf.h[r][j];
  }
  return v;
}

SnfResult smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows, n = a.cols;
  SnfResult res;
  IntegerMatrix h = a;
  res.u = IntegerMatrix::identity(m);
  res.v = IntegerMatrix::identity(n);
  res.v_inv = IntegerMatrix::identity(n);

  auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
    // row i -= q * row k
    for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[k][j];
    for (std::size_t j = 0; j < m; ++j) res.u[i][j] -= q * res.u[k][j];
  };
  auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
    // col j -= q * col k;  V tracks it, V^-1 gets the inverse op on rows.
    for (std::size_t i = 0; i < m; ++i) h[i][j] -= q * h[i][k];
    for (std::size_t i = 0; i < n; ++i) res.v[i][j] -= q * res.v[i][k];
    for (std::size_t i = 0; i < n; ++i) res.v_inv[k][i] += q * res.v_inv[j][i];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(h.data[i], h.data[k]);
    std::swap(res.u.data[i], res.u.data[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) std::swap(h[i][j], h[i][k]);
    for (std::size_t i = 0; i < n; ++i) std::swap(res.v[i][j], res.v[i][k]);
    std::swap(res.v_inv.data[j], res.v_inv.data[k]);
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : h[i]) x = -x;
    for (auto& x : res.u[i]) x = -x;
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Locate a minimal-magnitude nonzero entry in the trailing submatrix.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (h[i][j] == 0) continue;
        if (pi == m || abs(h[i][j]) < abs(h[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // submatrix is zero
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool again = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (h[i][t] == 0) continue;
      row_op(i, t, h[i][t] / h[t][t]);
      if (h[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (h[t][j] == 0) continue;
      col_op(j, t, h[t][j] / h[t][t]);
      if (h[t][j] != 0) again = true;
    }
    if (again) continue;  // a smaller pivot appeared; redo this corner

    // Enforce that the corner divides the rest of the submatrix, so the
    // divisor chain comes out right without a separate pass.
    bool fixed = false;
    for (std::size_t i = t + 1; i < m && !fixed; ++i)
      for (std::size_t j = t + 1; j < n && !fixed; ++j)
        if (h[i][j] % h[t][t] != 0) {
          row_op(t, i, Int(-1));  // row t += row i
          fixed = true;
        }
    if (fixed) continue;

    if (h[t][t] < 0) row_negate(t);
    ++t;
  }

  for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(h[i][i]);
  res.rank = t;
  return res;
}

IntegerMatrix row_kernel(const IntegerMatrix& a) {
  HnfResult hnf = hermite_normal_form(a);
  std::vector<IntVec> basis;
  for (std::size_t i = hnf.rank; i < a.rows; ++i)
    basis.push_back(hnf.u[i]);
  IntegerMatrix out(basis.size(), a.rows);
  out.data = std::move(basis);
  return out;
}

IntVec SublatticeSplit::span_coords(const IntVec& x) const {
  IntVec c = coords_of(x);
  for (std::size_t i = rank; i < ambient; ++i)
    if (c[i] != 0)
      throw Error(ErrorCode::invalid_argument,
                  "vector is outside the saturated span");
  c.resize(rank);
  return c;
}

IntVec SublatticeSplit::quotient_coords(const IntVec& x) const {
  IntVec c = coords_of(x);
  return IntVec(c.begin() + static_cast<std::ptrdiff_t>(rank), c.end());
}

IntVec SublatticeSplit::quotient_lift(const IntVec& q) const {
  if (q.size() != ambient - rank)
    throw Error(ErrorCode::dimension_mismatch, "quotient coordinate mismatch");
  IntVec c(ambient);
  std::copy(q.begin(), q.end(), c.begin() + static_cast<std::ptrdiff_t>(rank));
  return from_coords(c);
}

SublatticeSplit split_by_span(const std::vector<IntVec>& span_rows,
                              std::size_t ambient) {
  IntegerMatrix b(span_rows.size(), ambient);
  b.data = span_rows;
  for (const auto& r : b.data)
    if (r.size() != ambient)
      throw Error(ErrorCode::dimension_mismatch, "span row size mismatch");
  SnfResult snf = smith_normal_form(b);
  SublatticeSplit split;
  split.ambient = ambient;
  split.rank = snf.rank;
  // Rows of V^-1 are an adapted basis: the first `rank` rows span the
  // saturation of the row span, the rest a complementary summand. x * V
  // recovers coordinates in that basis.
  split.basis_rows = snf.v_inv;
  split.coords = snf.v;
  return split;
}

}  // namespace monfaces
