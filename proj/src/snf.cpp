#include "tubular/snf.hpp"

#include <utility>

namespace tubular {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

std::vector<Int> mat_apply(const Matrix& a, const std::vector<Int>& x) {
  std::vector<Int> r(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

namespace {

void swap_rows(Matrix& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(Matrix& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= f * row j
void add_row(Matrix& m, int i, int j, const Int& f) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= f * m.at(j, c);
}
void add_col(Matrix& m, int i, int j, const Int& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) -= f * m.at(r, j);
}
void negate_row(Matrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const Matrix& input) {
  SmithResult res;
  res.d = input;
  res.p = Matrix::identity(input.rows);
  res.q = Matrix::identity(input.cols);
  Matrix& d = res.d;

  int t = 0;
  const int limit = std::min(d.rows, d.cols);
  while (t < limit) {
    // Find a pivot: smallest nonzero |entry| in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // all zero
    if (pi != t) { swap_rows(d, t, pi); swap_rows(res.p, t, pi); }
    if (pj != t) { swap_cols(d, t, pj); swap_cols(res.q, t, pj); }

    bool clean = true;
    for (int i = t + 1; i < d.rows; ++i) {
      if (d.at(i, t) == 0) continue;
      Int f = floor_div(d.at(i, t), d.at(t, t));
      add_row(d, i, t, f);
      add_row(res.p, i, t, f);
      if (d.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < d.cols; ++j) {
      if (d.at(t, j) == 0) continue;
      Int f = floor_div(d.at(t, j), d.at(t, t));
      add_col(d, j, t, f);
      add_col(res.q, j, t, f);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pivot

    // Divisibility: pivot must divide every remaining entry.
    bool divides = true;
    for (int i = t + 1; i < d.rows && divides; ++i)
      for (int j = t + 1; j < d.cols && divides; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          // Fold row i into row t and restart the pivot.
          add_row(d, t, i, Int(-1));
          add_row(res.p, t, i, Int(-1));
          divides = false;
        }
    if (!divides) continue;

    if (d.at(t, t) < 0) { negate_row(d, t); negate_row(res.p, t); }
    ++t;
  }

  for (int i = 0; i < limit; ++i)
    if (d.at(i, i) != 0) res.invariant_factors.push_back(d.at(i, i));
  return res;
}

Int determinant(const Matrix& m) {
  Matrix w = m;
  const int n = w.rows;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { swap = i; break; }
      if (swap < 0) return 0;
      swap_rows(w, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_integer(const Matrix& a, const std::vector<Int>& b) {
  SmithResult s = smith_normal_form(a);
  std::vector<Int> pb = mat_apply(s.p, b);
  std::vector<Int> y(a.cols);
  const int limit = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    Int di = i < limit ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (pb[i] != 0) return std::nullopt;
    } else {
      if (pb[i] % di != 0) return std::nullopt;
      y[i] = pb[i] / di;
    }
  }
  return mat_apply(s.q, y);
}

}  // namespace tubular
