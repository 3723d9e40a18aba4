#pragma once

#include <optional>
#include <vector>

#include "tubular/numeric.hpp"

namespace tubular {

// Small dense integer matrix; plenty for the homology bookkeeping here.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  bool operator==(const Matrix&) const = default;
};

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Int> mat_apply(const Matrix& a, const std::vector<Int>& x);

// P * input * Q = D with P, Q unimodular, D diagonal, d1 | d2 | ... and all
// diagonal entries nonnegative (zeros last).
struct SmithResult {
  Matrix d;
  Matrix p;  // rows transform
  Matrix q;  // cols transform
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

SmithResult smith_normal_form(const Matrix& m);

// Integer determinant (Bareiss), used to check unimodularity in tests.
Int determinant(const Matrix& m);

// One integer solution x of A x = b, if any.
std::optional<std::vector<Int>> solve_integer(const Matrix& a, const std::vector<Int>& b);

}  // namespace tubular
