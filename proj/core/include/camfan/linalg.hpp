#ifndef CAMFAN_LINALG_HPP
#define CAMFAN_LINALG_HPP

#include <optional>
#include <vector>

#include "camfan/scalar.hpp"

namespace camfan {

/// Dense matrix over Scalar, row-major. Everything here is exact; there are
/// no tolerances anywhere in this module.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);
  Vec row(int r) const;
  Vec col(int c) const;
  Mat transposed() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x);
Vec operator*(const Mat& m, const Vec& v);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scaled(const Vec& x, const Scalar& t);
bool vec_is_zero(const Vec& x);
Scalar dot(const Vec& x, const Vec& y);

/// Lexicographic total order on vectors (exact); used for deterministic sorts.
int vec_compare(const Vec& x, const Vec& y);

/// True iff y = t*x for some t > 0 (both nonzero).
bool positive_multiple(const Vec& x, const Vec& y);
/// True iff y = t*x for some t != 0.
bool scalar_multiple(const Vec& x, const Vec& y);

/// Reduced row-echelon form in place; returns the rank. Rows of zeroes sink
/// to the bottom and pivots are normalized to 1, so the result is the
/// canonical representative of the row space.
int rref(Mat& m);

Scalar determinant(Mat m);

/// Solve A x = b for square A; nullopt when A is singular.
std::optional<Vec> solve(const Mat& A, const Vec& b);

std::optional<Mat> inverse(const Mat& A);

/// Basis of {x : A x = 0}, canonicalized (RREF of the spanning set).
std::vector<Vec> null_space(const Mat& A);

/// Exact positive-definiteness via leading principal minors.
bool positive_definite(const Mat& A);

}  // namespace camfan

#endif
