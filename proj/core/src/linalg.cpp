#include "camfan/linalg.hpp"

#include "camfan/errors.hpp"

namespace camfan {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = cols[c][r];
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

Mat Mat::transposed() const {
  Mat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) fail(Errc::Internal, "matrix shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xv * y.at(k, j);
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(Errc::Internal, "matrix shape mismatch");
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Mat operator-(const Mat& x) {
  Mat z = x;
  for (auto& v : z.a) v = -v;
  return z;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) fail(Errc::Internal, "matrix/vector shape mismatch");
  Vec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec vec_scaled(const Vec& x, const Scalar& t) {
  Vec r = x;
  for (auto& v : r) v *= t;
  return r;
}

bool vec_is_zero(const Vec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Scalar dot(const Vec& x, const Vec& y) {
  Scalar s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * y[i];
  return s;
}

int vec_compare(const Vec& x, const Vec& y) {
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    int c = Scalar::compare(x[i], y[i]);
    if (c != 0) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

namespace {
// Ratio y/x on the first coordinate where x is nonzero, if y = t*x exactly.
std::optional<Scalar> multiple_ratio(const Vec& x, const Vec& y) {
  if (x.size() != y.size() || vec_is_zero(x) || vec_is_zero(y)) return std::nullopt;
  Scalar t;
  bool have = false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) {
      if (!y[i].is_zero()) return std::nullopt;
      continue;
    }
    if (!have) {
      t = y[i] / x[i];
      have = true;
    } else if (y[i] != t * x[i]) {
      return std::nullopt;
    }
  }
  if (!have) return std::nullopt;
  return t;
}
}  // namespace

bool positive_multiple(const Vec& x, const Vec& y) {
  auto t = multiple_ratio(x, y);
  return t && t->sign() > 0;
}

bool scalar_multiple(const Vec& x, const Vec& y) {
  auto t = multiple_ratio(x, y);
  return t && t->sign() != 0;
}

int rref(Mat& m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Scalar inv = m.at(rank, c).inverse();
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c);
      for (int j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Scalar determinant(Mat m) {
  if (m.rows != m.cols) fail(Errc::Internal, "determinant of non-square matrix");
  Scalar det(1);
  for (int c = 0; c < m.cols; ++c) {
    int pivot = -1;
    for (int r = c; r < m.rows; ++r)
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int r = c + 1; r < m.rows; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (A.rows != A.cols || A.rows != static_cast<int>(b.size()))
    fail(Errc::Internal, "solve expects square system");
  Mat m(A.rows, A.cols + 1);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
    m.at(r, A.cols) = b[r];
  }
  int rank = rref(m);
  if (rank < A.rows) {
    // Singular: solvable iff no pivot landed in the constants column.
    for (int r = 0; r < m.rows; ++r) {
      bool zero_coeffs = true;
      for (int c = 0; c < A.cols; ++c)
        if (!m.at(r, c).is_zero()) {
          zero_coeffs = false;
          break;
        }
      if (zero_coeffs && !m.at(r, A.cols).is_zero()) return std::nullopt;
    }
    return std::nullopt;  // underdetermined; callers require unique solutions
  }
  Vec x(A.cols);
  for (int r = 0; r < A.rows; ++r) x[r] = m.at(r, A.cols);
  return x;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows != A.cols) fail(Errc::Internal, "inverse of non-square matrix");
  int n = A.rows;
  Mat m(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m.at(r, c) = A.at(r, c);
    m.at(r, n + r) = Scalar(1);
  }
  if (rref(m) < n) return std::nullopt;
  Mat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = m.at(r, n + c);
  return inv;
}

std::vector<Vec> null_space(const Mat& A) {
  Mat m = A;
  int rank = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(A.cols, false);
  {
    int r = 0;
    for (int c = 0; c < A.cols && r < rank; ++c) {
      if (!m.at(r, c).is_zero()) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
      }
    }
  }
  std::vector<Vec> basis;
  for (int c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(A.cols);
    v[c] = Scalar(1);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, c);
    basis.push_back(std::move(v));
  }
  if (!basis.empty()) {
    Mat b = Mat::from_rows(basis);
    rref(b);
    for (size_t i = 0; i < basis.size(); ++i) basis[i] = b.row(static_cast<int>(i));
  }
  return basis;
}

bool positive_definite(const Mat& A) {
  if (A.rows != A.cols) return false;
  for (int k = 1; k <= A.rows; ++k) {
    Mat sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub.at(r, c) = A.at(r, c);
    if (determinant(sub).sign() <= 0) return false;
  }
  return true;
}

}  // namespace camfan
