#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/error.hpp"
#include "homlie/ratfunc.hpp"
#include "homlie/scalar.hpp"

namespace homlie {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<F>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  std::vector<F> column(int j) const {
    std::vector<F> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix m = x;
    for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += y.e_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix m = x;
    for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= y.e_[k];
    return m;
  }
  friend Matrix operator*(const F& c, const Matrix& x) {
    Matrix m = x;
    for (auto& v : m.e_) v = c * v;
    return m;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix m(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const F& a = x(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) m(i, j) += a * y(k, j);
      }
    return m;
  }
  friend std::vector<F> operator*(const Matrix& x, const std::vector<F>& v) {
    if (x.cols_ != static_cast<int>(v.size())) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<F> out(x.rows_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k)
        if (!v[k].is_zero() && !x(i, k).is_zero()) out[i] += x(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> e_;
};

using Mat = Matrix<Scalar>;
using CurveMat = Matrix<RatFunc>;
using Vec = std::vector<Scalar>;

// Fraction-free (Bareiss) elimination, first nonzero pivot in column order.
template <class F>
int rank(const Matrix<F>& m) {
  Matrix<F> a = m;
  int r = 0;
  F prev(1);
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const F piv = a(r, c);
    for (int i = r + 1; i < a.rows(); ++i) {
      // rows with a zero in the pivot column only get rescaled, which never changes rank
      if (a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (int j = c + 1; j < a.cols(); ++j) a(i, j) = (piv * a(i, j) - f * a(r, j)) / prev;
      a(i, c) = F(0);
    }
    prev = piv;
    ++r;
  }
  return r;
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return F(1);
  Matrix<F> a = m;
  F prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return F(0);
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = F(0);
    }
    prev = a(k, k);
  }
  F d = a(n - 1, n - 1);
  return negate ? F(0) - d : d;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::SingularMatrix, "inverse of non-square matrix");
  int n = m.rows();
  Matrix<F> a = m;
  Matrix<F> inv = Matrix<F>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const F pinv = F(1) / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * pinv;
      inv(c, j) = inv(c, j) * pinv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const F f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class F>
Matrix<F> power(const Matrix<F>& m, int k) {
  Matrix<F> out = Matrix<F>::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m);

// Right null space basis in echelon form: one vector per free column, with a 1
// in that column and zeros in the other free columns.
std::vector<Vec> kernel_basis(const Mat& m);

// Smallest k >= 1 with A^k = 0 (zero matrix -> 1); empty when not nilpotent.
std::optional<int> nilpotency_degree(const Mat& a);

// g^{-1} A g. Throws SingularMatrix.
Mat conjugate(const Mat& g, const Mat& a);
// g A g^{-1}, the action g . A.
Mat act_on_matrix(const Mat& g, const Mat& a);

struct CharData {
  Scalar trace, det, discriminant;
};
CharData char_data(const Mat& m);

// Elementary matrix E_ij (1-based): E_ij e_j = e_i.
Mat unit_matrix(int i, int j, int n = 3);
Vec basis_vector(int i, int n = 3);  // 0-based

std::string to_string(const Mat& m);
std::string to_string(const Vec& v);

}  // namespace homlie
