#include "homlie/matrix.hpp"

namespace homlie {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    if (!m(r, c).is_one()) {
      Scalar inv = m(r, c).inverse();
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -a(static_cast<int>(row), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<int> nilpotency_degree(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "nilpotency of non-square matrix");
  if (a.rows() == 0) return 0;
  Mat p = a;
  for (int k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

Mat conjugate(const Mat& g, const Mat& a) { return inverse(g) * a * g; }
Mat act_on_matrix(const Mat& g, const Mat& a) { return g * a * inverse(g); }

CharData char_data(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::InvalidArgument, "char_data expects a 2x2 matrix");
  Scalar tr = m(0, 0) + m(1, 1);
  Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return {tr, det, tr * tr - Scalar(4) * det};
}

Mat unit_matrix(int i, int j, int n) {
  Mat m(n, n);
  m(i - 1, j - 1) = Scalar(1);
  return m;
}

Vec basis_vector(int i, int n) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

std::string to_string(const Mat& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    out += (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
  }
  return out + "]";
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

}  // namespace homlie
