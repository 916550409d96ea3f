#include "homlie/structures.hpp"

namespace homlie {

namespace {

struct Perm {
  int p[3];
  int sign;
};

constexpr Perm kS3[6] = {{{0, 1, 2}, 1},  {{1, 2, 0}, 1},  {{2, 0, 1}, 1},
                         {{0, 2, 1}, -1}, {{2, 1, 0}, -1}, {{1, 0, 2}, -1}};

void axpy(Vec& out, const Scalar& a, const Vec& v) {
  if (a.is_zero()) return;
  for (size_t k = 0; k < out.size(); ++k)
    if (!v[k].is_zero()) out[k] += a * v[k];
}

}  // namespace

Vec Bilinear::eval(const Vec& x, const Vec& y) const {
  Vec out(3);
  for (int i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (int k = 0; k < 3; ++k)
        if (!at(i, j, k).is_zero()) out[k] += w * at(i, j, k);
    }
  }
  return out;
}

bool Bilinear::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Bilinear::is_skew() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
  return true;
}

Bilinear operator+(const Bilinear& x, const Bilinear& y) {
  Bilinear out;
  for (size_t n = 0; n < 27; ++n) out.c_[n] = x.c_[n] + y.c_[n];
  return out;
}

Bilinear operator*(const Scalar& s, const Bilinear& x) {
  Bilinear out;
  if (s.is_zero()) return out;
  for (size_t n = 0; n < 27; ++n) out.c_[n] = s * x.c_[n];
  return out;
}

std::string Bilinear::to_string() const {
  std::string out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v = on_basis(i, j);
      bool zero = true;
      for (const auto& x : v) zero = zero && x.is_zero();
      if (zero) continue;
      if (!out.empty()) out += ", ";
      out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " + homlie::to_string(v);
    }
  return out.empty() ? "0" : out;
}

int SkewBilinear::pair_index(int i, int j) {
  if (i == 0 && j == 1) return 0;
  if (i == 0 && j == 2) return 1;
  if (i == 1 && j == 2) return 2;
  throw Error(ErrorCode::IndexOrder, "skew pair requires i < j");
}

void SkewBilinear::set(int i, int j, const Vec& value) {
  int p = pair_index(i, j);
  for (int k = 0; k < 3; ++k) c_[p * 3 + k] = value[k];
}

Scalar SkewBilinear::get(int i, int j, int k) const {
  if (i == j) return Scalar();
  if (i < j) return c_[pair_index(i, j) * 3 + k];
  return -c_[pair_index(j, i) * 3 + k];
}

Vec SkewBilinear::on_basis(int i, int j) const { return {get(i, j, 0), get(i, j, 1), get(i, j, 2)}; }

Vec SkewBilinear::eval(const Vec& x, const Vec& y) const {
  Vec out(3);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p) {
    int i = kPairs[p][0], j = kPairs[p][1];
    Scalar w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (int k = 0; k < 3; ++k)
      if (!c_[p * 3 + k].is_zero()) out[k] += w * c_[p * 3 + k];
  }
  return out;
}

Bilinear SkewBilinear::expand() const {
  Bilinear b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) b.at(i, j, k) = get(i, j, k);
  return b;
}

SkewBilinear SkewBilinear::from_bilinear(const Bilinear& b) {
  if (!b.is_skew()) throw Error(ErrorCode::InvalidArgument, "bilinear map is not skew-symmetric");
  SkewBilinear s;
  s.set(0, 1, b.on_basis(0, 1));
  s.set(0, 2, b.on_basis(0, 2));
  s.set(1, 2, b.on_basis(1, 2));
  return s;
}

bool SkewBilinear::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::string SkewBilinear::to_string() const {
  std::string out;
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    Vec v = on_basis(pr[0], pr[1]);
    bool zero = true;
    for (const auto& x : v) zero = zero && x.is_zero();
    if (zero) continue;
    if (!out.empty()) out += ", ";
    out += "[e" + std::to_string(pr[0] + 1) + ",e" + std::to_string(pr[1] + 1) + "] = " + homlie::to_string(v);
  }
  return out.empty() ? "0" : out;
}

Vec eval(const SkewBilinear& mu, const Vec& x, const Vec& y) { return mu.eval(x, y); }
Vec eval(const Bilinear& mu, const Vec& x, const Vec& y) { return mu.eval(x, y); }

Vec jacobiator(const SkewBilinear& mu, const Mat& a) {
  Vec total(3);
  for (const auto& s : kS3) {
    Vec inner = mu.on_basis(s.p[1], s.p[2]);
    Vec outer = mu.eval(a.column(s.p[0]), inner);
    axpy(total, Scalar(s.sign), outer);
  }
  return total;
}

Vec hom_jacobiator(const HomLieStructure& s) { return jacobiator(s.mu, s.twist); }

bool satisfies_jacobi(const SkewBilinear& mu) {
  for (const auto& x : jacobiator(mu, Mat::identity(3)))
    if (!x.is_zero()) return false;
  return true;
}

bool is_multiplicative(const HomLieStructure& s) {
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    Vec lhs = s.twist * s.mu.on_basis(pr[0], pr[1]);
    Vec rhs = s.mu.eval(s.twist.column(pr[0]), s.twist.column(pr[1]));
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_left_killed(const HomLieStructure& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (const auto& x : s.mu.eval(s.twist.column(i), basis_vector(j)))
        if (!x.is_zero()) return false;
  return true;
}

SkewBilinear act(const Mat& g, const Mat& g_inv, const SkewBilinear& mu) {
  SkewBilinear out;
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) out.set(pr[0], pr[1], g * mu.eval(g_inv.column(pr[0]), g_inv.column(pr[1])));
  return out;
}

SkewBilinear act(const Mat& g, const SkewBilinear& mu) { return act(g, inverse(g), mu); }

Bilinear act(const Mat& g, const Bilinear& mu) {
  Mat gi = inverse(g);
  Bilinear out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v = g * mu.eval(gi.column(i), gi.column(j));
      for (int k = 0; k < 3; ++k) out.at(i, j, k) = v[k];
    }
  return out;
}

HomLieStructure act(const Mat& g, const HomLieStructure& s) {
  Mat gi = inverse(g);
  return {act(g, gi, s.mu), g * s.twist * gi};
}

Mat ad_matrix(const SkewBilinear& mu, const Vec& x) {
  Mat m(3, 3);
  for (int j = 0; j < 3; ++j) {
    Vec v = mu.eval(x, basis_vector(j));
    for (int i = 0; i < 3; ++i) m(i, j) = v[i];
  }
  return m;
}

Mat killing_form(const SkewBilinear& mu) {
  if (!satisfies_jacobi(mu)) throw Error(ErrorCode::NotALieAlgebra, "Jacobi identity fails");
  Mat ads[3] = {ad_matrix(mu, basis_vector(0)), ad_matrix(mu, basis_vector(1)), ad_matrix(mu, basis_vector(2))};
  Mat k(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat p = ads[i] * ads[j];
      k(i, j) = p(0, 0) + p(1, 1) + p(2, 2);
    }
  return k;
}

Subspace span_of(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  int n = static_cast<int>(vectors[0].size());
  Mat m(static_cast<int>(vectors.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = vectors[i][j];
  std::vector<int> piv = rref(m);
  Subspace out;
  for (size_t r = 0; r < piv.size(); ++r) {
    Vec row(n);
    for (int j = 0; j < n; ++j) row[j] = m(static_cast<int>(r), j);
    out.push_back(std::move(row));
  }
  return out;
}

Subspace whole_space(int n) {
  Subspace s;
  for (int i = 0; i < n; ++i) s.push_back(basis_vector(i, n));
  return s;
}

Subspace bracket_of(const SkewBilinear& mu, const Subspace& u, const Subspace& v) {
  std::vector<Vec> gens;
  for (const auto& x : u)
    for (const auto& y : v) gens.push_back(mu.eval(x, y));
  return span_of(gens);
}

bool contains(const Subspace& space, const Vec& v) {
  std::vector<Vec> gens = space;
  gens.push_back(v);
  return span_of(gens).size() == span_of(space).size();
}

Series derived_and_central_series(const SkewBilinear& mu) {
  Series s;
  s.derived.push_back(whole_space());
  while (true) {
    Subspace next = bracket_of(mu, s.derived.back(), s.derived.back());
    if (next == s.derived.back()) break;
    s.derived.push_back(next);
    if (next.empty()) break;
  }
  s.lower_central.push_back(whole_space());
  while (true) {
    Subspace next = bracket_of(mu, whole_space(), s.lower_central.back());
    if (next == s.lower_central.back()) break;
    s.lower_central.push_back(next);
    if (next.empty()) break;
  }
  return s;
}

Subspace center_of(const SkewBilinear& mu) {
  Mat m(9, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v = mu.on_basis(i, j);
      for (int k = 0; k < 3; ++k) m(j * 3 + k, i) = v[k];
    }
  return span_of(kernel_basis(m));
}

SkewBilinear associated_bracket(const HomLieStructure& s) {
  if (determinant(s.twist).is_zero()) throw Error(ErrorCode::SingularTwist, "twisting map is not invertible");
  if (!is_multiplicative(s)) throw Error(ErrorCode::TwistNotAutomorphism, "twisting map is not an automorphism");
  Mat inv = inverse(s.twist);
  SkewBilinear out;
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) out.set(pr[0], pr[1], inv * s.mu.on_basis(pr[0], pr[1]));
  if (!satisfies_jacobi(out)) throw Error(ErrorCode::HomJacobiFails, "associated bracket fails Jacobi");
  return out;
}

SkewBilinear almost_abelian_from(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::InvalidArgument, "almost abelian data must be 2x2");
  SkewBilinear out;
  out.set(0, 1, {Scalar(), m(0, 0), m(1, 0)});
  out.set(0, 2, {Scalar(), m(0, 1), m(1, 1)});
  return out;
}

}  // namespace homlie
