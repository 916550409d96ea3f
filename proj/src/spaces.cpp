#include "homlie/spaces.hpp"

#include <stdexcept>

namespace homlie {

namespace {

constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

void append(Vec& out, const Vec& v) { out.insert(out.end(), v.begin(), v.end()); }

void append(Vec& out, const Mat& m) {
  for (const auto& x : m.entries()) out.push_back(x);
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

}  // namespace

Mat matrix_of(int n_unknowns, const LinearMap& f) {
  std::vector<Vec> cols;
  cols.reserve(n_unknowns);
  for (int u = 0; u < n_unknowns; ++u) cols.push_back(f(basis_vector(u, n_unknowns)));
  int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  Mat m(rows, n_unknowns);
  for (int u = 0; u < n_unknowns; ++u)
    for (int r = 0; r < rows; ++r) m(r, u) = cols[u][r];
  return m;
}

SolutionSpace solve_linear(int n_unknowns, std::vector<std::string> labels, const LinearMap& f) {
  Mat m = matrix_of(n_unknowns, f);
  SolutionSpace out;
  out.ambient_dim = n_unknowns;
  out.labels = std::move(labels);
  out.basis = kernel_basis(m);
  for (const auto& v : out.basis)
    for (const auto& x : f(v))
      if (!x.is_zero()) throw std::logic_error("kernel vector fails re-substitution");
  return out;
}

int nullity(int n_unknowns, const LinearMap& f) { return n_unknowns - rank(matrix_of(n_unknowns, f)); }

Mat matrix_from_coords(const Vec& x, int offset) {
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = x[offset + 3 * i + j];
  return m;
}

SkewBilinear skew_from_coords(const Vec& x, int offset) {
  SkewBilinear mu;
  for (int p = 0; p < 3; ++p) mu.set(kPairs[p][0], kPairs[p][1], {x[offset + 3 * p], x[offset + 3 * p + 1], x[offset + 3 * p + 2]});
  return mu;
}

Vec coords_of(const Mat& m) { return m.entries(); }

Vec coords_of(const SkewBilinear& mu) {
  Vec out;
  for (const auto& pr : kPairs) append(out, mu.on_basis(pr[0], pr[1]));
  return out;
}

std::vector<std::string> matrix_labels(const std::string& name) {
  std::vector<std::string> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(name + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return out;
}

std::vector<std::string> skew_labels(const std::string& name) {
  std::vector<std::string> out;
  for (const auto& pr : kPairs)
    for (int k = 1; k <= 3; ++k)
      out.push_back(name + "(e" + std::to_string(pr[0] + 1) + ",e" + std::to_string(pr[1] + 1) + ")_" + std::to_string(k));
  return out;
}

SolutionSpace homlie_space(const SkewBilinear& mu) {
  return solve_linear(9, matrix_labels("A"), [&](const Vec& x) { return jacobiator(mu, matrix_from_coords(x)); });
}

SolutionSpace deformation_space(const SkewBilinear& mu) {
  if (!satisfies_jacobi(mu)) throw Error(ErrorCode::NotALieAlgebra, "Jacobi identity fails");
  static constexpr int kS3[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
  return solve_linear(9, matrix_labels("A"), [&](const Vec& x) {
    Mat a = matrix_from_coords(x);
    Vec total(3);
    for (const auto& s : kS3) {
      Vec v = mu.eval(basis_vector(s[0]), a * mu.on_basis(s[1], s[2]));
      for (int k = 0; k < 3; ++k) total[k] += Scalar(s[3]) * v[k];
    }
    return total;
  });
}

SkewBilinear delta(const SkewBilinear& mu, const Mat& x) {
  SkewBilinear out;
  for (const auto& pr : kPairs) {
    int i = pr[0], j = pr[1];
    Vec v = x * mu.on_basis(i, j);
    Vec a = mu.eval(x.column(i), basis_vector(j));
    Vec b = mu.eval(basis_vector(i), x.column(j));
    for (int k = 0; k < 3; ++k) v[k] = v[k] - a[k] - b[k];
    out.set(i, j, v);
  }
  return out;
}

namespace {

Vec derivation_system(const HomLieStructure& s, const Vec& x) {
  Mat d = matrix_from_coords(x);
  Vec out = coords_of(delta(s.mu, d));
  append(out, commutator(d, s.twist));
  return out;
}

}  // namespace

SolutionSpace derivations(const HomLieStructure& s) {
  return solve_linear(9, matrix_labels("D"), [&](const Vec& x) { return derivation_system(s, x); });
}

int derivation_dim(const HomLieStructure& s) {
  return nullity(9, [&](const Vec& x) { return derivation_system(s, x); });
}

int der1(const HomLieStructure& s, const Scalar& t) {
  // Unknowns (D2, D3); D1 = -t D3 is substituted.
  return nullity(18, [&](const Vec& x) {
    Mat d2 = matrix_from_coords(x, 0);
    Mat d3 = matrix_from_coords(x, 9);
    Mat d1 = (-t) * d3;
    Vec out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec v = d1 * s.mu.on_basis(i, j);
        Vec a = s.mu.eval(d2.column(i), basis_vector(j));
        Vec b = s.mu.eval(basis_vector(i), d3.column(j));
        for (int k = 0; k < 3; ++k) v[k] = v[k] + a[k] + b[k];
        append(out, v);
      }
    append(out, commutator(d1, s.twist));
    append(out, commutator(d2, s.twist));
    append(out, commutator(d3, s.twist));
    return out;
  });
}

int der2(const HomLieStructure& s) {
  return nullity(9, [&](const Vec& x) {
    Mat d = matrix_from_coords(x);
    Vec out;
    for (const auto& pr : kPairs) append(out, d * s.mu.on_basis(pr[0], pr[1]));
    append(out, commutator(d, s.twist));
    return out;
  });
}

int t_kernel(const Bilinear& lam, const Mat& b) {
  return nullity(9, [&](const Vec& x) {
    Mat m = matrix_from_coords(x);
    Vec out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) append(out, m * lam.on_basis(i, j));
    append(out, commutator(m, b));
    return out;
  });
}

SolutionSpace orbit_tangent(const HomLieStructure& s) {
  std::vector<Vec> images;
  for (int u = 0; u < 9; ++u) {
    Mat x = matrix_from_coords(basis_vector(u, 9));
    Vec v = coords_of(delta(s.mu, x));
    append(v, x * s.twist - s.twist * x);
    images.push_back(std::move(v));
  }
  SolutionSpace out;
  out.ambient_dim = 18;
  out.labels = skew_labels("lambda");
  for (auto& l : matrix_labels("B")) out.labels.push_back(l);
  out.basis = span_of(images);
  return out;
}

SolutionSpace fixed_twist_orbit_tangent(const HomLieStructure& s) {
  SolutionSpace centralizer =
      solve_linear(9, matrix_labels("X"), [&](const Vec& x) { return commutator(matrix_from_coords(x), s.twist).entries(); });
  std::vector<Vec> images;
  for (const auto& v : centralizer.basis) images.push_back(coords_of(delta(s.mu, matrix_from_coords(v))));
  SolutionSpace out;
  out.ambient_dim = 9;
  out.labels = skew_labels("lambda");
  out.basis = span_of(images);
  return out;
}

Vec d_jacobi(const HomLieStructure& s, const SkewBilinear& lam, const Mat& b) {
  static constexpr int kS3[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
  Vec total(3);
  for (const auto& p : kS3) {
    Vec ax = s.twist.column(p[0]);
    Vec t1 = s.mu.eval(ax, lam.on_basis(p[1], p[2]));
    Vec t2 = lam.eval(ax, s.mu.on_basis(p[1], p[2]));
    Vec t3 = s.mu.eval(b.column(p[0]), s.mu.on_basis(p[1], p[2]));
    for (int k = 0; k < 3; ++k) total[k] += Scalar(p[3]) * (t1[k] + t2[k] + t3[k]);
  }
  return total;
}

namespace {

// (dm)(lambda, B)(y, z) on basis pairs.
Vec d_mult(const HomLieStructure& s, const SkewBilinear& lam, const Mat& b) {
  Vec out;
  const Mat& a = s.twist;
  for (const auto& pr : kPairs) {
    int i = pr[0], j = pr[1];
    Vec v = a * lam.on_basis(i, j);
    Vec w = lam.eval(a.column(i), a.column(j));
    Vec x = b * s.mu.on_basis(i, j);
    Vec y = s.mu.eval(a.column(i), b.column(j));
    Vec z = s.mu.eval(b.column(i), a.column(j));
    for (int k = 0; k < 3; ++k) v[k] = v[k] - w[k] + x[k] - y[k] - z[k];
    append(out, v);
  }
  return out;
}

}  // namespace

TangentDims variety_tangents(const HomLieStructure& s) {
  TangentDims d;
  Mat zero(3, 3);
  d.t1 = nullity(18, [&](const Vec& x) { return d_jacobi(s, skew_from_coords(x), matrix_from_coords(x, 9)); });
  d.t2 = nullity(18, [&](const Vec& x) {
    SkewBilinear lam = skew_from_coords(x);
    Mat b = matrix_from_coords(x, 9);
    Vec out = d_jacobi(s, lam, b);
    append(out, d_mult(s, lam, b));
    return out;
  });
  d.t3 = nullity(9, [&](const Vec& x) { return d_jacobi(s, skew_from_coords(x), zero); });
  d.t4 = nullity(9, [&](const Vec& x) {
    SkewBilinear lam = skew_from_coords(x);
    Vec out = d_jacobi(s, lam, zero);
    append(out, d_mult(s, lam, zero));
    return out;
  });
  return d;
}

Rigidity rigidity_sufficient(const HomLieStructure& s) {
  TangentDims t = variety_tangents(s);
  Rigidity r;
  r.in_full_variety = orbit_tangent(s).dim() == t.t1;
  r.in_fixed_twist_variety = fixed_twist_orbit_tangent(s).dim() == t.t3;
  return r;
}

}  // namespace homlie
