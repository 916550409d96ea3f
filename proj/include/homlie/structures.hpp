#pragma once

#include <array>
#include <string>
#include <vector>

#include "homlie/matrix.hpp"

namespace homlie {

// General bilinear map on C^3: mu(e_i, e_j) = sum_k c[i][j][k] e_k (0-based).
class Bilinear {
 public:
  Scalar& at(int i, int j, int k) { return c_[(i * 3 + j) * 3 + k]; }
  const Scalar& at(int i, int j, int k) const { return c_[(i * 3 + j) * 3 + k]; }

  Vec eval(const Vec& x, const Vec& y) const;
  Vec on_basis(int i, int j) const { return {at(i, j, 0), at(i, j, 1), at(i, j, 2)}; }
  bool is_zero() const;
  bool is_skew() const;

  friend Bilinear operator+(const Bilinear& x, const Bilinear& y);
  friend Bilinear operator*(const Scalar& s, const Bilinear& x);
  friend bool operator==(const Bilinear& x, const Bilinear& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Bilinear& x, const Bilinear& y) { return !(x == y); }

  std::string to_string() const;

 private:
  std::array<Scalar, 27> c_{};
};

// Skew-symmetric bilinear map stored by the pairs (1,2), (1,3), (2,3).
class SkewBilinear {
 public:
  // i < j, 0-based.
  void set(int i, int j, const Vec& value);
  Scalar get(int i, int j, int k) const;
  Vec on_basis(int i, int j) const;

  Vec eval(const Vec& x, const Vec& y) const;
  Bilinear expand() const;
  static SkewBilinear from_bilinear(const Bilinear& b);  // throws InvalidArgument if not skew
  bool is_zero() const;

  friend bool operator==(const SkewBilinear& x, const SkewBilinear& y) { return x.c_ == y.c_; }
  friend bool operator!=(const SkewBilinear& x, const SkewBilinear& y) { return !(x == y); }

  std::string to_string() const;

 private:
  static int pair_index(int i, int j);
  std::array<Scalar, 9> c_{};
};

struct HomLieStructure {
  SkewBilinear mu;
  Mat twist = Mat(3, 3);

  friend bool operator==(const HomLieStructure& x, const HomLieStructure& y) {
    return x.mu == y.mu && x.twist == y.twist;
  }
  friend bool operator!=(const HomLieStructure& x, const HomLieStructure& y) { return !(x == y); }
};

Vec eval(const SkewBilinear& mu, const Vec& x, const Vec& y);
Vec eval(const Bilinear& mu, const Vec& x, const Vec& y);

// sum over S3 of sign(s) A e_s(1) . (e_s(2) . e_s(3)).
Vec jacobiator(const SkewBilinear& mu, const Mat& a);
Vec hom_jacobiator(const HomLieStructure& s);
bool satisfies_jacobi(const SkewBilinear& mu);
bool is_multiplicative(const HomLieStructure& s);
// mu(A x, y) = 0 for all x, y.
bool is_left_killed(const HomLieStructure& s);

// g . mu (x, y) = g mu(g^-1 x, g^-1 y); g . A = g A g^-1.
SkewBilinear act(const Mat& g, const SkewBilinear& mu);
Bilinear act(const Mat& g, const Bilinear& mu);
HomLieStructure act(const Mat& g, const HomLieStructure& s);
// Same action given g and a precomputed inverse.
SkewBilinear act(const Mat& g, const Mat& g_inv, const SkewBilinear& mu);

Mat ad_matrix(const SkewBilinear& mu, const Vec& x);
Mat killing_form(const SkewBilinear& mu);

// Bases of subspaces, each stored as echelon rows.
using Subspace = std::vector<Vec>;
Subspace span_of(const std::vector<Vec>& vectors);
Subspace whole_space(int n = 3);
Subspace bracket_of(const SkewBilinear& mu, const Subspace& u, const Subspace& v);
bool contains(const Subspace& space, const Vec& v);

struct Series {
  std::vector<Subspace> derived;
  std::vector<Subspace> lower_central;
};
Series derived_and_central_series(const SkewBilinear& mu);

Subspace center_of(const SkewBilinear& mu);

SkewBilinear associated_bracket(const HomLieStructure& s);
SkewBilinear almost_abelian_from(const Mat& m);

}  // namespace homlie
