#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homlie/structures.hpp"

namespace homlie {

struct SolutionSpace {
  int ambient_dim = 0;
  std::vector<Vec> basis;
  std::vector<std::string> labels;  // one per ambient coordinate
  int dim() const { return static_cast<int>(basis.size()); }
};

// A linear map given by evaluation; columns of its matrix are images of unit vectors.
using LinearMap = std::function<Vec(const Vec&)>;

Mat matrix_of(int n_unknowns, const LinearMap& f);
SolutionSpace solve_linear(int n_unknowns, std::vector<std::string> labels, const LinearMap& f);
int nullity(int n_unknowns, const LinearMap& f);

// Coordinate conventions: a 3x3 matrix uses 9 row-major coordinates; a skew
// bilinear map uses 9 coordinates (pairs (1,2),(1,3),(2,3) times output k);
// (lambda, B) spaces concatenate the two into 18 coordinates.
Mat matrix_from_coords(const Vec& x, int offset = 0);
SkewBilinear skew_from_coords(const Vec& x, int offset = 0);
Vec coords_of(const Mat& m);
Vec coords_of(const SkewBilinear& mu);
std::vector<std::string> matrix_labels(const std::string& name);
std::vector<std::string> skew_labels(const std::string& name);

SolutionSpace homlie_space(const SkewBilinear& mu);
SolutionSpace deformation_space(const SkewBilinear& mu);
SolutionSpace derivations(const HomLieStructure& s);
int derivation_dim(const HomLieStructure& s);
int der1(const HomLieStructure& s, const Scalar& t);
int der2(const HomLieStructure& s);
int t_kernel(const Bilinear& lam, const Mat& b);

// delta_mu(X)(y,z) = X mu(y,z) - mu(Xy,z) - mu(y,Xz).
SkewBilinear delta(const SkewBilinear& mu, const Mat& x);

SolutionSpace orbit_tangent(const HomLieStructure& s);
// Span of delta_mu(X) over X commuting with A (9 skew coordinates).
SolutionSpace fixed_twist_orbit_tangent(const HomLieStructure& s);

struct TangentDims {
  int t1 = 0, t2 = 0, t3 = 0, t4 = 0;
};
TangentDims variety_tangents(const HomLieStructure& s);
// Linearized hom-Jacobi in direction (lambda, B), evaluated on (e1, e2, e3).
Vec d_jacobi(const HomLieStructure& s, const SkewBilinear& lam, const Mat& b);

struct Rigidity {
  bool in_full_variety = false;
  bool in_fixed_twist_variety = false;
};
Rigidity rigidity_sufficient(const HomLieStructure& s);

}  // namespace homlie
