#include "homlie/classify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "homlie/spaces.hpp"
#include "homlie/transforms.hpp"

namespace homlie {

const char* lie_family_name(LieFamily f) {
  switch (f) {
    case LieFamily::A3: return "a3";
    case LieFamily::N3: return "n3";
    case LieFamily::R3: return "r3";
    case LieFamily::R3_1: return "r3,1";
    case LieFamily::R3_m1: return "r3,-1";
    case LieFamily::R3_z: return "r3,z";
    case LieFamily::R2xC: return "r2xC";
    case LieFamily::SO3: return "so3";
  }
  return "?";
}

namespace {

int real_part_sign(const Scalar& x) {
  if (!x.has_radicand()) return x.re().sign();
  return sign_of_real_radical(x.re(), x.rad_re(), x.radicand());
}

int imag_part_sign(const Scalar& x) {
  if (!x.has_radicand()) return x.im().sign();
  return sign_of_real_radical(x.im(), x.rad_im(), x.radicand());
}

// sign(|x|^2 - 1) under the real embedding sqrt(r) > 0.
int abs2_minus_one_sign(const Scalar& x) {
  Rational p = x.re() * x.re() + x.im() * x.im() - Rational(1);
  if (!x.has_radicand()) return p.sign();
  const Rational& r = x.radicand();
  p += r * (x.rad_re() * x.rad_re() + x.rad_im() * x.rad_im());
  Rational q = Rational(2) * (x.re() * x.rad_re() + x.im() * x.rad_im());
  return sign_of_real_radical(p, q, r);
}

Scalar half(const Scalar& x) { return x / Scalar(2); }

struct AlmostAbelianData {
  Subspace d;
  std::vector<int> pivots;
  Vec v0;
  Mat m = Mat(2, 2);  // ad(v0) on d, in the coordinates of the echelon rows of d
};

int leading_index(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// Coordinates of w in an echelon (reduced) basis.
Vec coords_in(const Subspace& s, const std::vector<int>& pivots, const Vec& w) {
  Vec c(s.size());
  for (size_t q = 0; q < s.size(); ++q) c[q] = w[pivots[q]];
  return c;
}

Vec combine(const Subspace& s, const Vec& c) {
  Vec out(3);
  for (size_t q = 0; q < s.size(); ++q)
    for (int k = 0; k < 3; ++k)
      if (!c[q].is_zero()) out[k] += c[q] * s[q][k];
  return out;
}

Vec scaled(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

AlmostAbelianData almost_abelian_data(const SkewBilinear& mu, const Subspace& d) {
  AlmostAbelianData a;
  a.d = d;
  for (const auto& row : d) a.pivots.push_back(leading_index(row));
  for (int i = 0; i < 3; ++i)
    if (!contains(d, basis_vector(i))) {
      a.v0 = basis_vector(i);
      break;
    }
  for (int q = 0; q < 2; ++q) {
    Vec c = coords_in(d, a.pivots, mu.eval(a.v0, d[q]));
    a.m(0, q) = c[0];
    a.m(1, q) = c[1];
  }
  return a;
}

bool is_scalar_2x2(const Mat& m) { return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1); }

// Eigenline of a 2x2 matrix for eigenvalue e, in ambient coordinates.
Vec eigenline(const AlmostAbelianData& a, const Scalar& e) {
  Mat shifted = a.m - e * Mat::identity(2);
  std::vector<Vec> k = kernel_basis(shifted);
  if (k.size() != 1) throw std::logic_error("expected a one-dimensional eigenspace");
  return combine(a.d, k[0]);
}

Mat from_columns(const Vec& a, const Vec& b, const Vec& c) {
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
    m(i, 2) = c[i];
  }
  return m;
}

bool bracket_is_zero(const SkewBilinear& mu) { return mu.is_zero(); }

}  // namespace

LieClass LieClass::r3z(const Scalar& z) {
  LieClass c;
  c.family = LieFamily::R3_z;
  c.z = normalize_z(z);
  c.k = z + z.inverse();
  return c;
}

std::string LieClass::to_string() const {
  std::string out = lie_family_name(family);
  if (family == LieFamily::R3_z) {
    if (z) out += "(z=" + z->to_string() + ")";
    else out += "(k=" + k->to_string() + ", root not in field)";
  }
  return out;
}

bool operator==(const LieClass& x, const LieClass& y) {
  if (x.family != y.family) return false;
  if (x.family != LieFamily::R3_z) return true;
  return x.k == y.k;
}

std::string OutputClass::to_string() const {
  switch (kind) {
    case Kind::NoLie: return "NoLie";
    case Kind::NotSkew: return "NotSkew";
    case Kind::Lie: break;
  }
  return lie.to_string();
}

Scalar normalize_z(const Scalar& z) {
  if (z.is_zero()) throw Error(ErrorCode::InvalidParameter, "z must be nonzero");
  int s = abs2_minus_one_sign(z);
  if (s < 0) return z;
  if (s > 0) return z.inverse();
  int im = imag_part_sign(z);
  if (im == 0) throw Error(ErrorCode::InvalidParameter, "z must not be 1 or -1");
  return im > 0 ? z : z.inverse();
}

LieClass classify_lie(const SkewBilinear& mu) {
  if (!satisfies_jacobi(mu)) throw Error(ErrorCode::NotALieAlgebra, "Jacobi identity fails");
  if (bracket_is_zero(mu)) return LieClass::of(LieFamily::A3);
  if (!determinant(killing_form(mu)).is_zero()) return LieClass::of(LieFamily::SO3);
  Subspace d = bracket_of(mu, whole_space(), whole_space());
  if (d.size() == 1) {
    for (int j = 0; j < 3; ++j)
      for (const auto& x : mu.eval(d[0], basis_vector(j)))
        if (!x.is_zero()) return LieClass::of(LieFamily::R2xC);
    return LieClass::of(LieFamily::N3);
  }
  if (d.size() != 2) throw std::logic_error("solvable 3-dimensional algebra with derived algebra of dimension 3");
  AlmostAbelianData a = almost_abelian_data(mu, d);
  if (is_scalar_2x2(a.m)) return LieClass::of(LieFamily::R3_1);
  CharData ch = char_data(a.m);
  if (ch.discriminant.is_zero()) return LieClass::of(LieFamily::R3);
  if (ch.trace.is_zero()) return LieClass::of(LieFamily::R3_m1);
  LieClass c;
  c.family = LieFamily::R3_z;
  c.k = ch.trace * ch.trace / ch.det - Scalar(2);
  std::optional<Scalar> root;
  try {
    root = try_sqrt(*c.k * *c.k - Scalar(4));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IncompatibleRadicands) throw;
  }
  if (root) c.z = normalize_z(half(*c.k + *root));
  else c.root_missing = true;
  return c;
}

SkewBilinear lie_representative(const LieClass& c) {
  SkewBilinear mu;
  switch (c.family) {
    case LieFamily::A3: break;
    case LieFamily::N3: mu.set(0, 1, {0, 0, 1}); break;
    case LieFamily::R3:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 1, 1});
      break;
    case LieFamily::R3_1:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, 1});
      break;
    case LieFamily::R3_m1:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, -1});
      break;
    case LieFamily::R3_z:
      if (!c.z) throw Error(ErrorCode::RootNotInField, "r3,z representative needs z in the field");
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, *c.z});
      break;
    case LieFamily::R2xC: mu.set(0, 1, {0, 1, 0}); break;
    case LieFamily::SO3:
      mu.set(0, 1, {0, 0, 1});
      mu.set(1, 2, {1, 0, 0});
      mu.set(0, 2, {0, -1, 0});
      break;
  }
  return mu;
}

// ---------------------------------------------------------------- catalog

std::string CatalogEntry::label() const { return "L" + std::to_string(family) + "^" + std::to_string(index); }

namespace {

constexpr int kFamilySizes[8] = {3, 7, 7, 4, 7, 10, 14, 3};

Mat E(int i, int j) { return unit_matrix(i, j); }

Mat blk(const Scalar& l) { return l * (E(2, 2) + E(2, 3) - E(3, 2) - E(3, 3)); }

Scalar binding(const Bindings& b, const std::string& name, long long fallback) {
  auto it = b.find(name);
  return it == b.end() ? Scalar(fallback) : it->second;
}

// Entries whose canonical matrix carries the lambda modulus.
bool uses_lambda(int family, int index) {
  switch (family) {
    case 2: return index >= 3 && index <= 6;
    case 4: return index == 4 || index == 6;
    case 5: return index == 6 || index == 9;
    case 6: return index == 6 || index == 9 || index == 13;
    default: return false;
  }
}

Mat twist_for(int family, int index, const Scalar& z, const Scalar& lam) {
  (void)z;
  Mat zero(3, 3);
  const Scalar i = Scalar::imag_unit();
  switch (family) {
    case 0: {
      const Mat m[] = {zero, E(2, 3), E(1, 2) + E(2, 3)};
      return m[index];
    }
    case 1: {
      const Mat m[] = {zero, E(3, 2), E(1, 2), E(2, 3), E(1, 2) + E(2, 3), E(2, 1) + E(3, 2), E(2, 3) + E(3, 1)};
      return m[index];
    }
    case 2: {
      const Mat m[] = {zero,           E(2, 1),        E(3, 1),
                       lam * E(2, 3),  lam * E(3, 2),  lam * E(2, 3) + E(3, 1),
                       E(2, 1) + lam * E(3, 2)};
      return m[index];
    }
    case 3: {
      const Mat m[] = {zero, E(2, 1), E(2, 3), E(2, 1) + E(3, 2)};
      return m[index];
    }
    case 4: {
      const Mat m[] = {zero, E(2, 1), E(2, 1) + E(3, 1), E(2, 3), blk(lam), E(2, 1) + E(3, 2), E(2, 1) + blk(lam)};
      return m[index];
    }
    case 5:
    case 6: {
      const Mat m[] = {zero,    E(2, 1),           E(3, 1), E(2, 1) + E(3, 1),     E(2, 3),
                       E(3, 2), blk(lam),          E(2, 1) + E(3, 2),        E(2, 3) + E(3, 1),
                       E(2, 1) + blk(lam),         E(1, 2), E(1, 2) + E(3, 1), E(1, 2) + E(2, 3),
                       E(1, 2) + blk(lam)};
      return m[index];
    }
    case 7: {
      if (index == 0) return zero;
      if (index == 1) return Mat::from_rows({{0, 0, 0}, {0, 1, i}, {0, i, -1}});
      return Mat::from_rows({{0, 1, i}, {1, 0, 0}, {i, 0, 0}});
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

SkewBilinear family_bracket(int family, const Scalar& z) {
  SkewBilinear mu;
  switch (family) {
    case 0: break;
    case 1: mu.set(0, 1, {0, 0, 1}); break;
    case 2:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 1, 1});
      break;
    case 3:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, 1});
      break;
    case 4:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, -1});
      break;
    case 5:
      mu.set(0, 1, {0, 1, 0});
      mu.set(0, 2, {0, 0, z});
      break;
    case 6: mu.set(0, 1, {0, 1, 0}); break;
    case 7: return lie_representative(LieClass::of(LieFamily::SO3));
  }
  return mu;
}

LieClass family_class(int family, const Scalar& z) {
  static constexpr LieFamily kFam[8] = {LieFamily::A3,    LieFamily::N3,  LieFamily::R3,   LieFamily::R3_1,
                                        LieFamily::R3_m1, LieFamily::R3_z, LieFamily::R2xC, LieFamily::SO3};
  if (family == 5) return LieClass::r3z(z);
  return LieClass::of(kFam[family]);
}

std::string entry_notes(int family, int index) {
  std::string n;
  if (family == 4) n = "index assigned by matching Der dimension against the printed r3,-1 matrices";
  if (family == 5 && index == 4) n = "B2 e3 read as 0 (nilpotency of degree 2)";
  if (family == 7) n = "so3 basis with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2";
  return n;
}

}  // namespace

int family_size(int family) {
  if (family < 0 || family > 7) throw Error(ErrorCode::InvalidArgument, "family must be in 0..7");
  return kFamilySizes[family];
}

CatalogEntry catalog_entry(int family, int index, const Bindings& bindings) {
  if (index < 0 || index >= family_size(family)) throw Error(ErrorCode::InvalidArgument, "catalog index out of range");
  CatalogEntry e;
  e.family = family;
  e.index = index;
  Scalar z = binding(bindings, "z", 2);
  Scalar lam = binding(bindings, "lambda", 3);
  if (family == 5) {
    if (z.is_zero() || (z * z - Scalar(1)).is_zero())
      throw Error(ErrorCode::InvalidParameter, "family 5 needs z (z^2 - 1) != 0");
    e.params["z"] = z;
  }
  if (uses_lambda(family, index)) {
    if (lam.is_zero()) throw Error(ErrorCode::InvalidParameter, "lambda must be nonzero");
    if (family == 4) {
      int im = imag_part_sign(lam);
      if (im < 0 || (im == 0 && real_part_sign(lam) < 0)) lam = -lam;
    }
    e.params["lambda"] = lam;
  }
  e.structure.mu = family_bracket(family, z);
  e.structure.twist = twist_for(family, index, z, lam);
  e.lie = family_class(family, z);
  e.notes = entry_notes(family, index);
  return e;
}

std::vector<CatalogEntry> catalog(std::optional<int> family, const Bindings& bindings) {
  if (family) family_size(*family);
  std::vector<CatalogEntry> out;
  for (int f = 0; f < 8; ++f) {
    if (family && *family != f) continue;
    for (int i = 0; i < family_size(f); ++i) out.push_back(catalog_entry(f, i, bindings));
  }
  return out;
}

bool is_automorphism(const Mat& g, const SkewBilinear& mu) {
  if (determinant(g).is_zero()) return false;
  return act(g, mu) == mu;
}

bool verify_conjugation(const Mat& g, const HomLieStructure& s, const HomLieStructure& t) {
  if (determinant(g).is_zero()) throw Error(ErrorCode::SingularMatrix, "conjugation witness is singular");
  return g * s.twist == t.twist * g && act(g, s.mu) == t.mu;
}

// ---------------------------------------------------------- flag ranks

std::map<std::string, Subspace> canonical_subspaces(const SkewBilinear& mu) {
  std::map<std::string, Subspace> out;
  Subspace d = bracket_of(mu, whole_space(), whole_space());
  out["D"] = d;
  out["Z"] = center_of(mu);
  if (!d.empty()) {
    Mat m(3 * static_cast<int>(d.size()), 3);
    for (size_t q = 0; q < d.size(); ++q) {
      Mat ad = ad_matrix(mu, d[q]);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(3 * static_cast<int>(q) + i, j) = ad(i, j);
    }
    out["CD"] = span_of(kernel_basis(m));
  }
  if (d.size() == 2 && satisfies_jacobi(mu)) {
    AlmostAbelianData a = almost_abelian_data(mu, d);
    if (!is_scalar_2x2(a.m)) {
      CharData ch = char_data(a.m);
      if (ch.discriminant.is_zero()) {
        out["E"] = span_of({eigenline(a, half(ch.trace))});
      } else if (!ch.trace.is_zero()) {
        std::optional<Scalar> root;
        try {
          root = try_sqrt(ch.discriminant);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::IncompatibleRadicands) throw;
        }
        if (root) {
          Scalar ea = half(ch.trace + *root), eb = half(ch.trace - *root);
          if (normalize_z(ea / eb) != ea / eb) std::swap(ea, eb);
          out["Ea"] = span_of({eigenline(a, ea)});
          out["Eb"] = span_of({eigenline(a, eb)});
        }
      }
    }
  }
  return out;
}

std::map<std::string, int> flag_ranks(const HomLieStructure& s) {
  std::map<std::string, Subspace> subs = canonical_subspaces(s.mu);
  std::map<std::string, Subspace> quotients = subs;
  quotients["0"] = {};
  std::map<std::string, int> out;
  for (const auto& [wn, w] : subs)
    for (const auto& [qn, q] : quotients) {
      std::vector<Vec> gens = q;
      for (const auto& v : w) gens.push_back(s.twist * v);
      out[wn + "/" + qn] = static_cast<int>(span_of(gens).size() - q.size());
    }
  return out;
}

// ----------------------------------------------------------- fingerprint

std::pair<int, int> rank_profile(const Mat& a) { return {rank(a), rank(a * a)}; }

bool operator==(const Fingerprint& x, const Fingerprint& y) {
  return x.der_dim == y.der_dim && x.der2_dim == y.der2_dim && x.rank_profile == y.rank_profile &&
         x.multiplicative == y.multiplicative && x.left_kill == y.left_kill &&
         x.tkernel_of_varpi == y.tkernel_of_varpi && x.der1_samples == y.der1_samples && x.psi_probe == y.psi_probe;
}

std::string Fingerprint::to_string() const {
  std::ostringstream o;
  o << "der: " << der_dim << "\n";
  o << "der2: " << der2_dim << "\n";
  o << "rank_profile: (" << rank_profile.first << ", " << rank_profile.second << ")\n";
  o << "multiplicative: " << (multiplicative ? "yes" : "no") << "\n";
  o << "left_kill: " << (left_kill ? "yes" : "no") << "\n";
  o << "tkernel_varpi: " << tkernel_of_varpi << "\n";
  for (const auto& [t, d] : der1_samples) o << "der1(t=" << t.to_string() << "): " << d << "\n";
  for (const auto& [ab, c] : psi_probe)
    o << "psi(" << ab.first.to_string() << ", " << ab.second.to_string() << "): " << c.to_string() << "\n";
  return o.str();
}

Fingerprint fingerprint(const HomLieStructure& s) {
  Fingerprint f;
  f.der_dim = derivation_dim(s);
  f.der2_dim = der2(s);
  f.rank_profile = rank_profile(s.twist);
  f.multiplicative = is_multiplicative(s);
  f.left_kill = is_left_killed(s);
  f.tkernel_of_varpi = t_kernel(varpi(s).first, s.twist);
  std::vector<Scalar> ts = {Scalar(0), Scalar(1)};
  if (satisfies_jacobi(s.mu)) {
    LieClass c = classify_lie(s.mu);
    if (c.family == LieFamily::R3_z && c.z) {
      ts.push_back(*c.z);
      ts.push_back(c.z->inverse());
    }
  }
  for (const auto& t : ts) f.der1_samples.emplace_back(t, der1(s, t));
  const std::pair<int, int> probes[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (const auto& [a, b] : probes)
    f.psi_probe.push_back({{Scalar(a), Scalar(b)}, classify_output(psi(s, Scalar(a), Scalar(b)))});
  return f;
}

// -------------------------------------------------------------- identify

namespace {

// Orthonormal-type basis for so3: needs square roots of Killing norms.
std::optional<Mat> so3_normal_form(const SkewBilinear& mu) {
  Mat k = killing_form(mu);
  auto form = [&](const Vec& x, const Vec& y) {
    Scalar s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!x[i].is_zero() && !y[j].is_zero()) s += x[i] * k(i, j) * y[j];
    return s;
  };
  auto normalized = [&](const Vec& v) -> std::optional<Vec> {
    std::optional<Scalar> r = try_sqrt(Scalar(-2) / form(v, v));
    if (!r) return std::nullopt;
    return scaled(*r, v);
  };
  std::vector<Vec> trials;
  for (int i = 0; i < 3; ++i) trials.push_back(basis_vector(i));
  trials.push_back({1, 1, 0});
  trials.push_back({1, 0, 1});
  trials.push_back({0, 1, 1});
  try {
    std::optional<Vec> f1;
    for (const auto& v : trials)
      if (!form(v, v).is_zero()) {
        f1 = normalized(v);
        break;
      }
    if (!f1) return std::nullopt;
    // orthogonal complement of f1
    Mat row(1, 3);
    for (int j = 0; j < 3; ++j) row(0, j) = form(*f1, basis_vector(j));
    std::vector<Vec> w = kernel_basis(row);
    std::vector<Vec> cand = w;
    cand.push_back({w[0][0] + w[1][0], w[0][1] + w[1][1], w[0][2] + w[1][2]});
    std::optional<Vec> f2;
    for (const auto& v : cand)
      if (!form(v, v).is_zero()) {
        f2 = normalized(v);
        break;
      }
    if (!f2) return std::nullopt;
    Vec f3 = mu.eval(*f1, *f2);
    return inverse(from_columns(*f1, *f2, f3));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IncompatibleRadicands) return std::nullopt;
    throw;
  }
}

// Linear spaces of conformal automorphisms (k . rep proportional to rep) of a
// representative, as sets of linear equations on the 9 entries of k.
std::vector<std::vector<Vec>> conformal_automorphism_equations(LieFamily f) {
  auto eq = [](std::initializer_list<std::pair<int, int>> zeros) {
    std::vector<Vec> rows;
    for (const auto& [r, c] : zeros) rows.push_back(basis_vector(r * 3 + c, 9));
    return rows;
  };
  switch (f) {
    case LieFamily::A3: return {{}};
    case LieFamily::N3: return {eq({{0, 2}, {1, 2}})};
    case LieFamily::R2xC:
    case LieFamily::R3_z: return {eq({{0, 1}, {0, 2}, {2, 1}, {1, 2}})};
    case LieFamily::R3_m1: return {eq({{0, 1}, {0, 2}, {2, 1}, {1, 2}}), eq({{0, 1}, {0, 2}, {1, 1}, {2, 2}})};
    case LieFamily::R3_1: return {eq({{0, 1}, {0, 2}})};
    case LieFamily::R3: {
      std::vector<Vec> rows = eq({{0, 1}, {0, 2}, {2, 1}});
      Vec diag(9);
      diag[4] = Scalar(1);
      diag[8] = Scalar(-1);
      rows.push_back(diag);
      return {rows};
    }
    case LieFamily::SO3: return {};
  }
  return {};
}

// Factor c with x = c y, if any.
std::optional<Scalar> proportionality(const SkewBilinear& x, const SkewBilinear& y) {
  Vec cx = coords_of(x), cy = coords_of(y);
  std::optional<Scalar> c;
  for (size_t i = 0; i < cx.size(); ++i) {
    if (cy[i].is_zero()) {
      if (!cx[i].is_zero()) return std::nullopt;
      continue;
    }
    if (!c) c = cx[i] / cy[i];
    else if (cx[i] != *c * cy[i]) return std::nullopt;
  }
  if (!c) return Scalar(1);
  if (c->is_zero()) return std::nullopt;
  return c;
}

// Searches the span of `basis` (9-vectors) for invertible k with k . mu_s
// proportional to mu_t and k a_s = a_t k; returns it rescaled to an exact witness.
std::optional<Mat> search_span(const std::vector<Vec>& basis, const SkewBilinear& mu_s, const SkewBilinear& mu_t) {
  if (basis.empty()) return std::nullopt;
  auto attempt = [&](const Vec& coeffs) -> std::optional<Mat> {
    Vec x(9);
    for (size_t q = 0; q < basis.size(); ++q)
      if (!coeffs[q].is_zero())
        for (int u = 0; u < 9; ++u) x[u] += coeffs[q] * basis[q][u];
    Mat k = matrix_from_coords(x);
    if (determinant(k).is_zero()) return std::nullopt;
    std::optional<Scalar> c = proportionality(act(k, mu_s), mu_t);
    if (!c) return std::nullopt;
    return *c * k;
  };
  const size_t m = basis.size();
  Vec ones(m, Scalar(1));
  if (auto r = attempt(ones)) return r;
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int tries = 0; tries < 300; ++tries) {
    Vec c(m);
    for (auto& x : c) x = Scalar(dist(rng));
    if (auto r = attempt(c)) return r;
  }
  return std::nullopt;
}

std::vector<Vec> intertwiners(const std::vector<Vec>& space, const Mat& a_s, const Mat& a_t) {
  // k = sum c_q space_q with k a_s = a_t k
  LinearMap f = [&](const Vec& c) {
    Vec x(9);
    for (size_t q = 0; q < space.size(); ++q)
      if (!c[q].is_zero())
        for (int u = 0; u < 9; ++u) x[u] += c[q] * space[q][u];
    Mat k = matrix_from_coords(x);
    return (k * a_s - a_t * k).entries();
  };
  std::vector<Vec> out;
  for (const auto& c : kernel_basis(matrix_of(static_cast<int>(space.size()), f))) {
    Vec x(9);
    for (size_t q = 0; q < space.size(); ++q)
      if (!c[q].is_zero())
        for (int u = 0; u < 9; ++u) x[u] += c[q] * space[q][u];
    out.push_back(x);
  }
  return out;
}

std::vector<Vec> solution_space(const std::vector<Vec>& equations) {
  if (equations.empty()) {
    std::vector<Vec> all;
    for (int u = 0; u < 9; ++u) all.push_back(basis_vector(u, 9));
    return all;
  }
  Mat m(static_cast<int>(equations.size()), 9);
  for (size_t r = 0; r < equations.size(); ++r)
    for (int u = 0; u < 9; ++u) m(static_cast<int>(r), u) = equations[r][u];
  return kernel_basis(m);
}

Mat rotation(int plane, const Rational& c, const Rational& s) {
  Mat r = Mat::identity(3);
  int a = plane == 0 ? 1 : 0;
  int b = plane == 2 ? 1 : 2;
  r(a, a) = Scalar(c);
  r(b, b) = Scalar(c);
  r(a, b) = Scalar(-s);
  r(b, a) = Scalar(s);
  return r;
}

// Products of coordinate-plane rotations with Pythagorean parameters.
std::optional<Mat> so3_rotation_search(const HomLieStructure& s, const HomLieStructure& t) {
  std::vector<std::pair<Rational, Rational>> params = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::pair<long long, long long> pyth[] = {{3, 4}, {4, 3}, {5, 12}, {12, 5}};
  for (const auto& [p, q] : pyth) {
    long long h = p == 3 || p == 4 ? 5 : 13;
    for (int sp : {1, -1})
      for (int sq : {1, -1}) params.emplace_back(Rational(sp * p, h), Rational(sq * q, h));
  }
  std::vector<std::vector<Mat>> gens(3);
  for (int plane = 0; plane < 3; ++plane)
    for (const auto& [c, sn] : params) gens[plane].push_back(rotation(plane, c, sn));
  for (const auto& x : gens[0])
    for (const auto& y : gens[1]) {
      Mat xy = x * y, yx = y * x;
      for (const auto& z : gens[2])
        for (const Mat& g : {Mat(xy * z), Mat(z * yx)})
          if (g * s.twist == t.twist * g && act(g, s.mu) == t.mu) return g;
    }
  return std::nullopt;
}

}  // namespace

std::optional<Mat> lie_normal_form(const SkewBilinear& mu, const LieClass& target) {
  LieClass c = classify_lie(mu);
  if (c != target || (target.family == LieFamily::R3_z && !target.z)) return std::nullopt;
  SkewBilinear rep = lie_representative(target);
  std::optional<Mat> p;
  Subspace d = bracket_of(mu, whole_space(), whole_space());
  switch (c.family) {
    case LieFamily::A3: p = Mat::identity(3); break;
    case LieFamily::SO3: p = so3_normal_form(mu); break;
    case LieFamily::N3: {
      for (int i = 0; i < 3 && !p; ++i)
        for (int j = i + 1; j < 3 && !p; ++j) {
          Vec w = mu.on_basis(i, j);
          if (leading_index(w) >= 0) p = inverse(from_columns(basis_vector(i), basis_vector(j), w));
        }
      break;
    }
    case LieFamily::R2xC: {
      const Vec& w = d[0];
      int piv = leading_index(w);
      for (int i = 0; i < 3 && !p; ++i) {
        Vec u = mu.eval(basis_vector(i), w);
        if (u[piv].is_zero()) continue;
        Vec f1 = scaled(u[piv].inverse(), basis_vector(i));
        p = inverse(from_columns(f1, w, center_of(mu)[0]));
      }
      break;
    }
    default: {
      AlmostAbelianData a = almost_abelian_data(mu, d);
      CharData ch = char_data(a.m);
      if (c.family == LieFamily::R3_1) {
        p = inverse(from_columns(scaled(a.m(0, 0).inverse(), a.v0), d[0], d[1]));
      } else if (c.family == LieFamily::R3) {
        Scalar ev = half(ch.trace);
        Vec f1 = scaled(ev.inverse(), a.v0);
        for (const auto& f3 : d) {
          Vec f2 = mu.eval(f1, f3);
          for (int k = 0; k < 3; ++k) f2[k] -= f3[k];
          if (leading_index(f2) >= 0) {
            p = inverse(from_columns(f1, f2, f3));
            break;
          }
        }
      } else {
        Scalar z = c.family == LieFamily::R3_m1 ? Scalar(-1) : *target.z;
        std::optional<Scalar> root;
        try {
          root = try_sqrt(ch.discriminant);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::IncompatibleRadicands) throw;
        }
        if (!root) return std::nullopt;
        Scalar e1 = half(ch.trace + *root), e2 = half(ch.trace - *root);
        if (e2 / e1 != z) std::swap(e1, e2);
        if (e2 / e1 != z) return std::nullopt;
        p = inverse(from_columns(scaled(e1.inverse(), a.v0), eigenline(a, e1), eigenline(a, e2)));
      }
      break;
    }
  }
  if (!p) return std::nullopt;
  if (act(*p, mu) != rep) throw std::logic_error("normal form does not reach the representative");
  return p;
}

std::optional<Mat> find_conjugation(const HomLieStructure& s, const HomLieStructure& t) {
  if (!satisfies_jacobi(s.mu) || !satisfies_jacobi(t.mu)) return std::nullopt;
  LieClass cs = classify_lie(s.mu), ct = classify_lie(t.mu);
  if (cs != ct || cs.root_missing) return std::nullopt;
  if (s == t) return Mat::identity(3);
  std::optional<Mat> ps = lie_normal_form(s.mu, ct), pt = lie_normal_form(t.mu, ct);
  if (ps && pt) {
    SkewBilinear rep = lie_representative(ct);
    Mat as = act_on_matrix(*ps, s.twist), at = act_on_matrix(*pt, t.twist);
    Mat pt_inv = inverse(*pt);
    for (const auto& eqs : conformal_automorphism_equations(ct.family)) {
      std::optional<Mat> k = search_span(intertwiners(solution_space(eqs), as, at), rep, rep);
      if (k) {
        Mat g = pt_inv * *k * *ps;
        if (verify_conjugation(g, s, t)) return g;
      }
    }
  }
  if (ct.family == LieFamily::SO3)
    if (auto g = so3_rotation_search(s, t)) return g;
  std::vector<Vec> all = solution_space({});
  std::optional<Mat> g = search_span(intertwiners(all, s.twist, t.twist), s.mu, t.mu);
  if (g && verify_conjugation(*g, s, t)) return g;
  return std::nullopt;
}

IdentifyResult identify(const HomLieStructure& s, const Bindings& bindings) {
  if (!nilpotency_degree(s.twist)) throw Error(ErrorCode::NotNilpotentTwist, "twisting map is not nilpotent");
  for (const auto& x : hom_jacobiator(s))
    if (!x.is_zero()) throw Error(ErrorCode::HomJacobiFails, "hom-Jacobi identity fails");
  IdentifyResult out;
  if (!satisfies_jacobi(s.mu)) return out;
  LieClass c = classify_lie(s.mu);
  Fingerprint fs = fingerprint(s);
  for (const auto& e : catalog(std::nullopt, bindings)) {
    if (e.lie != c) continue;
    if (fingerprint(e.structure) == fs) out.entries.push_back(e);
  }
  if (out.entries.empty()) return out;
  out.kind = IdentifyResult::Kind::Candidates;
  if (out.entries.size() == 1) {
    out.witness = find_conjugation(s, out.entries[0].structure);
    if (out.witness) out.kind = IdentifyResult::Kind::Match;
  }
  return out;
}

}  // namespace homlie
