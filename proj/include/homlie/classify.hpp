#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/structures.hpp"

namespace homlie {

enum class LieFamily { A3, N3, R3, R3_1, R3_m1, R3_z, R2xC, SO3 };

const char* lie_family_name(LieFamily f);

// Isomorphism class of a 3-dimensional Lie algebra. For R3_z the class is
// determined by k = z + 1/z; z holds the normalized representative (|z| < 1,
// or |z| = 1 with Im z > 0) when the needed square root lies in the field,
// otherwise root_missing is set and only k is known.
struct LieClass {
  LieFamily family = LieFamily::A3;
  std::optional<Scalar> z;
  std::optional<Scalar> k;
  bool root_missing = false;

  static LieClass of(LieFamily f) { return LieClass{f, std::nullopt, std::nullopt, false}; }
  static LieClass r3z(const Scalar& z);

  std::string to_string() const;
  friend bool operator==(const LieClass& x, const LieClass& y);
  friend bool operator!=(const LieClass& x, const LieClass& y) { return !(x == y); }
};

// Classification of a transform output.
struct OutputClass {
  enum class Kind { Lie, NoLie, NotSkew };
  Kind kind = Kind::Lie;
  LieClass lie;

  std::string to_string() const;
  friend bool operator==(const OutputClass& x, const OutputClass& y) {
    return x.kind == y.kind && (x.kind != Kind::Lie || x.lie == y.lie);
  }
  friend bool operator!=(const OutputClass& x, const OutputClass& y) { return !(x == y); }
};

// Representative of {z, 1/z} with |z| < 1, or |z| = 1 and Im z > 0, using the
// real embedding sqrt(r) > 0. Throws InvalidParameter for z in {0, 1, -1}.
Scalar normalize_z(const Scalar& z);

LieClass classify_lie(const SkewBilinear& mu);  // throws NotALieAlgebra
SkewBilinear lie_representative(const LieClass& c);

using Bindings = std::map<std::string, Scalar>;

struct CatalogEntry {
  int family = 0;
  int index = 0;
  Bindings params;
  HomLieStructure structure;
  LieClass lie;
  std::string notes;

  std::string label() const;  // e.g. "L6^13"
};

// Defaults z = 2, lambda = 3 when a binding is absent.
std::vector<CatalogEntry> catalog(std::optional<int> family = std::nullopt, const Bindings& bindings = {});
CatalogEntry catalog_entry(int family, int index, const Bindings& bindings = {});
int family_size(int family);

bool is_automorphism(const Mat& g, const SkewBilinear& mu);
bool verify_conjugation(const Mat& g, const HomLieStructure& s, const HomLieStructure& t);

// Canonical subspaces of the underlying algebra: D = [g,g], Z = center,
// CD = centralizer of D, and for two-dimensional D the eigenlines of ad(v0)
// on D (Ea, Eb ordered so that eig(Ea)/eig(Eb) is the normalized z; a single
// line E when ad(v0) is a nontrivial Jordan block).
std::map<std::string, Subspace> canonical_subspaces(const SkewBilinear& mu);
// rank of V -> V/W' of A restricted to W, for W canonical and W' canonical or 0.
std::map<std::string, int> flag_ranks(const HomLieStructure& s);

struct Fingerprint {
  int der_dim = 0;
  int der2_dim = 0;
  std::pair<int, int> rank_profile;
  bool multiplicative = false;
  bool left_kill = false;
  int tkernel_of_varpi = 0;
  std::vector<std::pair<Scalar, int>> der1_samples;
  std::vector<std::pair<std::pair<Scalar, Scalar>, OutputClass>> psi_probe;

  friend bool operator==(const Fingerprint& x, const Fingerprint& y);
  friend bool operator!=(const Fingerprint& x, const Fingerprint& y) { return !(x == y); }
  std::string to_string() const;
};

// t-samples {0, 1, z, 1/z} (z from the underlying class when known);
// psi probes {(0,0), (1,0), (0,1), (1,1)}.
Fingerprint fingerprint(const HomLieStructure& s);

std::pair<int, int> rank_profile(const Mat& a);

struct IdentifyResult {
  enum class Kind { Match, Candidates, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<CatalogEntry> entries;
  std::optional<Mat> witness;  // g with g . S = entry, for Match
};

IdentifyResult identify(const HomLieStructure& s, const Bindings& bindings = {});

// Basis change p with p . mu equal to lie_representative of target; empty when
// the normal form needs a root outside the field.
std::optional<Mat> lie_normal_form(const SkewBilinear& mu, const LieClass& target);

// Invertible g with g . S = T found by solving g A_S = A_T g over the
// conformal automorphisms of the normal form; empty when none is found.
std::optional<Mat> find_conjugation(const HomLieStructure& s, const HomLieStructure& t);

}  // namespace homlie
