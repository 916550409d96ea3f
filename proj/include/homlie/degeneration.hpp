#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/classify.hpp"

namespace homlie {

// B lies in the closure of the similarity class of A. Throws NotNilpotent.
bool nilpotent_orbit_leq(const Mat& a, const Mat& b);

// Degeneration order on 3-dimensional Lie algebras (reflexive, transitive).
bool lie_degenerates(const LieClass& a, const LieClass& b);
// Same order extended to transform outputs: a non-Lie source may degenerate to
// anything, a Lie source never degenerates to a non-Lie target.
bool output_degenerates(const OutputClass& a, const OutputClass& b);

enum class Verdict { Blocks, Passes, Inconclusive };
const char* verdict_name(Verdict v);

struct ObstructionEntry {
  std::string name;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

struct ObstructionReport {
  std::vector<ObstructionEntry> entries;
  bool refuted() const;
  std::vector<std::string> blocking() const;  // names of blocking entries, in order
  std::string to_string() const;
};

struct ProbeSet {
  std::vector<std::pair<Scalar, Scalar>> psi;
  std::vector<Scalar> phi;
  std::vector<Scalar> der1;
};

// psi at (0, -1/lambda) for every lambda in either binding (3 when none is
// bound), (1, 1), (0, 1); phi at -1, 0, 1; der1 at 0, 1, 2, 1/2, 7.
ProbeSet default_probes(const Bindings& source = {}, const Bindings& target = {});

ObstructionReport obstructions(const HomLieStructure& s, const HomLieStructure& t);
ObstructionReport obstructions(const HomLieStructure& s, const HomLieStructure& t, const ProbeSet& probes);

struct WitnessCurve {
  CurveMat curve = CurveMat(3, 3);
  std::string source, target;
  std::string notes;
};

// Entrywise limit s -> infinity of g(s) . S. Throws DivergentEntry.
HomLieStructure witness_limit(const WitnessCurve& w, const HomLieStructure& s);
bool verify_witness(const WitnessCurve& w, const HomLieStructure& s, const HomLieStructure& t);

// Family 6 curves with z = 1 + s.
WitnessCurve exdeg_curve(const Scalar& lambda);   // L6^13(lambda) -> L6^9(lambda)
WitnessCurve exdeg2_curve(const Scalar& lambda);  // L6^9(lambda) -> L1^5

std::optional<WitnessCurve> diagonal_witness_search(const HomLieStructure& s, const HomLieStructure& t,
                                                    int max_exponent);

struct HasseNode {
  std::string label;
  HomLieStructure structure;
  Bindings params;
};

enum class EdgeStatus { WitnessVerified, Claimed };

struct HasseEdge {
  std::string from, to;
  EdgeStatus status = EdgeStatus::Claimed;
  friend bool operator==(const HasseEdge& x, const HasseEdge& y) {
    return x.from == y.from && x.to == y.to && x.status == y.status;
  }
};

struct NonEdge {
  std::string from, to;
  std::vector<std::string> blocking;
};

struct HasseGraph {
  std::vector<std::string> nodes;
  std::vector<HasseEdge> edges;      // claimed edges with their status
  std::vector<NonEdge> non_edges;    // ordered pairs outside the claimed order
  std::vector<HasseEdge> reduction;  // transitive reduction of the claimed order
};

using EdgeKey = std::pair<std::string, std::string>;

// search_exponent < 0 disables diagonal_witness_search for edges without a witness.
HasseGraph build_hasse(const std::vector<HasseNode>& nodes, const std::vector<EdgeKey>& claimed_edges,
                       const std::map<EdgeKey, WitnessCurve>& witnesses, int search_exponent = -1);

std::string emit_dot(const HasseGraph& g);

// Hasse diagrams of the per-family degeneration order (labels "Lf^i").
std::vector<EdgeKey> family_claims(int family);
std::vector<HasseNode> family_nodes(int family, const Bindings& bindings = {});

}  // namespace homlie
