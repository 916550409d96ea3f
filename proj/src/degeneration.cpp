#include "homlie/degeneration.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "homlie/spaces.hpp"
#include "homlie/transforms.hpp"

namespace homlie {

bool nilpotent_orbit_leq(const Mat& a, const Mat& b) {
  if (!nilpotency_degree(a) || !nilpotency_degree(b)) throw Error(ErrorCode::NotNilpotent, "rank criterion needs nilpotent maps");
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "size mismatch");
  Mat pa = a, pb = b;
  for (int k = 1; k < a.rows(); ++k) {
    if (rank(pa) < rank(pb)) return false;
    pa = pa * a;
    pb = pb * b;
  }
  return true;
}

bool lie_degenerates(const LieClass& a, const LieClass& b) {
  using F = LieFamily;
  if (a == b || b.family == F::A3) return true;
  switch (a.family) {
    case F::SO3: return b.family == F::R3_m1 || b.family == F::N3;
    case F::R3: return b.family == F::R3_1 || b.family == F::N3;
    case F::R3_m1:
    case F::R3_z:
    case F::R2xC: return b.family == F::N3;
    case F::R3_1:
    case F::N3:
    case F::A3: return false;
  }
  return false;
}

bool output_degenerates(const OutputClass& a, const OutputClass& b) {
  using K = OutputClass::Kind;
  if (a.kind == K::NotSkew) return true;
  if (b.kind == K::NotSkew) return false;
  if (a.kind == K::NoLie) return true;
  if (b.kind == K::NoLie) return false;
  return lie_degenerates(a.lie, b.lie);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Blocks: return "Blocks";
    case Verdict::Passes: return "Passes";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool ObstructionReport::refuted() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::Blocks; });
}

std::vector<std::string> ObstructionReport::blocking() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.verdict == Verdict::Blocks) out.push_back(e.name);
  return out;
}

std::string ObstructionReport::to_string() const {
  std::ostringstream o;
  for (const auto& e : entries) {
    o << e.name << ": " << verdict_name(e.verdict);
    if (!e.detail.empty()) o << " (" << e.detail << ")";
    o << "\n";
  }
  return o.str();
}

ProbeSet default_probes(const Bindings& source, const Bindings& target) {
  ProbeSet p;
  std::vector<Scalar> lambdas;
  for (const Bindings* b : {&source, &target}) {
    auto it = b->find("lambda");
    if (it != b->end() && std::find(lambdas.begin(), lambdas.end(), it->second) == lambdas.end())
      lambdas.push_back(it->second);
  }
  if (lambdas.empty()) lambdas.push_back(Scalar(3));
  for (const auto& l : lambdas) p.psi.emplace_back(Scalar(0), -l.inverse());
  p.psi.emplace_back(Scalar(1), Scalar(1));
  p.psi.emplace_back(Scalar(0), Scalar(1));
  p.phi = {Scalar(-1), Scalar(0), Scalar(1)};
  p.der1 = {Scalar(0), Scalar(1), Scalar(2), Scalar(Rational(1, 2)), Scalar(7)};
  return p;
}

namespace {

struct Invariants {
  int der = 0, der2 = 0, tkernel = 0;
  std::optional<std::pair<int, int>> rank;  // empty for a non-nilpotent twist
  bool mult = false, left_kill = false;
  std::optional<LieClass> lie;
  std::vector<int> der1;
  std::vector<OutputClass> psi, phi;
  OutputClass rho;
  std::map<std::string, int> flags;
};

void add_z_samples(const HomLieStructure& s, std::vector<Scalar>& ts) {
  if (!satisfies_jacobi(s.mu)) return;
  LieClass c = classify_lie(s.mu);
  if (c.family != LieFamily::R3_z || !c.z) return;
  for (const Scalar& t : {*c.z, c.z->inverse()})
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
}

Invariants compute_invariants(const HomLieStructure& s, const ProbeSet& p) {
  Invariants v;
  v.der = derivation_dim(s);
  v.der2 = der2(s);
  v.tkernel = t_kernel(varpi(s).first, s.twist);
  if (nilpotency_degree(s.twist)) v.rank = rank_profile(s.twist);
  v.mult = is_multiplicative(s);
  v.left_kill = is_left_killed(s);
  if (satisfies_jacobi(s.mu)) {
    v.lie = classify_lie(s.mu);
    v.flags = flag_ranks(s);
  }
  for (const auto& t : p.der1) v.der1.push_back(der1(s, t));
  for (const auto& [a, b] : p.psi) v.psi.push_back(classify_output(psi(s, a, b)));
  for (const auto& b : p.phi) v.phi.push_back(classify_output(phi(s, b)));
  v.rho = classify_output(rho(s));
  return v;
}

std::string pair_text(const Scalar& a, const Scalar& b) { return a.to_string() + "," + b.to_string(); }

bool same_lie(const Invariants& x, const Invariants& y) { return x.lie && y.lie && *x.lie == *y.lie; }

// Isomorphism invariants on which the two structures differ.
std::vector<std::string> differing(const Invariants& x, const Invariants& y) {
  std::vector<std::string> out;
  if (x.lie.has_value() != y.lie.has_value() || (x.lie && *x.lie != *y.lie)) out.push_back("lie");
  if (x.rank != y.rank) out.push_back("rank");
  if (x.mult != y.mult) out.push_back("multiplicative");
  if (x.left_kill != y.left_kill) out.push_back("left_kill");
  if (x.der2 != y.der2) out.push_back("der2");
  if (x.tkernel != y.tkernel) out.push_back("tkernel_varpi");
  if (x.der1 != y.der1) out.push_back("der1");
  if (x.psi != y.psi) out.push_back("psi");
  if (x.phi != y.phi) out.push_back("phi");
  if (x.rho != y.rho) out.push_back("rho");
  if (same_lie(x, y) && x.flags != y.flags) out.push_back("flag");
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

ObstructionReport compare(const HomLieStructure& s, const HomLieStructure& t, const Invariants& x,
                          const Invariants& y, const ProbeSet& p) {
  ObstructionReport r;
  auto add = [&](std::string name, Verdict v, std::string detail) {
    r.entries.push_back({std::move(name), v, std::move(detail)});
  };

  // (1) derivation dimension
  {
    std::string dims = std::to_string(x.der) + " vs " + std::to_string(y.der);
    if (x.der < y.der) {
      add("der", Verdict::Passes, dims);
    } else {
      std::vector<std::string> diff = differing(x, y);
      if (x.der > y.der) add("der", Verdict::Blocks, dims);
      else if (!diff.empty()) add("der", Verdict::Blocks, dims + "; non-isomorphic: " + join(diff));
      else if (find_conjugation(s, t)) add("der", Verdict::Passes, dims + "; isomorphic");
      else add("der", Verdict::Inconclusive, dims + "; no distinguishing invariant");
    }
  }

  // (2) underlying Lie algebra
  if (x.lie && y.lie) {
    bool ok = lie_degenerates(*x.lie, *y.lie);
    add("lie", ok ? Verdict::Passes : Verdict::Blocks, x.lie->to_string() + " -> " + y.lie->to_string());
  } else {
    add("lie", Verdict::Inconclusive, "underlying algebra is not Lie");
  }

  // (3) twist rank profile
  if (x.rank && y.rank) {
    bool ok = nilpotent_orbit_leq(s.twist, t.twist);
    std::string d = "(" + std::to_string(x.rank->first) + "," + std::to_string(x.rank->second) + ") -> (" +
                    std::to_string(y.rank->first) + "," + std::to_string(y.rank->second) + ")";
    add("rank", ok ? Verdict::Passes : Verdict::Blocks, d);
  } else {
    add("rank", Verdict::Inconclusive, "twist not nilpotent");
  }

  // (4) transform pushforwards
  auto push = [&](const std::string& name, const OutputClass& a, const OutputClass& b) {
    add(name, output_degenerates(a, b) ? Verdict::Passes : Verdict::Blocks, a.to_string() + " -> " + b.to_string());
  };
  for (size_t i = 0; i < p.psi.size(); ++i)
    push("psi(" + pair_text(p.psi[i].first, p.psi[i].second) + ")", x.psi[i], y.psi[i]);
  for (size_t i = 0; i < p.phi.size(); ++i) push("phi(" + p.phi[i].to_string() + ")", x.phi[i], y.phi[i]);
  push("rho", x.rho, y.rho);

  // (5) semicontinuity of kernel dimensions
  auto semi = [&](const std::string& name, int a, int b) {
    add(name, a > b ? Verdict::Blocks : Verdict::Passes, std::to_string(a) + " vs " + std::to_string(b));
  };
  semi("der2", x.der2, y.der2);
  for (size_t i = 0; i < p.der1.size(); ++i) semi("der1(" + p.der1[i].to_string() + ")", x.der1[i], y.der1[i]);
  semi("tkernel_varpi", x.tkernel, y.tkernel);

  // (6) closed conditions
  auto closed = [&](const std::string& name, bool a, bool b) {
    add(name, a && !b ? Verdict::Blocks : Verdict::Passes, std::string(a ? "yes" : "no") + " -> " + (b ? "yes" : "no"));
  };
  closed("closed:multiplicative", x.mult, y.mult);
  closed("closed:left_kill", x.left_kill, y.left_kill);

  // (7) ranks of the twist on canonical subspaces, same underlying algebra only
  if (same_lie(x, y)) {
    for (const auto& [key, a] : x.flags) {
      int b = y.flags.at(key);
      if (a < b) add("flag:" + key, Verdict::Blocks, std::to_string(a) + " vs " + std::to_string(b));
    }
  }
  return r;
}

ProbeSet probes_for(const std::vector<const HomLieStructure*>& structures, ProbeSet p) {
  for (const auto* s : structures) add_z_samples(*s, p.der1);
  return p;
}

}  // namespace

ObstructionReport obstructions(const HomLieStructure& s, const HomLieStructure& t) {
  return obstructions(s, t, default_probes());
}

ObstructionReport obstructions(const HomLieStructure& s, const HomLieStructure& t, const ProbeSet& probes) {
  ProbeSet p = probes_for({&s, &t}, probes);
  return compare(s, t, compute_invariants(s, p), compute_invariants(t, p), p);
}

// ------------------------------------------------------------ witnesses

namespace {

CurveMat lift(const Mat& m) {
  CurveMat c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c(i, j) = RatFunc(m(i, j));
  return c;
}

Scalar limit_or_throw(const RatFunc& f, const std::string& where) {
  Limit l = f.limit_at_infinity();
  if (!l.finite) throw Error(ErrorCode::DivergentEntry, where + " has no finite limit: " + f.to_string());
  return l.value;
}

}  // namespace

HomLieStructure witness_limit(const WitnessCurve& w, const HomLieStructure& s) {
  if (determinant(w.curve).is_zero()) throw Error(ErrorCode::SingularMatrix, "witness curve is not generically invertible");
  CurveMat g = w.curve;
  CurveMat gi = inverse(g);
  HomLieStructure out;
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const Bilinear full = s.mu.expand();
  std::array<std::vector<RatFunc>, 3> cols;
  for (int j = 0; j < 3; ++j) cols[j] = gi.column(j);
  for (const auto& pr : kPairs) {
    // g mu(g^-1 e_i, g^-1 e_j)
    std::vector<RatFunc> v(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (cols[pr[0]][a].is_zero() || cols[pr[1]][b].is_zero()) continue;
        RatFunc c = cols[pr[0]][a] * cols[pr[1]][b];
        for (int k = 0; k < 3; ++k) {
          const Scalar& m = full.at(a, b, k);
          if (!m.is_zero()) v[k] += c * RatFunc(m);
        }
      }
    std::vector<RatFunc> gv = g * v;
    Vec lim(3);
    for (int k = 0; k < 3; ++k)
      lim[k] = limit_or_throw(gv[k], "bracket (e" + std::to_string(pr[0] + 1) + ",e" + std::to_string(pr[1] + 1) + ")");
    out.mu.set(pr[0], pr[1], lim);
  }
  CurveMat a = g * lift(s.twist) * gi;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.twist(i, j) = limit_or_throw(a(i, j), "twist entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return out;
}

bool verify_witness(const WitnessCurve& w, const HomLieStructure& s, const HomLieStructure& t) {
  return witness_limit(w, s) == t;
}

WitnessCurve exdeg_curve(const Scalar& lambda) {
  RatFunc z = RatFunc(Poly::s()) + RatFunc(1);
  RatFunc l(lambda);
  RatFunc x = (z * z - 1) / (RatFunc(4) * l);
  WitnessCurve w;
  w.curve(0, 0) = RatFunc(1);
  w.curve(1, 0) = x;
  w.curve(1, 1) = (z + 1) * (z + 1) * (z - 1) / (RatFunc(8) * l * l);
  w.curve(2, 0) = -x;
  w.curve(2, 2) = (z + 1) * (z - 1) * (z - 1) / (RatFunc(8) * l * l);
  w.source = "L6^13";
  w.target = "L6^9";
  w.notes = "automorphism curve of r2xC with z = 1 + s";
  return w;
}

WitnessCurve exdeg2_curve(const Scalar& lambda) {
  RatFunc z = RatFunc(Poly::s()) + RatFunc(1);
  RatFunc l(lambda);
  RatFunc a = (RatFunc(1) - z * z) / (RatFunc(4) * l);
  RatFunc x = (z * z - 1) * (z - 1) / (RatFunc(8) * l * l);
  WitnessCurve w;
  w.curve(0, 0) = a;
  w.curve(1, 0) = x;
  w.curve(1, 1) = a;
  w.curve(1, 2) = a;
  w.curve(2, 1) = x;
  w.curve(2, 2) = (l * x - a) / l;
  w.source = "L6^9";
  w.target = "L1^5";
  w.notes = "contraction r2xC -> n3 with z = 1 + s, y = 0";
  return w;
}

namespace {

std::vector<Mat> shear_pool() {
  std::vector<Mat> pool;
  std::array<int, 3> perm = {0, 1, 2};
  do {
    Mat p(3, 3);
    for (int i = 0; i < 3; ++i) p(perm[i], i) = Scalar(1);
    pool.push_back(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j)
        for (int c : {1, -1}) pool.push_back(Mat::identity(3) + Scalar(c) * unit_matrix(i, j));
  return pool;
}

// Limit of diag(s^d) . S, if finite.
std::optional<HomLieStructure> diagonal_limit(const HomLieStructure& s, const std::array<int, 3>& d) {
  HomLieStructure out;
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    Vec v(3);
    for (int k = 0; k < 3; ++k) {
      const Scalar c = s.mu.get(pr[0], pr[1], k);
      if (c.is_zero()) continue;
      int e = d[k] - d[pr[0]] - d[pr[1]];
      if (e > 0) return std::nullopt;
      if (e == 0) v[k] = c;
    }
    out.mu.set(pr[0], pr[1], v);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& c = s.twist(i, j);
      if (c.is_zero()) continue;
      int e = d[i] - d[j];
      if (e > 0) return std::nullopt;
      if (e == 0) out.twist(i, j) = c;
    }
  return out;
}

CurveMat diagonal_curve(const std::array<int, 3>& d) {
  CurveMat c(3, 3);
  for (int i = 0; i < 3; ++i)
    c(i, i) = d[i] >= 0 ? RatFunc(Poly::monomial(Scalar(1), d[i])) : RatFunc(Poly(Scalar(1)), Poly::monomial(Scalar(1), -d[i]));
  return c;
}

}  // namespace

std::optional<WitnessCurve> diagonal_witness_search(const HomLieStructure& s, const HomLieStructure& t,
                                                    int max_exponent) {
  if (s == t) {
    WitnessCurve w;
    w.curve = lift(Mat::identity(3));
    w.notes = "identity";
    return w;
  }
  const auto t_rank = rank_profile(t.twist);
  const int t_der = derivation_dim(t);
  std::optional<LieClass> t_lie;
  if (satisfies_jacobi(t.mu)) t_lie = classify_lie(t.mu);
  std::vector<HomLieStructure> seen;
  for (const Mat& q : shear_pool()) {
    HomLieStructure qs = act(q, s);
    for (int a = -max_exponent; a <= max_exponent; ++a)
      for (int b = -max_exponent; b <= max_exponent; ++b)
        for (int c = -max_exponent; c <= max_exponent; ++c) {
          std::array<int, 3> d = {a, b, c};
          std::optional<HomLieStructure> lim = diagonal_limit(qs, d);
          if (!lim || rank_profile(lim->twist) != t_rank) continue;
          if (std::find(seen.begin(), seen.end(), *lim) != seen.end()) continue;
          seen.push_back(*lim);
          if (!satisfies_jacobi(lim->mu) || !t_lie || classify_lie(lim->mu) != *t_lie) continue;
          if (derivation_dim(*lim) != t_der) continue;
          std::optional<Mat> p = find_conjugation(*lim, t);
          if (!p) continue;
          WitnessCurve w;
          w.curve = lift(*p) * diagonal_curve(d) * lift(q);
          w.notes = "P diag(s^" + std::to_string(a) + ", s^" + std::to_string(b) + ", s^" + std::to_string(c) + ") Q";
          if (verify_witness(w, s, t)) return w;
        }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Hasse

HasseGraph build_hasse(const std::vector<HasseNode>& nodes, const std::vector<EdgeKey>& claimed_edges,
                       const std::map<EdgeKey, WitnessCurve>& witnesses, int search_exponent) {
  HasseGraph g;
  const int n = static_cast<int>(nodes.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(nodes[i].label, i).second) throw Error(ErrorCode::InvalidArgument, "duplicate node " + nodes[i].label);
    g.nodes.push_back(nodes[i].label);
  }
  std::sort(g.nodes.begin(), g.nodes.end());

  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [from, to] : claimed_edges) {
    if (!index.count(from) || !index.count(to)) throw Error(ErrorCode::InvalidArgument, "claim names unknown node " + from + " -> " + to);
    reach[index[from]][index[to]] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && reach[i][j] && reach[j][i]) throw Error(ErrorCode::InvalidArgument, "claimed edges contain a cycle");

  ProbeSet probes;
  {
    std::vector<Scalar> lambdas;
    for (const auto& node : nodes) {
      auto it = node.params.find("lambda");
      if (it != node.params.end() && std::find(lambdas.begin(), lambdas.end(), it->second) == lambdas.end())
        lambdas.push_back(it->second);
    }
    probes = default_probes();
    if (!lambdas.empty()) {
      probes.psi.clear();
      for (const auto& l : lambdas) probes.psi.emplace_back(Scalar(0), -l.inverse());
      probes.psi.emplace_back(Scalar(1), Scalar(1));
      probes.psi.emplace_back(Scalar(0), Scalar(1));
    }
    std::vector<const HomLieStructure*> ptrs;
    for (const auto& node : nodes) ptrs.push_back(&node.structure);
    probes = probes_for(ptrs, probes);
  }
  std::vector<Invariants> inv;
  for (const auto& node : nodes) inv.push_back(compute_invariants(node.structure, probes));

  std::vector<std::string> blocked_claims, unobstructed;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ObstructionReport r = compare(nodes[i].structure, nodes[j].structure, inv[i], inv[j], probes);
      if (reach[i][j]) {
        if (r.refuted()) blocked_claims.push_back(nodes[i].label + " -> " + nodes[j].label + " [" + join(r.blocking()) + "]");
      } else if (r.refuted()) {
        g.non_edges.push_back({nodes[i].label, nodes[j].label, r.blocking()});
      } else {
        if (find_conjugation(nodes[i].structure, nodes[j].structure))
          throw Error(ErrorCode::InvalidArgument, "isomorphic nodes " + nodes[i].label + " and " + nodes[j].label);
        unobstructed.push_back(nodes[i].label + " -> " + nodes[j].label);
      }
    }
  if (!blocked_claims.empty()) throw Error(ErrorCode::ClaimedEdgeBlocked, join(blocked_claims));
  if (!unobstructed.empty()) throw Error(ErrorCode::NonEdgeUnobstructed, join(unobstructed));

  for (const auto& key : claimed_edges) {
    const auto& [from, to] = key;
    const HomLieStructure& s = nodes[index[from]].structure;
    const HomLieStructure& t = nodes[index[to]].structure;
    EdgeStatus status = EdgeStatus::Claimed;
    auto it = witnesses.find(key);
    if (it != witnesses.end()) {
      try {
        if (verify_witness(it->second, s, t)) status = EdgeStatus::WitnessVerified;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivergentEntry) throw;
      }
    } else if (search_exponent >= 0 && diagonal_witness_search(s, t, search_exponent)) {
      status = EdgeStatus::WitnessVerified;
    }
    g.edges.push_back({from, to, status});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                            [](const auto& x, const auto& y) { return x.from == y.from && x.to == y.to; }),
                g.edges.end());

  // An edge i -> j survives the reduction unless some k != i, j lies between.
  for (const auto& e : g.edges) {
    int i = index[e.from], j = index[e.to];
    bool covered = false;
    for (int k = 0; k < n && !covered; ++k)
      if (k != i && k != j && reach[i][k] && reach[k][j]) covered = true;
    if (!covered) g.reduction.push_back(e);
  }
  std::sort(g.non_edges.begin(), g.non_edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return g;
}

std::string emit_dot(const HasseGraph& g) {
  std::string out = "digraph hasse {\n";
  for (const auto& node : g.nodes) out += "  \"" + node + "\";\n";
  for (const auto& e : g.reduction) {
    out += "  \"" + e.from + "\" -> \"" + e.to + "\"";
    if (e.status == EdgeStatus::Claimed) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::vector<EdgeKey> family_claims(int family) {
  static const std::vector<std::vector<std::pair<int, int>>> kEdges = {
      {{2, 1}, {1, 0}},
      {{4, 6}, {6, 3}, {6, 5}, {3, 2}, {5, 2}, {2, 1}, {1, 0}},
      {{6, 4}, {5, 3}, {2, 1}, {1, 0}},
      {{3, 2}, {2, 1}, {1, 0}},
      {{6, 4}, {5, 3}, {5, 2}, {3, 1}, {2, 1}, {1, 0}},
      {{9, 6}, {7, 5}, {7, 3}, {8, 3}, {8, 4}, {5, 2}, {4, 1}, {3, 1}, {3, 2}, {2, 0}, {1, 0}},
      {{13, 9}, {9, 6}, {12, 8}, {12, 10}, {12, 7}, {11, 7}, {11, 10}, {10, 5}, {10, 3}, {8, 4},
       {8, 3}, {7, 3}, {7, 5}, {5, 2}, {4, 1}, {3, 2}, {3, 1}, {2, 0}, {1, 0}},
      {{2, 1}, {1, 0}},
  };
  family_size(family);
  std::vector<EdgeKey> out;
  std::string p = "L" + std::to_string(family) + "^";
  for (const auto& [a, b] : kEdges[family]) out.emplace_back(p + std::to_string(a), p + std::to_string(b));
  return out;
}

std::vector<HasseNode> family_nodes(int family, const Bindings& bindings) {
  std::vector<HasseNode> out;
  for (const auto& e : catalog(family, bindings)) out.push_back({e.label(), e.structure, e.params});
  return out;
}

}  // namespace homlie
