#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "homlie/degeneration.hpp"
#include "homlie/io.hpp"
#include "homlie/spaces.hpp"
#include "homlie/transforms.hpp"

using namespace homlie;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

AlgebraFile load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_space(std::ostream& out, const std::string& name, const SolutionSpace& sp) {
  out << name << ": " << sp.dim() << "\n";
  for (int b = 0; b < sp.dim(); ++b) {
    out << "  " << name << "[" << b + 1 << "]:";
    for (int c = 0; c < sp.ambient_dim; ++c)
      if (!sp.basis[b][c].is_zero()) out << " " << sp.labels[c] << "=" << sp.basis[b][c].to_string();
    out << "\n";
  }
}

std::string lie_class_text(const SkewBilinear& mu) {
  try {
    return classify_lie(mu).to_string();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotALieAlgebra) return "not a Lie algebra";
    throw;
  }
}

Bindings parse_sets(const std::vector<std::string>& sets) {
  Bindings b;
  for (const std::string& s : sets) {
    size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidArgument, "expected NAME=SCALAR, got " + s);
    b[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1), b);
  }
  return b;
}

int cmd_check(const std::string& path) {
  AlgebraFile f = load_algebra(path);
  const HomLieStructure& s = f.structure;
  bool jacobi = true;
  for (const Scalar& c : hom_jacobiator(s)) jacobi = jacobi && c.is_zero();
  std::optional<int> nil = nilpotency_degree(s.twist);
  std::string lie = lie_class_text(s.mu);
  std::cout << "name: " << f.name << "\n";
  std::cout << "hom-Jacobi: " << (jacobi ? "pass" : "fail") << "\n";
  std::cout << "multiplicative: " << yes_no(is_multiplicative(s)) << "\n";
  std::cout << "left-killed: " << yes_no(is_left_killed(s)) << "\n";
  std::cout << "twist-nilpotent: " << (nil ? "yes (degree " + std::to_string(*nil) + ")" : "no") << "\n";
  auto rp = rank_profile(s.twist);
  std::cout << "rank-profile: " << rp.first << " " << rp.second << "\n";
  std::cout << "lie-class: " << lie << "\n";
  return jacobi && nil && lie != "not a Lie algebra" ? kOk : kRefuted;
}

int cmd_spaces(const std::string& path, const std::vector<std::string>& der1_ts, bool want_der2, bool want_homlie,
               bool want_deformation) {
  AlgebraFile f = load_algebra(path);
  const HomLieStructure& s = f.structure;
  print_space(std::cout, "der", derivations(s));
  for (const std::string& t : der1_ts) {
    Scalar v = parse_scalar(t, f.params);
    std::cout << "der1(" << v.to_string() << "): " << der1(s, v) << "\n";
  }
  if (want_der2) std::cout << "der2: " << der2(s) << "\n";
  if (want_homlie) print_space(std::cout, "homlie-space", homlie_space(s.mu));
  if (want_deformation) print_space(std::cout, "deformation", deformation_space(s.mu));
  return kOk;
}

int cmd_classify_lie(const std::string& path) {
  AlgebraFile f = load_algebra(path);
  std::string lie = lie_class_text(f.structure.mu);
  std::cout << "lie-class: " << lie << "\n";
  return lie == "not a Lie algebra" ? kRefuted : kOk;
}

int cmd_identify(const std::string& path) {
  AlgebraFile f = load_algebra(path);
  IdentifyResult r = identify(f.structure, f.params);
  switch (r.kind) {
    case IdentifyResult::Kind::Match:
      std::cout << "match: " << r.entries[0].label() << "\n";
      if (r.witness) std::cout << "witness: " << to_string(*r.witness) << "\n";
      return kOk;
    case IdentifyResult::Kind::Candidates:
      std::cout << "match: ambiguous\n";
      for (const auto& e : r.entries) std::cout << "candidate: " << e.label() << "\n";
      return kInconclusive;
    case IdentifyResult::Kind::Unknown:
      break;
  }
  std::cout << "match: none\n";
  return kRefuted;
}

// Splits "A,B" at the top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw Error(ErrorCode::InvalidArgument, "expected A,B for --psi");
}

int cmd_transform(const std::string& path, const std::string& psi_arg, const std::string& phi_arg, bool want_rho,
                  bool want_varpi, bool want_classify) {
  int chosen = !psi_arg.empty() + !phi_arg.empty() + want_rho + want_varpi;
  if (chosen != 1) throw Error(ErrorCode::InvalidArgument, "choose exactly one of --psi, --phi, --rho, --varpi");
  AlgebraFile f = load_algebra(path);
  const HomLieStructure& s = f.structure;
  if (want_varpi) {
    auto [lam, b] = varpi(s);
    std::cout << "transform: varpi\n";
    std::cout << "bilinear: " << lam.to_string() << "\n";
    std::cout << "twist: " << to_string(b) << "\n";
    std::cout << "t-kernel: " << t_kernel(lam, b) << "\n";
    if (want_classify) std::cout << "class: " << classify_output(lam).to_string() << "\n";
    return kOk;
  }
  SkewBilinear out;
  if (!psi_arg.empty()) {
    auto [a, b] = split_pair(psi_arg);
    Scalar alpha = parse_scalar(a, f.params), beta = parse_scalar(b, f.params);
    out = psi(s, alpha, beta);
    std::cout << "transform: psi(" << alpha.to_string() << ", " << beta.to_string() << ")\n";
  } else if (!phi_arg.empty()) {
    Scalar beta = parse_scalar(phi_arg, f.params);
    out = phi(s, beta);
    std::cout << "transform: phi(" << beta.to_string() << ")\n";
  } else {
    out = rho(s);
    std::cout << "transform: rho\n";
  }
  std::cout << "bracket: " << out.to_string() << "\n";
  if (want_classify) std::cout << "class: " << classify_output(out).to_string() << "\n";
  return kOk;
}

int cmd_tangent(const std::string& path) {
  AlgebraFile f = load_algebra(path);
  const HomLieStructure& s = f.structure;
  int orbit = orbit_tangent(s).dim();
  int der = derivation_dim(s);
  TangentDims t = variety_tangents(s);
  Rigidity r = rigidity_sufficient(s);
  std::cout << "orbit-tangent: " << orbit << "\n";
  std::cout << "der: " << der << "\n";
  std::cout << "fixed-twist-orbit-tangent: " << fixed_twist_orbit_tangent(s).dim() << "\n";
  std::cout << "T1: " << t.t1 << "\nT2: " << t.t2 << "\nT3: " << t.t3 << "\nT4: " << t.t4 << "\n";
  std::cout << "rigid-in-variety: " << yes_no(r.in_full_variety) << "\n";
  std::cout << "rigid-fixed-twist: " << yes_no(r.in_fixed_twist_variety) << "\n";
  return kOk;
}

int cmd_degenerate(const std::string& src, const std::string& dst, const std::string& witness_path, int search) {
  AlgebraFile a = load_algebra(src), b = load_algebra(dst);
  std::cout << "source: " << a.name << "\ntarget: " << b.name << "\n";
  if (!witness_path.empty()) {
    WitnessCurve w = parse_curve(read_file(witness_path));
    bool ok = false;
    try {
      HomLieStructure lim = witness_limit(w, a.structure);
      ok = lim == b.structure;
      std::cout << "limit-bracket: " << lim.mu.to_string() << "\nlimit-twist: " << to_string(lim.twist) << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivergentEntry && e.code() != ErrorCode::SingularMatrix) throw;
      std::cout << "limit: " << e.what() << "\n";
    }
    std::cout << "witness: " << (ok ? "pass" : "fail") << "\n";
    std::cout << "verdict: " << (ok ? "Verified" : "Inconclusive (witness mismatch)") << "\n";
    return ok ? kOk : kRefuted;
  }
  ObstructionReport rep = obstructions(a.structure, b.structure, default_probes(a.params, b.params));
  for (const auto& e : rep.entries) {
    std::cout << "obstruction " << e.name << ": " << verdict_name(e.verdict);
    if (!e.detail.empty()) std::cout << " (" << e.detail << ")";
    std::cout << "\n";
  }
  if (rep.refuted()) {
    std::string names;
    for (const auto& n : rep.blocking()) names += (names.empty() ? "" : ",") + n;
    std::cout << "verdict: Refuted(" << names << ")\n";
    return kRefuted;
  }
  bool isomorphic = !rep.entries.empty() && rep.entries[0].name == "der" &&
                    rep.entries[0].verdict == Verdict::Passes &&
                    rep.entries[0].detail.find("; isomorphic") != std::string::npos;
  if (isomorphic) {
    std::cout << "verdict: Verified (isomorphic)\n";
    return kOk;
  }
  if (search >= 0) {
    if (auto w = diagonal_witness_search(a.structure, b.structure, search)) {
      w->source = a.name;
      w->target = b.name;
      std::cout << "witness: found\n" << export_curve("found", *w);
      std::cout << "verdict: Verified\n";
      return kOk;
    }
    std::cout << "witness: none found\n";
  }
  std::cout << "verdict: Inconclusive\n";
  return kInconclusive;
}

int cmd_catalog(std::optional<int> family, const std::vector<std::string>& sets, const std::string& export_dir) {
  Bindings b = parse_sets(sets);
  std::vector<CatalogEntry> entries = catalog(family, b);
  for (const auto& e : entries) {
    std::cout << e.label() << ": lie " << e.lie.to_string() << ", der " << derivation_dim(e.structure);
    for (const auto& [k, v] : e.params) std::cout << ", " << k << " " << v.to_string();
    std::cout << "\n";
  }
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& e : entries) {
      std::string file = "L" + std::to_string(e.family) + "_" + std::to_string(e.index) + ".alg";
      write_file((std::filesystem::path(export_dir) / file).string(), export_algebra(e.label(), e.structure, e.params));
    }
    std::cout << "exported: " << entries.size() << "\n";
  }
  return kOk;
}

int cmd_hasse(int family, const std::string& claims_path, const std::string& dot_path, int search,
              const std::vector<std::string>& sets) {
  Bindings b = parse_sets(sets);
  std::vector<HasseNode> nodes = family_nodes(family, b);
  std::vector<EdgeKey> claims;
  std::map<EdgeKey, WitnessCurve> witnesses;
  if (claims_path.empty()) {
    claims = family_claims(family);
    if (family == 6) {
      Scalar lambda = b.count("lambda") ? b.at("lambda") : Scalar(3);
      witnesses[{"L6^13", "L6^9"}] = exdeg_curve(lambda);
    }
  } else {
    std::filesystem::path base = std::filesystem::path(claims_path).parent_path();
    for (const ClaimLine& c : parse_claims(read_file(claims_path))) {
      claims.push_back({c.from, c.to});
      if (c.witness_path) {
        std::filesystem::path p(*c.witness_path);
        if (p.is_relative()) p = base / p;
        witnesses[{c.from, c.to}] = parse_curve(read_file(p.string()));
      }
    }
  }
  HasseGraph g = build_hasse(nodes, claims, witnesses, search);
  for (const auto& e : g.edges)
    std::cout << "edge " << e.from << " -> " << e.to << ": "
              << (e.status == EdgeStatus::WitnessVerified ? "WitnessVerified" : "Claimed") << "\n";
  for (const auto& n : g.non_edges) {
    std::cout << "non-edge " << n.from << " -> " << n.to << ":";
    for (const auto& r : n.blocking) std::cout << " " << r;
    std::cout << "\n";
  }
  std::cout << "reduction-edges: " << g.reduction.size() << "\n";
  if (!dot_path.empty()) write_file(dot_path, emit_dot(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-Lie structures on 3-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string file, src, dst, witness, psi_arg, phi_arg, claims, dot, export_dir;
  std::vector<std::string> der1_ts, sets;
  bool der2_flag = false, homlie_flag = false, deformation_flag = false;
  bool rho_flag = false, varpi_flag = false, classify_flag = false;
  int search = -1, hasse_search = 2;
  std::optional<int> family;
  int hasse_family = 0;

  auto* check = app.add_subcommand("check", "hom-Jacobi, multiplicativity and nilpotency report");
  check->add_option("FILE", file)->required();

  auto* spaces = app.add_subcommand("spaces", "derivation and deformation spaces");
  spaces->add_option("FILE", file)->required();
  spaces->add_option("--der1", der1_ts, "t for der1 (repeatable)");
  spaces->add_flag("--der2", der2_flag);
  spaces->add_flag("--homlie-space", homlie_flag);
  spaces->add_flag("--deformation", deformation_flag);

  auto* classify = app.add_subcommand("classify-lie", "isomorphism class of the underlying Lie algebra");
  classify->add_option("FILE", file)->required();

  auto* ident = app.add_subcommand("identify", "catalog match with a conjugating matrix");
  ident->add_option("FILE", file)->required();

  auto* transform = app.add_subcommand("transform", "apply psi, phi, rho or varpi");
  transform->add_option("FILE", file)->required();
  transform->add_option("--psi", psi_arg, "A,B");
  transform->add_option("--phi", phi_arg, "B");
  transform->add_flag("--rho", rho_flag);
  transform->add_flag("--varpi", varpi_flag);
  transform->add_flag("--classify", classify_flag);

  auto* tangent = app.add_subcommand("tangent", "orbit tangent and variety tangent dimensions");
  tangent->add_option("FILE", file)->required();

  auto* degenerate = app.add_subcommand("degenerate", "decide whether SRC degenerates to DST");
  degenerate->add_option("SRC", src)->required();
  degenerate->add_option("DST", dst)->required();
  degenerate->add_option("--witness", witness, "curve file");
  degenerate->add_option("--search", search, "diagonal witness search exponent bound");

  auto* cat = app.add_subcommand("catalog", "list or export catalog entries");
  cat->add_option("--family", family);
  cat->add_option("--set", sets, "NAME=SCALAR (repeatable)");
  cat->add_option("--export", export_dir);

  auto* hasse = app.add_subcommand("hasse", "verify a family degeneration diagram");
  hasse->add_option("--family", hasse_family)->required();
  hasse->add_option("--claims", claims);
  hasse->add_option("--dot", dot);
  hasse->add_option("--search", hasse_search, "diagonal witness search exponent bound (-1 disables)");
  hasse->add_option("--set", sets, "NAME=SCALAR (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*spaces) return cmd_spaces(file, der1_ts, der2_flag, homlie_flag, deformation_flag);
    if (*classify) return cmd_classify_lie(file);
    if (*ident) return cmd_identify(file);
    if (*transform) return cmd_transform(file, psi_arg, phi_arg, rho_flag, varpi_flag, classify_flag);
    if (*tangent) return cmd_tangent(file);
    if (*degenerate) return cmd_degenerate(src, dst, witness, search);
    if (*cat) return cmd_catalog(family, sets, export_dir);
    if (*hasse) return cmd_hasse(hasse_family, claims, dot, hasse_search, sets);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ClaimedEdgeBlocked || e.code() == ErrorCode::NonEdgeUnobstructed) return kRefuted;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
