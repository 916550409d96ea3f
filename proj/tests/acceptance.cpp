// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [PATH_TO_HOMLIE_CLI]

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "homlie/degeneration.hpp"
#include "homlie/io.hpp"
#include "homlie/spaces.hpp"
#include "homlie/transforms.hpp"
#include "support.hpp"

using namespace homlie;
using homlie::test::class_name;
using homlie::test::entry;
using homlie::test::q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string cli_path;

std::string lbl(int f, int i) { return "L" + std::to_string(f) + "^" + std::to_string(i); }

const Scalar kZ = q(2);

// ---------------------------------------------------------------- 1
Outcome catalog_validity() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const int sizes[8] = {3, 7, 7, 4, 7, 10, 14, 3};
  for (int f = 0; f < 8; ++f) o.expect(family_size(f) == sizes[f], "family size " + std::to_string(f));
  std::vector<CatalogEntry> all = catalog();
  o.expect(all.size() == 55, "catalog size " + std::to_string(all.size()));
  for (const auto& e : all) {
    bool jac = true;
    for (const Scalar& c : hom_jacobiator(e.structure)) jac = jac && c.is_zero();
    o.expect(jac, e.label() + " hom-Jacobi");
    o.expect(nilpotency_degree(e.structure.twist).has_value(), e.label() + " twist nilpotent");
    o.expect(classify_lie(e.structure.mu) == e.lie, e.label() + " underlying class");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << all.size() << " entries checked in " << secs << " s";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 2
Outcome table1() {
  const std::vector<std::vector<int>> der = {
      {9, 5, 3},
      {6, 4, 3, 2, 0, 2, 1},
      {4, 3, 2, 3, 2, 2, 1},
      {6, 4, 3, 2},
      {4, 3, 2, 2, 2, 1, 1},
      {4, 3, 3, 2, 2, 2, 2, 1, 1, 1},
      {4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0},
      {3, 1, 0},
  };
  Outcome o;
  int n = 0;
  for (const auto& e : catalog()) {
    int got = derivation_dim(e.structure);
    int want = der[e.family][e.index];
    o.expect(got == want, e.label() + ": " + std::to_string(got) + " != " + std::to_string(want));
    ++n;
  }
  o.detail = std::to_string(n) + " cells";
  return o;
}

// ---------------------------------------------------------------- 3
Outcome table_der1() {
  Outcome o;
  const Scalar one = q(1), z = kZ, zi = q(1, 2), seven = q(7);
  const std::vector<Scalar> ts = {one, z, zi, seven};
  auto expected = [&](int i, const Scalar& t) {
    switch (i) {
      case 5: return t == z ? 4 : 3;
      case 4: return t == zi ? 4 : 3;
      case 2: return t == one || t == z ? 4 : 3;
      case 1: return t == one || t == zi ? 4 : 3;
      default: return 3;
    }
  };
  int n = 0;
  for (int i = 1; i <= 5; ++i) {
    HomLieStructure s = catalog_entry(5, i).structure;
    for (const Scalar& t : ts) {
      int got = der1(s, t);
      o.expect(got == expected(i, t), lbl(5, i) + " t=" + t.to_string() + ": " + std::to_string(got));
      ++n;
    }
  }
  o.detail = std::to_string(n) + " cells";
  return o;
}

// ---------------------------------------------------------------- 4
Outcome clover_invariants() {
  Outcome o;
  auto s = [](const std::string& l) { return entry(l).structure; };
  o.expect(der2(s("L6^4")) == 4, "der2(L6^4)");
  o.expect(der2(s("L6^2")) == 3, "der2(L6^2)");
  auto tk = [&](const std::string& l) {
    auto [lam, b] = varpi(s(l));
    return t_kernel(lam, b);
  };
  o.expect(tk("L4^3") == 4, "t_kernel(varpi(L4^3))");
  o.expect(tk("L1^2") == 3, "t_kernel(varpi(L1^2))");
  // clover-1: L6^3 multiplicative, L6^5 not
  o.expect(is_multiplicative(s("L6^3")), "L6^3 multiplicative");
  o.expect(!is_multiplicative(s("L6^5")), "L6^5 not multiplicative");
  // clover-2: [A5 -, -] = 0 on L6^5, not on L6^1
  o.expect(is_left_killed(s("L6^5")), "L6^5 left-killed");
  o.expect(!is_left_killed(s("L6^1")), "L6^1 not left-killed");
  // clover-4: [A2 -, -] = 0 on L6^2, not on L6^1
  o.expect(is_left_killed(s("L6^2")), "L6^2 left-killed");
  o.detail = "der2, t_kernel and flag checks";
  return o;
}

// ---------------------------------------------------------------- 5
Outcome table_rho() {
  std::map<std::string, std::string> want;
  auto put = [&](const std::string& cls, std::initializer_list<const char*> labels) {
    for (const char* l : labels) want[l] = cls;
  };
  put("a3", {"L0^0", "L0^1", "L0^2", "L1^0", "L1^1", "L1^2", "L1^5", "L2^0", "L2^1", "L2^2", "L3^0", "L3^1", "L4^0",
             "L4^1", "L4^2", "L5^0", "L5^1", "L5^2", "L5^3", "L6^0", "L6^1", "L6^2", "L6^3", "L6^5", "L6^7",
             "L6^10", "L6^11", "L7^0"});
  put("r2xC", {"L1^3", "L1^4", "L1^6", "L2^4", "L2^6", "L4^4", "L4^6", "L5^6", "L5^9", "L6^6", "L6^9", "L6^13"});
  put("n3", {"L2^3", "L2^5", "L3^2", "L3^3", "L4^3", "L4^5", "L5^4", "L5^5", "L5^7", "L5^8", "L6^4", "L6^8", "L6^12",
             "L7^1"});
  put("r3,-1", {"L7^2"});
  Outcome o;
  o.expect(want.size() == 55, "fixture size");
  for (const auto& e : catalog()) {
    std::string got = class_name(classify_output(rho(e.structure)));
    o.expect(got == want[e.label()], e.label() + ": " + got);
  }
  o.detail = std::to_string(want.size()) + " rows";
  return o;
}

// ---------------------------------------------------------------- 6
Outcome table_phi() {
  using Rule = std::function<std::string(const Scalar&)>;
  std::map<std::string, Rule> rules;
  auto put = [&](Rule r, std::initializer_list<const char*> labels) {
    for (const char* l : labels) rules[l] = r;
  };
  auto constant = [](const char* c) { return Rule([c](const Scalar&) { return std::string(c); }); };
  auto split4 = [](const char* at1) {
    return Rule([at1](const Scalar& b) -> std::string {
      if (b == q(1)) return at1;
      if (b.is_zero()) return "r2xC";
      if (b == q(-1)) return "r3,-1";
      return "r3,z";
    });
  };
  auto at = [](Scalar special, const char* hit, const char* miss) {
    return Rule([=](const Scalar& b) { return std::string(b == special ? hit : miss); });
  };
  put(constant("a3"), {"L0^0", "L0^1", "L0^2", "L1^0", "L1^1", "L1^2", "L1^5", "L2^0", "L2^1", "L2^2", "L3^0",
                       "L3^1", "L4^0", "L4^1", "L4^2", "L5^0", "L5^1", "L5^2", "L5^3", "L6^0", "L6^1", "L6^2",
                       "L6^3", "L7^0"});
  put(split4("r3,1"), {"L1^3", "L1^4", "L1^6", "L4^4", "L4^6"});
  put(at(q(-1), "a3", "n3"), {"L2^3", "L2^5", "L3^2", "L3^3"});
  put(split4("r3"), {"L2^4", "L2^6", "L5^6", "L5^9", "L6^6", "L6^9"});
  put(at(q(1), "a3", "n3"), {"L4^3", "L4^5", "L7^1"});
  put(at(-kZ, "a3", "n3"), {"L5^4", "L5^8"});
  put(at(-kZ.inverse(), "a3", "n3"), {"L5^5", "L5^7"});
  put(at(q(0), "a3", "n3"), {"L6^4", "L6^8"});
  put(constant("n3"), {"L6^5", "L6^7"});
  put(constant("r2xC"), {"L6^10", "L6^11"});
  put(at(q(0), "r2xC", "NoLie"), {"L6^12", "L6^13"});
  put(at(q(1), "a3", "r3,-1"), {"L7^2"});
  Outcome o;
  o.expect(rules.size() == 55, "fixture size");
  const std::vector<Scalar> betas = {q(-1), q(0), q(1), q(2), -kZ, -kZ.inverse()};
  int n = 0;
  for (const auto& e : catalog()) {
    for (const Scalar& b : betas) {
      std::string got = class_name(classify_output(phi(e.structure, b)));
      std::string want = rules[e.label()](b);
      o.expect(got == want, e.label() + " beta=" + b.to_string() + ": " + got + " != " + want);
      ++n;
    }
  }
  o.detail = std::to_string(n) + " cells at beta in {-1, 0, 1, 2, -z, -1/z}";
  return o;
}

// ---------------------------------------------------------------- 7
struct PsiSample {
  std::string label;
  Bindings bindings;
  Scalar alpha, beta;
  std::string want;
};

Outcome table_psi() {
  std::vector<PsiSample> samples;
  const std::vector<std::pair<Scalar, Scalar>> generic = {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
  auto any_row = [&](const char* cls, std::initializer_list<const char*> labels) {
    for (const char* l : labels)
      for (const auto& [a, b] : generic) samples.push_back({l, {}, a, b, cls});
  };
  any_row("n3", {"L1^0", "L1^1", "L1^2", "L1^5"});
  any_row("r3", {"L2^0", "L2^1", "L2^2"});
  any_row("r3,1", {"L3^0", "L3^1"});
  any_row("r3,-1", {"L4^0", "L4^1", "L4^2", "L4^3", "L4^5"});
  any_row("r3,z", {"L5^0", "L5^1", "L5^2", "L5^3", "L5^4", "L5^5", "L5^7", "L5^8"});
  any_row("r2xC", {"L6^0", "L6^1", "L6^2", "L6^3", "L6^4", "L6^5", "L6^7", "L6^8", "L6^10", "L6^11"});
  any_row("so3", {"L7^0", "L7^1", "L7^2"});
  const size_t n_any = samples.size();

  auto row = [&](std::initializer_list<const char*> labels, const Bindings& b, Scalar a, Scalar be, const char* cls) {
    for (const char* l : labels) samples.push_back({l, b, a, be, cls});
  };
  const Bindings lam1 = {{"lambda", q(1)}};
  const Scalar r2 = Scalar::sqrt_of(2), i = Scalar::imag_unit();

  row({"L1^3", "L1^4", "L1^6"}, {}, q(0), q(0), "n3");
  row({"L1^3", "L1^4", "L1^6"}, {}, q(1), q(1), "r3");
  row({"L1^3", "L1^4", "L1^6"}, {}, q(1), q(0), "r2xC");
  row({"L1^3", "L1^4", "L1^6"}, {}, q(1), q(-1), "r3,-1");
  row({"L1^3", "L1^4", "L1^6"}, {}, q(1), q(2), "r3,z");

  row({"L2^3", "L2^5"}, {}, q(0), q(0), "r3");
  row({"L2^3", "L2^5"}, {}, q(0), q(-1, 3), "r3,1");

  // L2^4, L2^6 at lambda = 1: n3 locus, then s = 2, 1/2, 1 and (s1, s2) = (2, 1)
  row({"L2^4", "L2^6"}, lam1, q(-1) - r2, q(-1) + r2, "n3");
  row({"L2^4", "L2^6"}, lam1, q(-3, 2), q(1, 2), "r3");
  row({"L2^4", "L2^6"}, lam1, q(-1), q(1), "r2xC");
  row({"L2^4", "L2^6"}, lam1, q(-5, 2), q(1, 2), "r3,-1");
  row({"L2^4", "L2^6"}, lam1, -(q(2) + q(3) * r2) / q(4), (q(-2) + q(3) * r2) / q(4), "r3,z");

  row({"L3^2", "L3^3"}, {}, q(1), q(-1), "r3,1");
  row({"L3^2", "L3^3"}, {}, q(1), q(1), "r3");

  // L4^4, L4^6 at lambda = 1: s = 1, 3/10, 1/2 and (s1, s2) = (2, 1)
  row({"L4^4", "L4^6"}, lam1, i / q(2), -i / q(2), "n3");
  row({"L4^4", "L4^6"}, lam1, (q(1) - i) / q(2), (q(1) + i) / q(2), "r3");
  row({"L4^4", "L4^6"}, lam1, q(1, 6), q(3, 2), "r2xC");
  row({"L4^4", "L4^6"}, lam1, q(-1, 2), q(1, 2), "r3,-1");
  row({"L4^4", "L4^6"}, lam1, (q(2) - i * r2) / q(4), (q(2) + i * r2) / q(4), "r3,z");

  // L5^6, L5^9 at z = 2, lambda = 1: s = 1 and (s1, s2) = (2, 1)
  const Scalar r17 = Scalar::sqrt_of(17), r11 = Scalar::sqrt_of(11), r3 = Scalar::sqrt_of(3),
               r13 = Scalar::sqrt_of(13), r46 = Scalar::sqrt_of(46);
  row({"L5^6", "L5^9"}, lam1, (q(3) - r17) / q(2), (q(3) + r17) / q(2), "n3");
  row({"L5^6", "L5^9"}, lam1, (q(2) + r11) / q(2), (q(2) - r11) / q(2), "r3");
  row({"L5^6", "L5^9"}, lam1, q(1) + r3, q(1) - r3, "r2xC");
  row({"L5^6", "L5^9"}, lam1, (q(3) + r13) / q(2), (q(3) - r13) / q(2), "r3,-1");
  row({"L5^6", "L5^9"}, lam1, (q(4) + r46) / q(4), (q(4) - r46) / q(4), "r3,z");

  // L6^6, L6^9 at lambda = 1: s = 5, 2, 5 and (s1, s2) = (2, 1)
  const Scalar r5 = Scalar::sqrt_of(5);
  row({"L6^6", "L6^9"}, lam1, q(-1), q(0), "n3");
  row({"L6^6", "L6^9"}, lam1, q(0), q(-1), "n3");
  row({"L6^6", "L6^9"}, lam1, (q(-3) - r5) / q(10), (q(-3) + r5) / q(10), "r3");
  row({"L6^6", "L6^9"}, lam1, q(-1, 2), q(0), "r2xC");
  row({"L6^6", "L6^9"}, lam1, q(0), q(-1, 2), "r2xC");
  row({"L6^6", "L6^9"}, lam1, (q(-5) + r5) / q(10), (q(-5) - r5) / q(10), "r3,-1");
  row({"L6^6", "L6^9"}, lam1, i * r2 / q(4), -i * r2 / q(4), "r3,z");

  row({"L6^12"}, {}, q(1), q(0), "r2xC");
  row({"L6^12"}, {}, q(0), q(1), "r2xC");
  row({"L6^12"}, {}, q(1), q(1), "NoLie");

  row({"L6^13"}, {}, q(0), q(-1, 3), "n3");
  row({"L6^13"}, {}, q(0), q(1), "r2xC");
  row({"L6^13"}, {}, q(1), q(0), "r2xC");
  row({"L6^13"}, {}, q(1), q(1), "NoLie");

  Outcome o;
  for (size_t k = 0; k < samples.size(); ++k) {
    const PsiSample& p = samples[k];
    CatalogEntry e = entry(p.label, p.bindings);
    OutputClass got = classify_output(psi(e.structure, p.alpha, p.beta));
    std::string name = class_name(got);
    bool ok = name == p.want;
    // the "any" rows of family 5 keep the class r3,z with the same z
    if (ok && k < n_any && p.want == "r3,z") ok = got.lie == LieClass::r3z(kZ);
    o.expect(ok, p.label + " (" + p.alpha.to_string() + ", " + p.beta.to_string() + "): " + got.to_string() +
                     " != " + p.want);
  }
  o.detail = std::to_string(n_any) + " generic and " + std::to_string(samples.size() - n_any) + " special samples";
  return o;
}

// ---------------------------------------------------------------- 8
Outcome rank_criterion() {
  Outcome o;
  Mat zero(3, 3), j2 = unit_matrix(1, 2), j3 = unit_matrix(1, 2) + unit_matrix(2, 3);
  const std::vector<Mat> types = {zero, j2, j3};
  std::mt19937 rng(7);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      // conjugate the target so the comparison does not rely on normal forms
      Mat g = homlie::test::random_invertible(rng);
      Mat tb = conjugate(g, types[b]);
      bool got = nilpotent_orbit_leq(types[a], tb);
      bool brute = rank(tb) <= rank(types[a]) && rank(tb * tb) <= rank(types[a] * types[a]);
      o.expect(got == brute, "pair " + std::to_string(a) + "," + std::to_string(b) + " vs rank comparison");
      o.expect(got == (b <= a), "pair " + std::to_string(a) + "," + std::to_string(b) + " vs total order");
    }
  o.detail = "9 ordered pairs, order 0 < J2+0 < J3";
  return o;
}

// ---------------------------------------------------------------- 9
int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

Outcome witness_fixtures() {
  Outcome o;
  const Bindings lam1 = {{"lambda", q(1)}};
  HomLieStructure s13 = entry("L6^13", lam1).structure, s9 = entry("L6^9", lam1).structure;
  HomLieStructure l15 = entry("L1^5").structure;
  WitnessCurve w1 = exdeg_curve(q(1)), w2 = exdeg2_curve(q(1));
  o.expect(verify_witness(w1, s13, s9), "exdeg limit");
  o.expect(verify_witness(w2, s9, l15), "exdeg2 limit");
  // exdeg moves only the twist: g(s) fixes mu at every sample
  for (int s0 = 1; s0 <= 6; ++s0) {
    Mat g(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g(a, b) = w1.curve(a, b).evaluate(q(s0));
    o.expect(is_automorphism(g, s13.mu), "exdeg g(" + std::to_string(s0) + ") fixes mu");
  }
  if (cli_path.empty()) {
    o.expect(false, "no CLI path given");
  } else {
    std::filesystem::path dir = std::filesystem::absolute(cli_path).parent_path() / "acceptance_fixtures";
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& text) {
      write_file((dir / name).string(), text);
      return (dir / name).string();
    };
    std::string a13 = put("L6_13.alg", export_algebra("L6^13", s13, lam1));
    std::string a9 = put("L6_9.alg", export_algebra("L6^9", s9, lam1));
    std::string a15 = put("L1_5.alg", export_algebra("L1^5", l15));
    std::string c1 = put("exdeg.curve", export_curve("exdeg", w1));
    std::string c2 = put("exdeg2.curve", export_curve("exdeg2", w2));
    int e1 = run_cli("degenerate " + a13 + " " + a9 + " --witness " + c1);
    int e2 = run_cli("degenerate " + a9 + " " + a15 + " --witness " + c2);
    o.expect(e1 == 0, "exdeg CLI exit " + std::to_string(e1));
    o.expect(e2 == 0, "exdeg2 CLI exit " + std::to_string(e2));
  }
  o.detail = "exdeg and exdeg2 at lambda = 1";
  return o;
}

// ---------------------------------------------------------------- 10
// Family-6 degeneration matrix, rows and columns in the order 13, 12, ..., 0.
// Y: degenerates (at lambda = kappa for the parametric cells); D: Der(S) > Der(T);
// D+x: equal Der, distinguished by x; psi/phi/rho: blocked by that transform;
// c1..c4: the clover arguments.
const char* kTableExe = R"(
Y,D+rho,D+rho,psi,Y,psi,psi,Y,psi,psi,psi,psi,psi,psi
D+rho,Y,D+rho,Y,rho,Y,Y,rho,Y,Y,Y,Y,Y,Y
D+rho,D+rho,Y,Y,rho,rho,Y,rho,Y,rho,Y,Y,Y,Y
D,D,D,Y,D+rho,D+rho,D+phi,rho,Y,rho,Y,Y,Y,Y
D,D,D,D+rho,Y,D+rho,D+rho,Y,psi,psi,psi,psi,psi,psi
D,D,D,D+rho,D+rho,Y,D+rho,rho,rho,Y,Y,Y,Y,Y
D,D,D,D+phi,D+rho,D+rho,Y,rho,Y,rho,Y,Y,Y,Y
D,D,D,D,D,D,D,Y,D+rho,D+rho,D+rho,psi,psi,psi
D,D,D,D,D,D,D,D+rho,Y,D+rho,c1,Y,c2,Y
D,D,D,D,D,D,D,D+rho,D+rho,Y,D+rho,c3,Y,Y
D,D,D,D,D,D,D,D+rho,c1,D+rho,Y,Y,Y,Y
D,D,D,D,D,D,D,D,D,D,D,Y,c4,Y
D,D,D,D,D,D,D,D,D,D,D,c4,Y,Y
D,D,D,D,D,D,D,D,D,D,D,D,D,Y
)";

bool named_blocks(const std::string& name, const ObstructionReport& rep) {
  const ObstructionEntry& der = rep.entries.at(0);
  bool der_blocks = der.name == "der" && der.verdict == Verdict::Blocks;
  bool equal_der = der_blocks && der.detail.find("non-isomorphic") != std::string::npos;
  auto blocked = [&](const std::string& prefix) {
    for (const auto& n : rep.blocking())
      if (n.rfind(prefix, 0) == 0) return true;
    return false;
  };
  auto der_names = [&](const std::string& inv) { return equal_der && der.detail.find(inv) != std::string::npos; };
  if (name == "D") return der_blocks && !equal_der;
  if (name == "D+rho") return der_names("rho");
  if (name == "D+phi") return der_names("phi");
  if (name == "psi") return blocked("psi(");
  if (name == "phi") return blocked("phi(");
  if (name == "rho") return blocked("rho");
  if (name == "c1") return der_names("multiplicative");
  if (name == "c2") return blocked("closed:left_kill");
  if (name == "c3") return blocked("der2");
  if (name == "c4") return der_names("left_kill");
  return false;
}

Outcome family_hasse() {
  Outcome o;
  int verified = 0, claimed = 0;
  for (int f = 0; f <= 7; ++f) {
    std::map<EdgeKey, WitnessCurve> witnesses;
    if (f == 6) witnesses[{"L6^13", "L6^9"}] = exdeg_curve(q(3));
    try {
      HasseGraph g = build_hasse(family_nodes(f), family_claims(f), witnesses, 2);
      for (const auto& e : g.edges) {
        (e.status == EdgeStatus::WitnessVerified ? verified : claimed)++;
        if (f == 6 && e.from == "L6^13" && e.to == "L6^9")
          o.expect(e.status == EdgeStatus::WitnessVerified, "exdeg edge not WitnessVerified");
      }
    } catch (const Error& e) {
      o.expect(false, "family " + std::to_string(f) + ": " + e.what());
    }
  }

  // the cross-family fixture exdeg2 as a two-node diagram
  const Bindings lam1 = {{"lambda", q(1)}};
  std::vector<HasseNode> nodes = {{"L6^9", entry("L6^9", lam1).structure, lam1}, {"L1^5", entry("L1^5").structure, {}}};
  try {
    HasseGraph g = build_hasse(nodes, {{"L6^9", "L1^5"}}, {{{"L6^9", "L1^5"}, exdeg2_curve(q(1))}});
    o.expect(g.edges.size() == 1 && g.edges[0].status == EdgeStatus::WitnessVerified, "exdeg2 edge status");
  } catch (const Error& e) {
    o.expect(false, std::string("exdeg2 diagram: ") + e.what());
  }

  // family 6 matrix, cell by cell
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(kTableExe);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  std::set<EdgeKey> reach;
  for (int i = 0; i < 14; ++i) reach.insert({lbl(6, i), lbl(6, i)});
  for (const auto& e : family_claims(6)) reach.insert(e);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : std::set<EdgeKey>(reach))
      for (const auto& [c, d] : std::set<EdgeKey>(reach))
        if (b == c && reach.insert({a, d}).second) grew = true;
  }
  std::vector<CatalogEntry> fam = catalog(6);
  int cells = 0, relabelled = 0;
  for (int r = 0; r < 14; ++r)
    for (int c = 0; c < 14; ++c) {
      int i = 13 - r, j = 13 - c;
      const std::string& name = rows.at(r).at(c);
      ObstructionReport rep = obstructions(fam[i].structure, fam[j].structure);
      std::string cell = lbl(6, i) + " -> " + lbl(6, j) + " [" + name + "]";
      ++cells;
      if (name == "Y") {
        o.expect(reach.count({lbl(6, i), lbl(6, j)}) == 1, cell + " not in claimed order");
        o.expect(!rep.refuted(), cell + " blocked");
        continue;
      }
      o.expect(reach.count({lbl(6, i), lbl(6, j)}) == 0, cell + " in claimed order");
      o.expect(rep.refuted(), cell + " unobstructed");
      if (named_blocks(name, rep)) continue;
      // the L6^8 -> L6^5 cell is labelled rho, but phi(0) is what separates them
      if (i == 8 && j == 5 && name == "rho" && named_blocks("phi", rep)) {
        ++relabelled;
        continue;
      }
      o.expect(false, cell + " not blocked by the named invariant");
    }
  o.expect(relabelled == 1, "expected exactly one relabelled cell");
  std::ostringstream d;
  d << "families 0-7 built; " << verified << " edges WitnessVerified, " << claimed << " Claimed; " << cells
    << " family-6 cells (" << relabelled << " relabelled)";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 11
Outcome properties() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::vector<CatalogEntry> all = catalog();
  int fp_checks = 0, eq_checks = 0;
  const Scalar alpha = q(2), beta = q(-1, 3);
  for (const auto& e : all) {
    const HomLieStructure& s = e.structure;
    Fingerprint f = fingerprint(s);
    SkewBilinear ps = psi(s, alpha, beta), ph = phi(s, beta), rh = rho(s);
    auto [vl, vb] = varpi(s);
    bool fp_ok = true, eq_ok = true;
    for (int k = 0; k < 100; ++k) {
      Mat g = homlie::test::random_invertible(rng);
      HomLieStructure gs = act(g, s);
      fp_ok = fp_ok && fingerprint(gs) == f;
      eq_ok = eq_ok && psi(gs, alpha, beta) == act(g, ps) && phi(gs, beta) == act(g, ph) && rho(gs) == act(g, rh);
      auto [gl, gb] = varpi(gs);
      eq_ok = eq_ok && gl == act(g, vl) && gb == act_on_matrix(g, vb);
      fp_checks++;
      eq_checks++;
    }
    o.expect(fp_ok, "(a) fingerprint not invariant on " + e.label());
    o.expect(eq_ok, "(d) transforms not equivariant on " + e.label());

    o.expect(orbit_tangent(s).dim() + derivation_dim(s) == 9, "(b) orbit formula on " + e.label());
    bool inside = true;
    for (const Vec& v : orbit_tangent(s).basis)
      for (const Scalar& c : d_jacobi(s, skew_from_coords(v), matrix_from_coords(v, 9))) inside = inside && c.is_zero();
    o.expect(inside, "(c) orbit tangent outside T1 on " + e.label());
  }

  std::vector<LieClass> classes = {LieClass::of(LieFamily::A3),   LieClass::of(LieFamily::N3),
                                   LieClass::of(LieFamily::R3),   LieClass::of(LieFamily::R3_1),
                                   LieClass::of(LieFamily::R3_m1), LieClass::r3z(q(2)),
                                   LieClass::r3z(Scalar::imag_unit()), LieClass::of(LieFamily::R2xC),
                                   LieClass::of(LieFamily::SO3)};
  int cls_checks = 0;
  for (const LieClass& c : classes) {
    SkewBilinear rep = lie_representative(c);
    bool ok = true;
    for (int k = 0; k < 200; ++k, ++cls_checks) ok = ok && classify_lie(act(homlie::test::random_invertible(rng), rep)) == c;
    o.expect(ok, "(e) classify_lie unstable on " + c.to_string());
  }

  const Bindings lam1 = {{"lambda", q(1)}};
  struct Fix {
    WitnessCurve w;
    HomLieStructure s;
  };
  std::vector<Fix> fixtures = {{exdeg_curve(q(1)), entry("L6^13", lam1).structure},
                               {exdeg2_curve(q(1)), entry("L6^9", lam1).structure}};
  for (const auto& [w, s] : fixtures) {
    Mat g(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g(a, b) = w.curve(a, b).evaluate(q(10));
    HomLieStructure gen = act(g, s), lim = witness_limit(w, s);
    o.expect(derivation_dim(gen) <= derivation_dim(lim), "(f) Der along " + w.source + " -> " + w.target);
    o.expect(der2(gen) <= der2(lim), "(f) der2 along " + w.source + " -> " + w.target);
  }
  std::ostringstream d;
  d << fp_checks << " fingerprint and " << eq_checks << " equivariance samples, " << cls_checks
    << " classify samples, 2 witness curves";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 12
Outcome lie_order() {
  // nodes: a3, n3, r3, r3,1, r3,-1, r3,z(2), r3,z(3), r2xC, so3
  std::vector<LieClass> nodes = {LieClass::of(LieFamily::A3),    LieClass::of(LieFamily::N3),
                                 LieClass::of(LieFamily::R3),    LieClass::of(LieFamily::R3_1),
                                 LieClass::of(LieFamily::R3_m1), LieClass::r3z(q(2)),
                                 LieClass::r3z(q(3)),            LieClass::of(LieFamily::R2xC),
                                 LieClass::of(LieFamily::SO3)};
  // the itemized list of degenerations, by node index
  const std::vector<std::set<int>> items = {
      {0}, {1, 0}, {2, 3, 1, 0}, {3, 0}, {4, 1, 0}, {5, 1, 0}, {6, 1, 0}, {7, 1, 0}, {8, 4, 1, 0},
  };
  // the displayed diagram
  const std::set<std::pair<int, int>> diagram = {{8, 4}, {4, 1}, {1, 0}, {5, 1}, {6, 1},
                                                 {7, 1}, {2, 1}, {2, 3}, {3, 0}};
  Outcome o;
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) closure[a][a] = true;
  for (const auto& [a, b] : diagram) closure[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (closure[a][k] && closure[k][b]) closure[a][b] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool item = items[a].count(b) == 1;
      o.expect(closure[a][b] == item, "diagram closure vs items at " + std::to_string(a) + "," + std::to_string(b));
      bool got = lie_degenerates(nodes[a], nodes[b]);
      o.expect(got == item, nodes[a].to_string() + " -> " + nodes[b].to_string());
      if (a != b && got) {
        bool covered = diagram.count({a, b}) == 1;
        bool via = false;
        for (int k = 0; k < n; ++k)
          if (k != a && k != b && lie_degenerates(nodes[a], nodes[k]) && lie_degenerates(nodes[k], nodes[b])) via = true;
        o.expect(covered == !via, "reduction edge " + nodes[a].to_string() + " -> " + nodes[b].to_string());
      }
    }
  o.detail = std::to_string(n * n) + " ordered pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"catalog validity", catalog_validity},
      {"derivation dimensions", table1},
      {"der1 table", table_der1},
      {"clover invariants", clover_invariants},
      {"rho table", table_rho},
      {"phi table", table_phi},
      {"psi tables", table_psi},
      {"rank criterion", rank_criterion},
      {"witness fixtures", witness_fixtures},
      {"family Hasse diagrams", family_hasse},
      {"property suites", properties},
      {"Lie degeneration order", lie_order},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %-24s %s  %s (%.2f s)\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    for (size_t m = 0; m < o.failures.size() && m < 20; ++m) std::printf("    %s\n", o.failures[m].c_str());
    if (o.failures.size() > 20) std::printf("    ... %zu more\n", o.failures.size() - 20);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
