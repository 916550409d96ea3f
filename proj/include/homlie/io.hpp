#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlie/classify.hpp"
#include "homlie/degeneration.hpp"

namespace homlie {

// Line-based algebra file:
//   algebra NAME
//   adjoin sqrt(RAT)
//   param NAME = SCALAR
//   bracket eI eJ = SCALAR eK [+ SCALAR eK ...]     (I < J)
//   twist eI = SCALAR eK [+ ...]                    (A e_I)
//   end
// `#` starts a comment. Scalars are expressions over rationals, i, rt (the
// adjoined root), sqrt(RAT), declared params, + - * / ^ and parentheses;
// juxtaposition multiplies.
struct AlgebraFile {
  std::string name;
  std::optional<Rational> radicand;
  Bindings params;
  HomLieStructure structure;
};

AlgebraFile parse_algebra(const std::string& text);
std::string export_algebra(const std::string& name, const HomLieStructure& s, const Bindings& params = {});

// Curve file: `curve NAME`, optional adjoin/param lines, `entry I J = EXPR`
// (1-based, EXPR a rational function of s), `end`.
WitnessCurve parse_curve(const std::string& text);
std::string export_curve(const std::string& name, const WitnessCurve& w);

// Claims file: `edge FROM TO [witness PATH]`, one per line.
struct ClaimLine {
  std::string from, to;
  std::optional<std::string> witness_path;
};
std::vector<ClaimLine> parse_claims(const std::string& text);

Scalar parse_scalar(const std::string& text, const Bindings& params = {});

std::string read_file(const std::string& path);  // throws InvalidArgument
void write_file(const std::string& path, const std::string& text);

}  // namespace homlie
