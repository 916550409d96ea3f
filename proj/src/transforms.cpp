#include "homlie/transforms.hpp"

#include <stdexcept>

namespace homlie {

Bilinear realization(const HomLieStructure& s, const std::vector<RealizationTerm>& terms) {
  for (const auto& t : terms)
    if (t.i < 0 || t.j < 0 || t.k < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in realization term");
  Bilinear out;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    Mat ai = power(s.twist, t.i), aj = power(s.twist, t.j), ak = power(s.twist, t.k);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Vec v = ai * s.mu.eval(aj.column(a), ak.column(b));
        for (int c = 0; c < 3; ++c)
          if (!v[c].is_zero()) out.at(a, b, c) += t.coeff * v[c];
      }
  }
  return out;
}

namespace {

SkewBilinear skew_or_throw(const Bilinear& b) {
  if (!b.is_skew()) throw std::logic_error("symmetrized transform is not skew");
  return SkewBilinear::from_bilinear(b);
}

}  // namespace

SkewBilinear psi(const HomLieStructure& s, const Scalar& alpha, const Scalar& beta) {
  return skew_or_throw(realization(s, {{0, 0, 0, Scalar(1)}, {1, 0, 0, alpha}, {0, 1, 0, beta}, {0, 0, 1, beta}}));
}

SkewBilinear phi(const HomLieStructure& s, const Scalar& beta) {
  return skew_or_throw(realization(s, {{1, 0, 0, Scalar(1)}, {0, 1, 0, beta}, {0, 0, 1, beta}}));
}

SkewBilinear rho(const HomLieStructure& s) {
  return skew_or_throw(realization(s, {{0, 1, 0, Scalar(1)}, {0, 0, 1, Scalar(1)}}));
}

std::pair<Bilinear, Mat> varpi(const HomLieStructure& s) {
  return {realization(s, {{0, 1, 0, Scalar(1)}}), s.twist};
}

OutputClass classify_output(const SkewBilinear& mu) {
  OutputClass out;
  if (!satisfies_jacobi(mu)) {
    out.kind = OutputClass::Kind::NoLie;
    return out;
  }
  out.lie = classify_lie(mu);
  return out;
}

OutputClass classify_output(const Bilinear& b) {
  if (!b.is_skew()) {
    OutputClass out;
    out.kind = OutputClass::Kind::NotSkew;
    return out;
  }
  return classify_output(SkewBilinear::from_bilinear(b));
}

}  // namespace homlie
