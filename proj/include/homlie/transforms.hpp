#pragma once

#include <utility>
#include <vector>

#include "homlie/classify.hpp"

namespace homlie {

// One term coeff * A^i mu(A^j -, A^k -).
struct RealizationTerm {
  int i = 0, j = 0, k = 0;
  Scalar coeff;
};

Bilinear realization(const HomLieStructure& s, const std::vector<RealizationTerm>& terms);

// mu + alpha A mu + beta (mu(A-,-) + mu(-,A-)).
SkewBilinear psi(const HomLieStructure& s, const Scalar& alpha, const Scalar& beta);
// A mu + beta (mu(A-,-) + mu(-,A-)).
SkewBilinear phi(const HomLieStructure& s, const Scalar& beta);
// mu(A-,-) + mu(-,A-).
SkewBilinear rho(const HomLieStructure& s);
// (mu(A-,-), A); the bilinear part is generally not skew.
std::pair<Bilinear, Mat> varpi(const HomLieStructure& s);

OutputClass classify_output(const Bilinear& b);
OutputClass classify_output(const SkewBilinear& mu);

}  // namespace homlie
