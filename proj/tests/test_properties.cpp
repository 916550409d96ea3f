#include <gtest/gtest.h>

#include "homlie/spaces.hpp"
#include "homlie/transforms.hpp"
#include "support.hpp"

using namespace homlie;
using homlie::test::q;

// Smaller randomized versions of the acceptance properties, one family per run.
class FamilyProperties : public ::testing::TestWithParam<int> {};

TEST_P(FamilyProperties, InvariantsAreConjugationInvariant) {
  std::mt19937 rng(1000 + GetParam());
  for (const auto& e : catalog(GetParam())) {
    HomLieStructure t = act(test::random_invertible(rng), e.structure);
    EXPECT_EQ(derivation_dim(t), derivation_dim(e.structure)) << e.label();
    EXPECT_EQ(der2(t), der2(e.structure)) << e.label();
    EXPECT_EQ(der1(t, q(2)), der1(e.structure, q(2))) << e.label();
    EXPECT_EQ(rank_profile(t.twist), rank_profile(e.structure.twist)) << e.label();
    EXPECT_EQ(is_multiplicative(t), is_multiplicative(e.structure)) << e.label();
  }
}

TEST_P(FamilyProperties, TransformsAreEquivariant) {
  std::mt19937 rng(2000 + GetParam());
  for (const auto& e : catalog(GetParam())) {
    Mat g = test::random_invertible(rng);
    HomLieStructure t = act(g, e.structure);
    EXPECT_EQ(psi(t, q(2), q(-1, 3)), act(g, psi(e.structure, q(2), q(-1, 3)))) << e.label();
    EXPECT_EQ(rho(t), act(g, rho(e.structure))) << e.label();
    auto [b, a] = varpi(t);
    auto [b0, a0] = varpi(e.structure);
    EXPECT_EQ(b, act(g, b0)) << e.label();
    EXPECT_EQ(a, act_on_matrix(g, a0)) << e.label();
  }
}

TEST_P(FamilyProperties, OrbitTangentPlusDerivationsFillGl3) {
  for (const auto& e : catalog(GetParam()))
    EXPECT_EQ(orbit_tangent(e.structure).dim() + derivation_dim(e.structure), 9) << e.label();
}

INSTANTIATE_TEST_SUITE_P(Catalog, FamilyProperties, ::testing::Range(0, 8));
