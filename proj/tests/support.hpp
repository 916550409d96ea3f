#pragma once

#include <random>
#include <string>

#include "homlie/classify.hpp"

namespace homlie::test {

// Invertible 3x3 matrix with entries in [-range, range].
inline Mat random_invertible(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  while (true) {
    Mat g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = Scalar(d(rng));
    if (!determinant(g).is_zero()) return g;
  }
}

// "L6^13" -> catalog entry.
inline CatalogEntry entry(const std::string& label, const Bindings& b = {}) {
  size_t caret = label.find('^');
  return catalog_entry(std::stoi(label.substr(1, caret - 1)), std::stoi(label.substr(caret + 1)), b);
}

inline std::string class_name(const OutputClass& c) {
  switch (c.kind) {
    case OutputClass::Kind::NoLie: return "NoLie";
    case OutputClass::Kind::NotSkew: return "NotSkew";
    case OutputClass::Kind::Lie: break;
  }
  return lie_family_name(c.lie.family);
}

inline Scalar q(long long n, long long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace homlie::test
