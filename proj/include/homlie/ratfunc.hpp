#pragma once

#include <string>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

// Dense univariate polynomial in s, coefficients stored low degree first and
// trimmed so the last coefficient is nonzero (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly monomial(const Scalar& c, int degree);
  static Poly s() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Scalar(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar eval(const Scalar& x) const;
  Poly monic() const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly operator-() const;
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  // Euclidean division: x = q*y + r with deg r < deg y.
  static void divmod(const Poly& x, const Poly& y, Poly& q, Poly& r);
  static Poly gcd(Poly x, Poly y);  // monic, gcd(0,0) = 0

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct Limit {
  bool finite = false;
  Scalar value;
};

// Reduced rational function num/den with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Scalar(1)) {}
  RatFunc(long long c) : num_(Scalar(c)), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(Scalar(1)) {}        // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  Limit limit_at_infinity() const;
  Scalar evaluate(const Scalar& s0) const;  // throws PoleAtSample

  RatFunc inverse() const;
  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
  RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
  RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  std::string to_string() const;

 private:
  Poly num_, den_;
};

}  // namespace homlie
