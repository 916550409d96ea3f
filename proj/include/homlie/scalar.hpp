#pragma once

#include <optional>
#include <string>

#include "homlie/rational.hpp"

namespace homlie {

// Element (a + b i) + (c + d i) sqrt(r) of Q(i)(sqrt r). The radicand r is a
// squarefree integer >= 2 and is dropped whenever c = d = 0, so pure Gaussian
// rationals combine freely with any extension.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re) : a_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& re, const Rational& im) : a_(re), b_(im) {}

  static Scalar make(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                     const Rational& radicand);
  static Scalar imag_unit() { return Scalar(Rational(0), Rational(1)); }
  // sqrt(q) for a rational q, normalized (rational, i * rational, or a radical).
  static Scalar sqrt_of(const Rational& q);

  const Rational& re() const { return a_; }
  const Rational& im() const { return b_; }
  const Rational& rad_re() const { return c_; }
  const Rational& rad_im() const { return d_; }
  const Rational& radicand() const { return r_; }
  bool has_radicand() const { return !r_.is_zero(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_gaussian() const { return c_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return is_gaussian() && b_.is_zero(); }

  Scalar operator-() const;
  Scalar conj() const;          // complex conjugation, sqrt(r) taken real positive
  Scalar radical_conj() const;  // sqrt(r) -> -sqrt(r)
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Human-readable form, e.g. "1/2 - 3 i + 1 sqrt(2)".
  std::string to_string() const;
  // Literal form of the file grammar, with `rt` standing for sqrt(radicand).
  std::string to_literal() const;

  // Real-embedding helpers: value must be real (b = d = 0); returns -1/0/1.
  int real_sign() const;

 private:
  std::string render(const std::string& root_token) const;

  Rational a_, b_, c_, d_, r_;
};

// Sign of p + q sqrt(r) with sqrt(r) > 0.
int sign_of_real_radical(const Rational& p, const Rational& q, const Rational& r);

// Radicand shared by two scalars; throws IncompatibleRadicands on a clash.
Rational common_radicand(const Scalar& x, const Scalar& y);

// Square root inside Q(i)(sqrt r) where r is the radicand of x (or a newly
// introduced radicand when x is Gaussian). Empty when no such root exists.
std::optional<Scalar> try_sqrt(const Scalar& x);

}  // namespace homlie
