#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace homlie {

// Exact rational number. Values that fit in int64 numerator/denominator stay
// on a machine-word path; anything larger is carried by a shared GMP value.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y);
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend int compare(const Rational& x, const Rational& y);
  friend bool operator<(const Rational& x, const Rational& y) { return compare(x, y) < 0; }
  friend bool operator>(const Rational& x, const Rational& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Rational& x, const Rational& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Rational& x, const Rational& y) { return compare(x, y) >= 0; }

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  int64_t n_ = 0;
  int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// Exact square root of a nonnegative rational when it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& root);

// Writes q = s^2 * m with m a squarefree integer (sign kept in m).
void squarefree_decompose(const Rational& q, Rational& s, Rational& m);

}  // namespace homlie
