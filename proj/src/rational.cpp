#include "homlie/rational.hpp"

#include <limits>

#include "homlie/error.hpp"

namespace homlie {

namespace {

using i128 = __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 x) { return x <= kMax && x >= -kMax; }

mpz_class mpz_from(int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(long long n) : n_(n), d_(1) {
  if (n == std::numeric_limits<long long>::min()) *this = from_mpq(mpq_class(mpz_from(n)));
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    Rational r;
    r.n_ = static_cast<int64_t>(n);
    r.d_ = static_cast<int64_t>(d);
    return r;
  }
  // Slow path: rebuild through GMP from the two halves.
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  return from_mpq(q);
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = mpz_get_si(q.get_num_mpz_t());
    long d = mpz_get_si(q.get_den_mpz_t());
    if (n != std::numeric_limits<long>::min()) {
      r.n_ = n;
      r.d_ = d;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from(n_), mpz_from(d_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(n_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(d_); }

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r = *this;
  r.n_ = -n_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(d_, n_);
}

Rational operator+(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.n_ == 0) return y;
    if (y.n_ == 0) return x;
    if (x.d_ == 1 && y.d_ == 1) return Rational::from_wide(static_cast<i128>(x.n_) + y.n_, 1);
    return Rational::from_wide(static_cast<i128>(x.n_) * y.d_ + static_cast<i128>(y.n_) * x.d_,
                               static_cast<i128>(x.d_) * y.d_);
  }
  return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.n_ == 0 || y.n_ == 0) return Rational();
    if (x.d_ == 1 && y.d_ == 1) return Rational::from_wide(static_cast<i128>(x.n_) * y.n_, 1);
    return Rational::from_wide(static_cast<i128>(x.n_) * y.n_, static_cast<i128>(x.d_) * y.d_);
  }
  if (x.is_zero() || y.is_zero()) return Rational();
  return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  if (!x.big_ && !y.big_) {
    return Rational::from_wide(static_cast<i128>(x.n_) * y.d_, static_cast<i128>(x.d_) * y.n_);
  }
  return Rational::from_mpq(x.to_mpq() / y.to_mpq());
}

bool operator==(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) return x.n_ == y.n_ && x.d_ == y.d_;
  if (x.big_ && y.big_) return *x.big_ == *y.big_;
  return false;  // canonical forms: a value is big only when it does not fit
}

int compare(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    i128 l = static_cast<i128>(x.n_) * y.d_;
    i128 r = static_cast<i128>(y.n_) * x.d_;
    return (l > r) - (l < r);
  }
  return cmp(x.to_mpq(), y.to_mpq());
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  mpz_class n = q.numerator(), d = q.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

void squarefree_decompose(const Rational& q, Rational& s, Rational& m) {
  if (q.is_zero()) {
    s = Rational(0);
    m = Rational(0);
    return;
  }
  // p/d = (1/d)^2 * p*d
  mpz_class num = q.numerator() * q.denominator();
  mpz_class scale_den = q.denominator();
  int sgn_v = sgn(num);
  if (sgn_v < 0) num = -num;
  mpz_class square_part = 1;
  constexpr unsigned long kTrialBound = 100000;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    mpz_class pp = mpz_class(p) * p;
    if (pp > num) break;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p * p)) {
      num /= pp;
      square_part *= p;
    }
  }
  if (num > 1 && mpz_perfect_square_p(num.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), num.get_mpz_t());
    square_part *= r;
    num = 1;
  }
  s = Rational(mpq_class(square_part, scale_den));
  m = Rational(mpq_class(sgn_v < 0 ? mpz_class(-num) : num));
}

}  // namespace homlie
