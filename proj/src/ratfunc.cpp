#include "homlie/ratfunc.hpp"

#include <utility>

#include "homlie/error.hpp"

namespace homlie {

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  std::vector<Scalar> v = c_;
  for (auto& c : v) c *= inv;
  return Poly(std::move(v));
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<Scalar> v(std::max(x.c_.size(), y.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) v[k] = x.coeff(static_cast<int>(k)) + y.coeff(static_cast<int>(k));
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Scalar> v = c_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<Scalar> v(x.c_.size() + y.c_.size() - 1);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& x, const Poly& y, Poly& q, Poly& r) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = x.c_;
  int dy = y.degree();
  std::vector<Scalar> quot(std::max(0, x.degree() - dy + 1));
  Scalar inv = y.lead().inverse();
  for (int k = x.degree(); k >= dy; --k) {
    Scalar f = rem[k] * inv;
    quot[k - dy] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dy; ++j) rem[k - dy + j] -= f * y.c_[j];
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::gcd(Poly x, Poly y) {
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[k].to_string();
    bool compound = c.find(' ') != std::string::npos;
    if (k == 0) {
      out += compound ? "(" + c + ")" : c;
    } else {
      out += (compound ? "(" + c + ")" : c) + " s^" + std::to_string(k);
    }
  }
  return out;
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  Poly n = num, d = den;
  if (g.degree() > 0) {
    Poly r;
    Poly::divmod(num, g, n, r);
    Poly::divmod(den, g, d, r);
  }
  Scalar inv = d.lead().inverse();
  num_ = n * Poly(inv);
  den_ = d * Poly(inv);
}

Limit RatFunc::limit_at_infinity() const {
  if (num_.is_zero()) return {true, Scalar()};
  if (num_.degree() > den_.degree()) return {false, Scalar()};
  if (num_.degree() < den_.degree()) return {true, Scalar()};
  return {true, num_.lead() / den_.lead()};
}

Scalar RatFunc::evaluate(const Scalar& s0) const {
  Scalar d = den_.eval(s0);
  if (d.is_zero()) throw Error(ErrorCode::PoleAtSample, "denominator vanishes at s = " + s0.to_string());
  return num_.eval(s0) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -num_;
  return out;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero() || y.is_zero()) return RatFunc();
  if (x.den_.degree() == 0 && y.den_.degree() == 0) {
    RatFunc out;
    out.num_ = x.num_ * y.num_;
    return out;
  }
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace homlie
