#include "homlie/scalar.hpp"

#include <utility>

#include "homlie/error.hpp"

namespace homlie {

namespace {

struct Gauss {
  Rational re, im;
};

Gauss gmul(const Gauss& x, const Gauss& y) {
  if (x.im.is_zero() && y.im.is_zero()) return {x.re * y.re, Rational()};
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Gauss gadd(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }
Gauss gsub(const Gauss& x, const Gauss& y) { return {x.re - y.re, x.im - y.im}; }
bool gzero(const Gauss& x) { return x.re.is_zero() && x.im.is_zero(); }

Gauss ginv(const Gauss& x) {
  if (x.im.is_zero()) return {x.re.inverse(), Rational()};
  Rational n = x.re * x.re + x.im * x.im;
  return {x.re / n, -x.im / n};
}

// Square root of a Gaussian rational inside Q(i), if it exists.
std::optional<Gauss> gauss_sqrt_exact(const Gauss& x) {
  Rational root;
  if (x.im.is_zero()) {
    if (x.re.sign() >= 0) {
      if (rational_sqrt(x.re, root)) return Gauss{root, Rational()};
      return std::nullopt;
    }
    if (rational_sqrt(-x.re, root)) return Gauss{Rational(), root};
    return std::nullopt;
  }
  Rational w;
  if (!rational_sqrt(x.re * x.re + x.im * x.im, w)) return std::nullopt;
  Rational p;
  if (!rational_sqrt((x.re + w) / Rational(2), p)) return std::nullopt;
  return Gauss{p, x.im / (Rational(2) * p)};
}

}  // namespace

Scalar Scalar::make(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                    const Rational& radicand) {
  Scalar out;
  out.a_ = a;
  out.b_ = b;
  if ((c.is_zero() && d.is_zero()) || radicand.is_zero()) return out;
  Rational s, m;
  squarefree_decompose(radicand, s, m);
  Gauss coeff = gmul({c, d}, {s.abs(), Rational()});
  if (m.sign() < 0) {
    coeff = gmul(coeff, {Rational(), Rational(1)});
    m = -m;
  }
  if (m.is_one()) {
    out.a_ += coeff.re;
    out.b_ += coeff.im;
    return out;
  }
  out.c_ = coeff.re;
  out.d_ = coeff.im;
  out.r_ = m;
  return out;
}

Scalar Scalar::sqrt_of(const Rational& q) { return make(Rational(), Rational(), Rational(1), Rational(), q); }

Rational common_radicand(const Scalar& x, const Scalar& y) {
  if (!x.has_radicand()) return y.radicand();
  if (!y.has_radicand() || x.radicand() == y.radicand()) return x.radicand();
  throw Error(ErrorCode::IncompatibleRadicands,
              "sqrt(" + x.radicand().to_string() + ") vs sqrt(" + y.radicand().to_string() + ")");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  out.c_ = -c_;
  out.d_ = -d_;
  return out;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.b_ = -b_;
  out.d_ = -d_;
  return out;
}

Scalar Scalar::radical_conj() const {
  Scalar out = *this;
  out.c_ = -c_;
  out.d_ = -d_;
  return out;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.is_gaussian() && y.is_gaussian()) {
    if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ + y.a_);
    return Scalar(x.a_ + y.a_, x.b_ + y.b_);
  }
  Rational r = common_radicand(x, y);
  return Scalar::make(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_, r);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return Scalar();
  if (x.is_gaussian() && y.is_gaussian()) {
    if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ * y.a_);
    Gauss g = gmul({x.a_, x.b_}, {y.a_, y.b_});
    return Scalar(g.re, g.im);
  }
  Rational r = common_radicand(x, y);
  Gauss p{x.a_, x.b_}, q{x.c_, x.d_}, s{y.a_, y.b_}, t{y.c_, y.d_};
  Gauss qt = gmul(q, t);
  Gauss base = gadd(gmul(p, s), gmul(qt, {r, Rational()}));
  Gauss rad = gadd(gmul(p, t), gmul(q, s));
  return Scalar::make(base.re, base.im, rad.re, rad.im, r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  if (is_gaussian()) {
    Gauss g = ginv({a_, b_});
    return Scalar(g.re, g.im);
  }
  Gauss p{a_, b_}, q{c_, d_};
  Gauss norm = gsub(gmul(p, p), gmul(gmul(q, q), {r_, Rational()}));
  Gauss ninv = ginv(norm);
  Gauss base = gmul(p, ninv);
  Gauss rad = gmul(q, ninv);
  return make(base.re, base.im, -rad.re, -rad.im, r_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
  if (y.is_rational() && x.is_gaussian()) return Scalar(x.a_ / y.a_, x.b_ / y.a_);
  return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_ || x.d_ != y.d_) return false;
  return x.is_gaussian() || x.r_ == y.r_;
}

int sign_of_real_radical(const Rational& p, const Rational& q, const Rational& r) {
  int sp = p.sign(), sq = q.sign();
  if (sq == 0 || r.is_zero()) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 with q^2 r
  int c = compare(p * p, q * q * r);
  return c > 0 ? sp : (c < 0 ? sq : 0);
}

int Scalar::real_sign() const {
  if (!b_.is_zero() || !d_.is_zero()) throw Error(ErrorCode::InvalidArgument, "real_sign of non-real scalar");
  return sign_of_real_radical(a_, c_, r_);
}

std::string Scalar::render(const std::string& root_token) const {
  std::string out;
  auto term = [&out](const Rational& coeff, const std::string& suffix) {
    if (coeff.is_zero()) return;
    std::string mag = coeff.abs().to_string();
    if (out.empty()) {
      out = (coeff.sign() < 0 ? "-" : "") + mag;
    } else {
      out += (coeff.sign() < 0 ? " - " : " + ") + mag;
    }
    out += suffix;
  };
  term(a_, "");
  term(b_, " i");
  term(c_, " " + root_token);
  term(d_, " i " + root_token);
  return out.empty() ? "0" : out;
}

std::string Scalar::to_string() const { return render("sqrt(" + r_.to_string() + ")"); }
std::string Scalar::to_literal() const { return render("rt"); }

std::optional<Scalar> try_sqrt(const Scalar& x) {
  if (x.is_zero()) return Scalar();
  if (x.is_gaussian()) {
    if (auto g = gauss_sqrt_exact({x.re(), x.im()})) return Scalar(g->re, g->im);
    if (x.im().is_zero()) return Scalar::sqrt_of(x.re());
    Rational w;
    if (!rational_sqrt(x.re() * x.re() + x.im() * x.im(), w)) return std::nullopt;
    Scalar p = Scalar::sqrt_of((x.re() + w) / Rational(2));
    Scalar q = Scalar(x.im()) / (Scalar(2) * p);
    return p + q * Scalar::imag_unit();
  }
  // x = P + Q sqrt(r); look for p + q sqrt(r) with p^2 + r q^2 = P and 2pq = Q.
  Gauss P{x.re(), x.im()}, Q{x.rad_re(), x.rad_im()};
  const Rational& r = x.radicand();
  Gauss disc = gsub(gmul(P, P), gmul(gmul(Q, Q), {r, Rational()}));
  auto sd = gauss_sqrt_exact(disc);
  if (!sd) return std::nullopt;
  for (int sgn : {1, -1}) {
    Gauss X = gmul(gadd(P, gmul(*sd, {Rational(sgn), Rational()})), {Rational(1, 2), Rational()});
    if (gzero(X)) continue;
    auto p = gauss_sqrt_exact(X);
    if (!p) continue;
    Gauss q = gmul(Q, ginv(gmul(*p, {Rational(2), Rational()})));
    Scalar cand = Scalar::make(p->re, p->im, q.re, q.im, r);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

}  // namespace homlie
