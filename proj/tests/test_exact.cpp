#include <gtest/gtest.h>

#include <functional>

#include "homlie/error.hpp"
#include "homlie/ratfunc.hpp"
#include "homlie/scalar.hpp"

using namespace homlie;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Rational, NormalizesSignAndCommonFactors) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_EQ((-a).sign(), -1);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(code_of([] { Rational::parse("x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::DivisionByZero);
}

TEST(Rational, OverflowPromotesToBigValues) {
  Rational big(1LL << 62);
  Rational sq = big * big;
  EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
  EXPECT_EQ(sq / big, big);
  Rational tiny = Rational(1) / sq;
  EXPECT_EQ(tiny * sq, Rational(1));
  EXPECT_EQ(sq - sq + Rational(3), Rational(3));
}

TEST(Rational, DivisionByZero) {
  EXPECT_EQ(code_of([] { (void)(Rational(1) / Rational(0)); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(0).inverse(); }), ErrorCode::DivisionByZero);
}

TEST(Scalar, GaussianArithmetic) {
  Scalar i = Scalar::imag_unit();
  EXPECT_EQ(i * i, Scalar(-1));
  Scalar z(Rational(1), Rational(2));  // 1 + 2i
  EXPECT_EQ(z * z.conj(), Scalar(5));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(Scalar(1) / i, -i);
}

TEST(Scalar, SquareRootsNormalize) {
  EXPECT_EQ(Scalar::sqrt_of(4), Scalar(2));
  EXPECT_EQ(Scalar::sqrt_of(-4), Scalar(2) * Scalar::imag_unit());
  EXPECT_EQ(Scalar::sqrt_of(8), Scalar(2) * Scalar::sqrt_of(2));
  EXPECT_EQ(Scalar::sqrt_of(Rational(1, 2)), Scalar::sqrt_of(2) / Scalar(2));
  Scalar r = Scalar::sqrt_of(2);
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ(r.radicand(), Rational(2));
  EXPECT_FALSE((r - r).has_radicand());
}

TEST(Scalar, RadicalInverse) {
  Scalar x = Scalar(1) + Scalar::sqrt_of(2);
  EXPECT_EQ(x.inverse(), Scalar::sqrt_of(2) - Scalar(1));
  Scalar y = Scalar::imag_unit() + Scalar::sqrt_of(3);
  EXPECT_EQ(y * y.inverse(), Scalar(1));
}

TEST(Scalar, IncompatibleRadicands) {
  EXPECT_EQ(code_of([] { (void)(Scalar::sqrt_of(2) + Scalar::sqrt_of(3)); }), ErrorCode::IncompatibleRadicands);
  EXPECT_EQ(code_of([] { (void)(Scalar::sqrt_of(2) * Scalar::sqrt_of(3)); }), ErrorCode::IncompatibleRadicands);
}

TEST(Scalar, TrySqrt) {
  EXPECT_EQ(try_sqrt(Scalar(-1)), Scalar::imag_unit());
  auto r = try_sqrt(Scalar(3) + Scalar(2) * Scalar::sqrt_of(2));  // (1 + sqrt 2)^2
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, Scalar(3) + Scalar(2) * Scalar::sqrt_of(2));
  EXPECT_FALSE(try_sqrt(Scalar::sqrt_of(2)).has_value());
}

TEST(Scalar, RealSign) {
  EXPECT_EQ((Scalar(3) - Scalar(2) * Scalar::sqrt_of(2)).real_sign(), 1);
  EXPECT_EQ((Scalar(1) - Scalar::sqrt_of(2)).real_sign(), -1);
  EXPECT_EQ(Scalar().real_sign(), 0);
}

TEST(Poly, DivisionAndGcd) {
  Poly s = Poly::s();
  Poly a = s * s - Poly(Scalar(1));
  Poly b = s - Poly(Scalar(1));
  Poly q, r;
  Poly::divmod(a, b, q, r);
  EXPECT_EQ(q, s + Poly(Scalar(1)));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Poly::gcd(a * Poly(Scalar(3)), b * b), b);
  EXPECT_EQ(a.eval(Scalar(3)), Scalar(8));
}

TEST(RatFunc, ReducesToLowestTerms) {
  RatFunc s(Poly::s());
  RatFunc f = (s * s - 1) / (s - 1);
  EXPECT_EQ(f, s + 1);
  EXPECT_EQ(f.den().degree(), 0);
}

TEST(RatFunc, LimitAtInfinity) {
  RatFunc s(Poly::s());
  Limit l = ((RatFunc(2) * s * s + 1) / (s * s - 3)).limit_at_infinity();
  EXPECT_TRUE(l.finite);
  EXPECT_EQ(l.value, Scalar(2));
  EXPECT_FALSE((s * s / (s + 1)).limit_at_infinity().finite);
  Limit z = (RatFunc(1) / s).limit_at_infinity();
  EXPECT_TRUE(z.finite);
  EXPECT_TRUE(z.value.is_zero());
}

TEST(RatFunc, EvaluateAtPoleThrows) {
  RatFunc s(Poly::s());
  RatFunc f = RatFunc(1) / (s - 2);
  EXPECT_EQ(f.evaluate(Scalar(3)), Scalar(1));
  EXPECT_EQ(code_of([&] { f.evaluate(Scalar(2)); }), ErrorCode::PoleAtSample);
}
