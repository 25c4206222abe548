#include <gtest/gtest.h>

#include <random>

#include "evokit/linalg.hpp"
#include "evokit/scalars.hpp"

using namespace evokit;

namespace {

CycScalar z(long k) { return CycScalar::zeta(k); }

CycScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  auto q = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  return {q(), q(), q(), q()};
}

LaurentPoly random_poly(std::mt19937& rng, int min_val) {
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> shift(0, 2);
  std::vector<CycScalar> c;
  int n = len(rng);
  for (int k = 0; k < n; ++k) c.push_back(random_scalar(rng));
  return LaurentPoly(min_val + shift(rng), c);
}

}  // namespace

TEST(CycScalar, ZetaPowers) {
  EXPECT_EQ(z(2) * z(2), CycScalar(-1));
  EXPECT_EQ(z(1) * z(1), z(2));
  EXPECT_EQ(z(4), CycScalar(-1));
  EXPECT_EQ(z(8), CycScalar(1));
  EXPECT_EQ(z(-1), -z(3));
}

TEST(CycScalar, DifferenceOfSquares) {
  CycScalar a = CycScalar(1) + z(2);
  CycScalar b = CycScalar(1) - z(2);
  EXPECT_EQ(a * b, CycScalar(2));
}

TEST(CycScalar, SimpleInverses) {
  EXPECT_EQ(z(2).inverse(), -z(2));
  EXPECT_EQ(CycScalar(2).inverse(), CycScalar(Rational(1, 2)));
  EXPECT_THROW(CycScalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(CycScalar(1) / CycScalar(0), DivisionByZero);
}

TEST(CycScalar, InverseOfOnePlusZetaMatchesLinearSystem) {
  // Multiplication by a = 1 + z in the basis 1, z, z^2, z^3 has matrix with
  // columns a, a*z, a*z^2, a*z^3. Solving M x = e_0 gives the inverse.
  Matrix<CycScalar> m(4, 4, CycScalar(0));
  Rational cols[4][4] = {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {-1, 0, 0, 1}};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m(i, j) = CycScalar(cols[j][i]);
  auto x = solve(m, {CycScalar(1), CycScalar(0), CycScalar(0), CycScalar(0)});
  ASSERT_TRUE(x.has_value());
  CycScalar expected((*x)[0].coeff(0), (*x)[1].coeff(0), (*x)[2].coeff(0), (*x)[3].coeff(0));
  CycScalar a = CycScalar(1) + z(1);
  EXPECT_EQ(a.inverse(), expected);
  EXPECT_EQ(a * a.inverse(), CycScalar(1));
  EXPECT_EQ(expected, CycScalar(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2)));
}

TEST(CycScalar, FieldAxiomsRandomized) {
  std::mt19937 rng(20241);
  for (int trial = 0; trial < 1000; ++trial) {
    CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), CycScalar(1));
    }
  }
}

TEST(CycScalar, NormIsRational) {
  CycScalar a(1, 2, 0, -1);
  EXPECT_EQ((a * a.galois(3) * a.galois(5) * a.galois(7)), CycScalar(a.norm()));
}

TEST(CycScalar, ComplexEmbedding) {
  auto w = z(1).to_complex();
  auto sq = w * w;
  EXPECT_NEAR(sq.real(), 0.0, 1e-12);
  EXPECT_NEAR(sq.imag(), 1.0, 1e-12);
}

TEST(ParseScalar, Basic) {
  EXPECT_EQ(parse_scalar("3/2"), CycScalar(Rational(3, 2)));
  EXPECT_EQ(parse_scalar("i"), CycScalar(0, 0, 1, 0));
  EXPECT_EQ(parse_scalar("-1/2 + sqrt_i"), CycScalar(Rational(-1, 2), 1, 0, 0));
  EXPECT_EQ(parse_scalar("zeta^3"), z(3));
  EXPECT_EQ(parse_scalar("2*zeta^2"), CycScalar(0, 0, 2, 0));
  EXPECT_EQ(parse_scalar("4/6"), CycScalar(Rational(2, 3)));
  EXPECT_EQ(parse_scalar("i^-1"), -z(2));
  EXPECT_EQ(parse_scalar("(1 + i)*(1 - i)"), CycScalar(2));
}

TEST(ParseScalar, Errors) {
  try {
    parse_scalar("1 + x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("(1 + i"), ParseError);
  EXPECT_THROW(parse_scalar("i*t"), ParseError);
  EXPECT_THROW(parse_scalar("2 3"), ParseError);
}

TEST(ParseScalar, RoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    CycScalar a = random_scalar(rng);
    ASSERT_EQ(parse_scalar(format_scalar(a)), a) << format_scalar(a);
  }
  EXPECT_EQ(format_scalar(CycScalar(Rational(-1, 2), 1, 0, 0)), "-1/2 + zeta");
  EXPECT_EQ(format_scalar(z(2)), "i");
  EXPECT_EQ(format_scalar(CycScalar(0)), "0");
}

TEST(Laurent, CanonicalForm) {
  LaurentPoly p(-2, {CycScalar(0), CycScalar(1), CycScalar(0)});
  EXPECT_EQ(p.valuation(), -1);
  EXPECT_EQ(p.coeffs().size(), 1u);
  LaurentPoly zero(5, {CycScalar(0)});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.valuation(), 0);
  EXPECT_EQ(LaurentPoly::t(2) - LaurentPoly::t(2), LaurentPoly());
}

TEST(Laurent, ParseAndFormat) {
  EXPECT_EQ(parse_laurent("t^-2"), LaurentPoly::t(-2));
  LaurentPoly p = parse_laurent("-i*t^3 + 1/2");
  EXPECT_EQ(p.coefficient(3), -z(2));
  EXPECT_EQ(p.coefficient(0), CycScalar(Rational(1, 2)));
  EXPECT_EQ(format_laurent(p), "1/2 - i*t^3");
  EXPECT_EQ(format_laurent(parse_laurent("sqrt_i*t^-1")), "zeta*t^-1");
  EXPECT_EQ(parse_laurent("(2*t)^-1"), LaurentPoly::monomial(CycScalar(Rational(1, 2)), -1));
  EXPECT_EQ(parse_laurent("t/t^3"), LaurentPoly::t(-2));
  EXPECT_THROW(parse_laurent("(1 + t)^-1"), ParseError);
  EXPECT_THROW(parse_laurent("1/(1 + t)"), ParseError);
}

TEST(Laurent, RoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = random_poly(rng, -3);
    ASSERT_EQ(parse_laurent(format_laurent(p)), p) << format_laurent(p);
  }
}

TEST(RationalFn, ValuationExamples) {
  EXPECT_EQ(RationalFn(LaurentPoly::t(-2)).valuation(), -2);
  RationalFn f(parse_laurent("t^2 + t^3"), parse_laurent("1 + t"));
  EXPECT_EQ(f.valuation(), 2);
  // hand reduction: t^2 (1 + t) / (1 + t) = t^2
  EXPECT_EQ(f, RationalFn(LaurentPoly::t(2)));
  EXPECT_EQ(RationalFn(0).valuation(), kInfiniteValuation);
}

TEST(RationalFn, LimitExamples) {
  EXPECT_EQ(RationalFn(LaurentPoly::t(1)).limit0(), CycScalar(0));
  RationalFn f(parse_laurent("2 + t"), parse_laurent("1 + t"));
  EXPECT_EQ(f.limit0(), CycScalar(2));
  EXPECT_THROW(RationalFn(LaurentPoly::t(-1)).limit0(), NoLimitError);
  EXPECT_EQ(RationalFn(0).limit0(), CycScalar(0));
}

TEST(RationalFn, NormalisedDenominator) {
  RationalFn f(parse_laurent("t"), parse_laurent("2*t^2 + 2*t^3"));
  EXPECT_EQ(f.den(), parse_laurent("1 + t"));
  EXPECT_EQ(f.num(), LaurentPoly::monomial(CycScalar(Rational(1, 2)), -1));
  EXPECT_EQ(f.valuation(), -1);
}

TEST(RationalFn, ArithmeticCancels) {
  RationalFn a(LaurentPoly(1), parse_laurent("1 + t"));
  RationalFn b(LaurentPoly::t(1), parse_laurent("1 + t"));
  EXPECT_EQ(a + b, RationalFn(1));
  EXPECT_EQ(a * RationalFn(parse_laurent("1 + t")), RationalFn(1));
  EXPECT_EQ(a / a, RationalFn(1));
  EXPECT_THROW(a / RationalFn(0), DivisionByZero);
}

TEST(RationalFn, ValuationIsAdditive) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    RationalFn f(random_poly(rng, -2), random_poly(rng, -1));
    RationalFn g(random_poly(rng, -2), random_poly(rng, 0));
    if (f.is_zero() || g.is_zero()) continue;
    ASSERT_EQ((f * g).valuation(), f.valuation() + g.valuation());
  }
}

TEST(RationalFn, LimitAgreesWithNumericEvaluation) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly num = random_poly(rng, 0);
    std::vector<CycScalar> dc{CycScalar(1), random_scalar(rng)};
    RationalFn f(num, LaurentPoly(0, dc));
    if (f.valuation() < 0) continue;
    auto exact = f.limit0().to_complex();
    auto approx = f.eval(1e-6);
    double scale = std::max(1.0, std::abs(exact));
    ASSERT_LT(std::abs(exact - approx) / scale, 1e-3);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(RationalFn, EvalAtPole) {
  RationalFn f(LaurentPoly(1), parse_laurent("1 - t"));
  EXPECT_FALSE(f.eval(CycScalar(1)).has_value());
  EXPECT_EQ(*f.eval(CycScalar(2)), CycScalar(-1));
  EXPECT_FALSE(RationalFn(LaurentPoly::t(-1)).eval(CycScalar(0)).has_value());
}
