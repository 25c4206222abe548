#include <gtest/gtest.h>

#include <random>

#include "evokit/linalg.hpp"
#include "evokit/scalars.hpp"

using namespace evokit;

namespace {

using M = Matrix<CycScalar>;
using RM = Matrix<RationalFn>;

RationalFn lp(const char* s) { return RationalFn(parse_laurent(s)); }

M random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int sparsity) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> keep(0, 9);
  std::uniform_int_distribution<int> unit(0, 3);
  M m(r, c, CycScalar(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) >= sparsity) m(i, j) = CycScalar(val(rng)) * CycScalar::zeta(unit(rng));
  return m;
}

RM random_rf_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> e(-2, 2);
  RM m(n, n, RationalFn(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = RationalFn(LaurentPoly::monomial(CycScalar(val(rng)), e(rng)) +
                           LaurentPoly::monomial(CycScalar(val(rng)), e(rng)));
  return m;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(M::identity(3)), 3u);
  EXPECT_EQ(rank(M(2, 2, CycScalar(0))), 0u);
  M mu411(4, 4, CycScalar(0));
  mu411(0, 1) = 1;
  mu411(1, 2) = 1;
  mu411(2, 3) = 1;
  EXPECT_EQ(rank(mu411), 3u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(M::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel_basis(M(2, 3, CycScalar(0))).dim(), 3u);
  auto k = kernel_basis(M{{CycScalar(1), CycScalar(1)}});
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains({CycScalar(1), CycScalar(-1)}));
  EXPECT_FALSE(k.contains({CycScalar(1), CycScalar(1)}));
}

TEST(Solve, Examples) {
  std::vector<CycScalar> b{CycScalar(3), CycScalar::zeta(1)};
  EXPECT_EQ(*solve(M::identity(2), b), b);
  auto x = solve(M{{CycScalar(1), CycScalar(1)}}, {CycScalar(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], CycScalar(2));
  EXPECT_FALSE(solve(M{{CycScalar(1)}, {CycScalar(1)}}, {CycScalar(1), CycScalar(2)}).has_value());
}

TEST(Inverse, LaurentFamilyMultipliesBack) {
  RM g = RM::identity(3);
  g(1, 1) = lp("t");
  g(2, 2) = lp("t^2");
  g(2, 1) = RationalFn(1);
  RM q = inverse(g);
  EXPECT_EQ(g * q, RM::identity(3));
  EXPECT_EQ(q * g, RM::identity(3));
  EXPECT_EQ(q(1, 1), lp("t^-1"));
  EXPECT_EQ(q(2, 1), lp("-t^-3"));
  EXPECT_EQ(q(2, 2), lp("t^-2"));
}

TEST(Inverse, ScaledIdentity) {
  RM g(2, 2, RationalFn(0));
  g(0, 0) = g(1, 1) = lp("t^-1");
  RM q = inverse(g);
  EXPECT_EQ(q(0, 0), lp("t"));
  EXPECT_EQ(q(1, 1), lp("t"));
  EXPECT_TRUE(q(0, 1).is_zero());
}

TEST(Inverse, Singular) {
  EXPECT_THROW(inverse(M{{CycScalar(1), CycScalar(1)}, {CycScalar(1), CycScalar(1)}}),
               SingularMatrixError);
  RM g{{lp("t"), lp("t^2")}, {RationalFn(1), lp("t")}};
  EXPECT_THROW(inverse(g), SingularMatrixError);
}

TEST(Determinant, Examples) {
  M m{{CycScalar(1), CycScalar(2)}, {CycScalar(3), CycScalar(4)}};
  EXPECT_EQ(determinant(m), CycScalar(-2));
  RM g{{lp("t"), RationalFn(1)}, {RationalFn(0), lp("t^2")}};
  EXPECT_EQ(determinant(g), lp("t^3"));
}

TEST(InSpan, Examples) {
  auto b = SubspaceBasis<CycScalar>::span(2, {{CycScalar(1), CycScalar(0)}});
  EXPECT_TRUE(in_span(b, {CycScalar(0), CycScalar(0)}));
  EXPECT_FALSE(in_span(b, {CycScalar(0), CycScalar(1)}));
  EXPECT_THROW(in_span(b, {CycScalar(0)}), DimensionMismatch);
}

TEST(Subspace, CanonicalEquality) {
  using S = SubspaceBasis<CycScalar>;
  S a = S::span(3, {{1, 1, 0}, {0, 1, 1}});
  S b = S::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.non_pivots(), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(S::coordinate(3, {0}).is_subspace_of(S::full(3)));
}

TEST(Hadamard, Examples) {
  M m{{CycScalar(1), CycScalar(2)}, {CycScalar(3), CycScalar(4)}};
  EXPECT_EQ(hadamard_square(m), (M{{CycScalar(1), CycScalar(4)}, {CycScalar(9), CycScalar(16)}}));
  M u{{-CycScalar::zeta(2)}};
  EXPECT_EQ(hadamard_square(u)(0, 0), CycScalar(-1));
  RM g{{lp("t"), RationalFn(0)}, {RationalFn(0), lp("t")}};
  EXPECT_EQ(hadamard_square(g)(1, 1), lp("t^2"));
}

TEST(Properties, RankNullityRandomized) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    M m = random_matrix(rng, r, c, trial % 7);
    auto k = kernel_basis(m);
    ASSERT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.vectors()) ASSERT_TRUE(is_zero_vector(m * v));
  }
  for (int trial = 0; trial < 200; ++trial) {
    RM m = random_rf_matrix(rng, 1 + trial % 3);
    ASSERT_EQ(rank(m) + kernel_basis(m).dim(), m.cols());
  }
}

TEST(Properties, InverseRoundTrip) {
  std::mt19937 rng(4);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    M m = random_matrix(rng, 4, 4, 2);
    if (rank(m) < 4) continue;
    ASSERT_EQ(m * inverse(m), M::identity(4));
    ++done;
  }
  EXPECT_GT(done, 50);
  for (int trial = 0; trial < 40; ++trial) {
    RM m = random_rf_matrix(rng, 3);
    if (rank(m) < 3) continue;
    ASSERT_EQ(m * inverse(m), RM::identity(3));
  }
}

TEST(Properties, KernelMembershipMatchesProduct) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> val(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    M m = random_matrix(rng, 2, 4, 3);
    auto k = kernel_basis(m);
    std::vector<CycScalar> v(4);
    if (trial % 2 == 0 && k.dim() > 0) {
      for (std::size_t j = 0; j < 4; ++j) v[j] = k.vectors()[0][j] * CycScalar(val(rng) + 2);
    } else {
      for (auto& x : v) x = CycScalar(val(rng));
    }
    ASSERT_EQ(in_span(k, v), is_zero_vector(m * v));
  }
}
