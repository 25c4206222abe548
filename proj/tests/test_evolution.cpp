#include <gtest/gtest.h>

#include "evokit/catalog.hpp"
#include "support.hpp"

using namespace evokit;

namespace {

const Catalog& cat() { return Catalog::instance(); }

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Product, BasisSquares) {
  auto mu = cat().algebra("mu_2_2");
  EXPECT_EQ(product(mu, basis_vector(2, 0), basis_vector(2, 0)), vec({0, 1}));
  EXPECT_EQ(product(mu, basis_vector(2, 0), basis_vector(2, 1)), vec({0, 0}));
}

TEST(Product, E3SumSquaresToZero) {
  auto e3 = cat().algebra("E3");
  Vec u = vec({1, 1});
  EXPECT_EQ(product(e3, u, u), vec({0, 0}));
}

TEST(Product, IsBilinearAndCommutative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = fixtures::random_dim(rng);
    auto alg = fixtures::random_algebra(rng, n);
    Vec u(n), v(n), w(n);
    for (std::size_t k = 0; k < n; ++k) {
      u[k] = fixtures::small_scalar(rng);
      v[k] = fixtures::small_scalar(rng);
      w[k] = fixtures::small_scalar(rng);
    }
    EXPECT_EQ(product(alg, u, v), product(alg, v, u));
    Vec sum(n);
    for (std::size_t k = 0; k < n; ++k) sum[k] = v[k] + w[k];
    Vec lhs = product(alg, u, sum);
    Vec a = product(alg, u, v), b = product(alg, u, w);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(lhs[k], a[k] + b[k]);
  }
}

TEST(Annihilator, Examples) {
  auto ann = annihilator(cat().algebra("mu_3_2"));
  EXPECT_EQ(ann, SubspaceBasis<CycScalar>::coordinate(3, {1, 2}));
  EXPECT_EQ(annihilator(cat().algebra("mu_4_1")).dim(), 4u);
  EXPECT_EQ(annihilator(cat().algebra("E6(0)")).dim(), 0u);
  EXPECT_EQ(annihilator(cat().algebra("E6(1)")).dim(), 0u);
}

TEST(AnnSeries, Examples) {
  auto s = ann_series(cat().algebra("mu_3_4"));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(s.stabilized_at, 3u);
  EXPECT_TRUE(s.reaches_full);

  s = ann_series(cat().algebra("mu_4_6"));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(s.stabilized_at, 2u);

  s = ann_series(cat().algebra("E1"));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_FALSE(s.reaches_full);
}

TEST(TypeSequence, Examples) {
  EXPECT_EQ(type_sequence(cat().algebra("mu_4_10")), (TypeSeq{{1, 1, 2}}));
  EXPECT_EQ(type_sequence(cat().algebra("mu_4_5")), (TypeSeq{{2, 1, 1}}));
  EXPECT_EQ(type_sequence(cat().algebra("mu_2_1")), (TypeSeq{{2}}));
  EXPECT_EQ(format_type(TypeSeq{{1, 3}}), "[1,3]");
}

TEST(TypeSequence, LexOrderPadsWithZeros) {
  EXPECT_LT(compare_lex((TypeSeq{{2, 1}}), (TypeSeq{{3}})), 0);
  EXPECT_GT(compare_lex((TypeSeq{{2, 1, 1}}), (TypeSeq{{1, 3}})), 0);
  EXPECT_EQ(compare_lex((TypeSeq{{2}}), (TypeSeq{{2, 0}})), 0);
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(is_nilpotent(cat().algebra("mu_4_12")));
  EXPECT_FALSE(is_nilpotent(cat().algebra("E1")));
  EXPECT_FALSE(is_nilpotent(cat().algebra("E6(0)")));
}

TEST(SquareDim, Examples) {
  EXPECT_EQ(square_dim(cat().algebra("mu_4_4")), 2u);
  EXPECT_EQ(square_dim(cat().algebra("mu_3_3")), 1u);
  EXPECT_EQ(square_dim(cat().algebra("mu_4_11")), 3u);
  EXPECT_EQ(square_dim(abelian(3)), 0u);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_regular(cat().algebra("E5(0,0)")));
  EXPECT_FALSE(is_regular(cat().algebra("mu_2_2")));
  EXPECT_FALSE(is_regular(cat().algebra("E2")));
}

// Powers E^k are computed from products of arbitrary vectors, independently
// of the annihilator series.
TEST(CrossCheck, PowersAgreeWithSeries) {
  std::mt19937 rng(5);
  std::vector<EvolutionAlgebra> algs;
  for (const auto& e : cat().all()) algs.push_back(e.algebra);
  for (int k = 0; k < 40; ++k) algs.push_back(fixtures::random_algebra(rng, fixtures::random_dim(rng)));
  for (const auto& alg : algs) {
    auto dims = power_dims(alg, 2 * alg.dim() + 2);
    EXPECT_EQ(dims[1], square_dim(alg)) << alg.label();
    EXPECT_EQ(dims.back() == 0, is_nilpotent(alg)) << alg.label();
  }
}

TEST(CrossCheck, TypeSumsToDimForNilpotent) {
  for (const auto& e : cat().nilpotent()) {
    auto t = type_sequence(e.algebra);
    EXPECT_EQ(t.total(), e.algebra.dim()) << e.label;
    EXPECT_EQ(t.parts.front(), annihilator(e.algebra).dim()) << e.label;
  }
}

TEST(AlgebraFromRows, RejectsRaggedRows) {
  EXPECT_THROW(algebra_from_rows({{CycScalar(1), CycScalar(0)}, {CycScalar(1)}}), DimensionMismatch);
}
