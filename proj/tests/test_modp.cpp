#include <gtest/gtest.h>

#include <random>

#include "koszulkit/modp.hpp"

using namespace koszulkit;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, PrimeField F) {
  Matrix m(r, c, F);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = F.reduce(static_cast<long long>(rng() % 7));
  return m;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  PrimeField F(5);
  EXPECT_EQ(F.add(3, 4), 2u);
  EXPECT_EQ(F.sub(1, 3), 3u);
  EXPECT_EQ(F.mul(3, 4), 2u);
  EXPECT_EQ(F.inv(2), 3u);
  EXPECT_EQ(F.reduce(-1), 4u);
  EXPECT_EQ(F.sign(3), 4u);
  EXPECT_THROW(PrimeField(6), std::invalid_argument);
}

TEST(FieldElt, MixedModuliRejected) {
  FieldElt a(2, 5), b(3, 5), c(1, 3);
  EXPECT_EQ((a * b).value, 1u);
  EXPECT_EQ(a.inverse().value, 3u);
  EXPECT_THROW(a + c, std::invalid_argument);
}

TEST(Rank, Examples) {
  PrimeField F5(5);
  EXPECT_EQ(rank(Matrix::identity(2, F5)), 2u);
  EXPECT_EQ(rank(Matrix(3, 4, F5)), 0u);
  EXPECT_EQ(rank(Matrix::from_rows({{1, 2}, {2, 4}}, F5)), 1u);
  // full rank over Q, singular mod 3
  EXPECT_EQ(rank(Matrix::from_rows({{1, 1}, {1, 4}}, PrimeField(3))), 1u);
}

TEST(KernelBasis, Examples) {
  PrimeField F5(5);
  EXPECT_EQ(kernel_basis(Matrix::identity(3, F5)).cols(), 0u);
  auto k = kernel_basis(Matrix(2, 3, F5));
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(rank(k), 3u);
  auto one = kernel_basis(Matrix::from_rows({{1, 2}, {2, 4}}, F5));
  ASSERT_EQ(one.cols(), 1u);
  EXPECT_EQ(one(0, 0), 3u);
  EXPECT_EQ(one(1, 0), 1u);
}

TEST(Solve, Examples) {
  PrimeField F3(3), F5(5);
  std::vector<Residue> b{2, 1};
  EXPECT_EQ(*solve(Matrix::identity(2, F5), b), b);
  EXPECT_FALSE(solve(Matrix(2, 2, F5), b).has_value());
  auto x = solve(Matrix::from_rows({{1, 1}, {0, 1}}, F3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (std::vector<Residue>{1, 1}));
  EXPECT_THROW(solve(Matrix::identity(3, F5), b), std::invalid_argument);
}

TEST(ComplementIn, SpansQuotient) {
  PrimeField F(7);
  auto space = Matrix::identity(3, F);
  auto sub = Matrix::from_rows({{1}, {1}, {0}}, F);
  auto c = complement_in(sub, space);
  EXPECT_EQ(c.cols(), 2u);
  Matrix all(3, 3, F);
  for (std::size_t r = 0; r < 3; ++r) {
    all(r, 0) = sub(r, 0);
    all(r, 1) = c(r, 0);
    all(r, 2) = c(r, 1);
  }
  EXPECT_EQ(rank(all), 3u);
}

TEST(RandomMatrices, RankOfTransposeAndKernel) {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int t = 0; t < 40; ++t) {
      PrimeField F(p);
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto A = random_matrix(rng, r, c, F);
      EXPECT_EQ(rank(A), rank(A.transpose()));
      auto K = kernel_basis(A);
      EXPECT_EQ(K.cols() + rank(A), c);
      EXPECT_EQ(rank(K), K.cols());
      EXPECT_TRUE((A * K).is_zero());
      std::vector<Residue> b(r);
      for (auto& v : b) v = F.reduce(static_cast<long long>(rng() % p));
      if (auto x = solve(A, b)) EXPECT_EQ(A.apply(*x), b);
    }
}
