#include <gtest/gtest.h>

#include "koszulkit/sl2.hpp"

using namespace koszulkit;
using namespace koszulkit::sl2;

namespace {

/// k[x]/(x^3) with x in degree 1: Frobenius but not Koszul.
GradedAlgebra truncated_polynomial(std::uint32_t p = 3) {
  GradedAlgebra A;
  A.p = p;
  A.name = "k[x]/x^3";
  A.labels = {"1", "x", "x2"};
  A.degree = {0, 1, 2};
  A.products.assign(9, {});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; a + b < 3; ++b) A.products[a * 3 + b] = {{a + b, 1}};
  A.idempotents = {0};
  A.multiplicities = {1};
  A.trace = {0, 0, 1};
  A.top_degree = 2;
  return A;
}

}  // namespace

TEST(P1, CechCohomology) {
  EXPECT_EQ(cohomology_P1(0), std::make_pair(std::size_t{1}, std::size_t{0}));
  EXPECT_EQ(cohomology_P1(-1), std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_EQ(cohomology_P1(-3), std::make_pair(std::size_t{0}, std::size_t{2}));
  for (int d = -8; d <= 8; ++d) {
    auto [h0, h1] = cohomology_P1(d);
    EXPECT_EQ(h0, static_cast<std::size_t>(std::max(d + 1, 0))) << d;
    EXPECT_EQ(h1, static_cast<std::size_t>(std::max(-d - 1, 0))) << d;
  }
}

TEST(ZeroSection, ExtExamples) {
  using E = std::map<int, std::size_t>;
  EXPECT_EQ(ext_zero_sections(0, 0), (E{{0, 1}, {2, 1}}));
  EXPECT_EQ(ext_zero_sections(-1, 0), (E{{0, 2}}));
  EXPECT_EQ(ext_zero_sections(0, -1), (E{{2, 2}}));
}

TEST(ZeroSection, TotalsAgreeWithTwoTermComplex) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      std::size_t total = 0;
      for (auto& [i, d] : ext_zero_sections(a, b)) total += d;
      const int n = b - a;
      const auto closed = static_cast<std::size_t>(std::abs(n + 1) + std::abs(n - 1));
      EXPECT_EQ(total, closed) << a << "," << b;
    }
}

TEST(RegularBlock, Dimensions) {
  EXPECT_EQ(build_regular_block(3, 0).dim(), 18u);
  EXPECT_EQ(build_regular_block(5, 1).degree_dims(), (std::vector<std::size_t>{13, 24, 13}));
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int l = 0; 2 * l <= static_cast<int>(p) - 3; ++l) {
      auto A = build_regular_block(p, l);
      EXPECT_EQ(A.dim(), 2u * p * p);
      EXPECT_TRUE(check_graded_algebra(A).ok) << check_graded_algebra(A).detail;
      EXPECT_TRUE(degree_zero_semisimple(A).ok);
      EXPECT_EQ(block_dims_from_ext(p, l), A.degree_dims());
    }
}

TEST(RegularBlock, RangeChecks) {
  EXPECT_THROW(build_regular_block(5, 2), std::invalid_argument);
  EXPECT_THROW(build_regular_block(5, -1), std::invalid_argument);
  EXPECT_THROW(build_regular_block(4, 0), std::invalid_argument);
  EXPECT_THROW(build_singular_block(9), std::invalid_argument);
}

TEST(Quiver, Presentation) {
  auto Q = quiver_presentation(5);
  EXPECT_EQ(Q.dims, (std::vector<std::size_t>{2, 4, 2, 0}));
  EXPECT_TRUE(check_graded_algebra(Q.algebra).ok);
  auto C = graded_cartan(Q.algebra);
  EXPECT_EQ(C[0][0][2], 1u);
  EXPECT_EQ(C[1][1][2], 1u);
  EXPECT_EQ(C[0][1][1], 2u);
  EXPECT_EQ(C[0][1][2], 0u);
}

TEST(Quiver, MoritaCorrespondence) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int l = 0; 2 * l <= static_cast<int>(p) - 3; ++l) {
      auto A = build_regular_block(p, l);
      auto Q = quiver_presentation(p);
      EXPECT_TRUE(check_basic_algebra_isomorphism(Q, A).ok);
      auto cb = graded_cartan(A), cbi = graded_cartan(A, true), cq = graded_cartan(Q.algebra);
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
          for (std::size_t d = 0; d < 3; ++d) {
            EXPECT_EQ(cb[x][y][d], cq[x][y][d]);
            EXPECT_EQ(cbi[x][y][d], static_cast<std::size_t>(A.multiplicities[x] * A.multiplicities[y]) * cq[x][y][d]);
          }
    }
}

TEST(SingularBlock, MatrixAlgebra) {
  auto A = build_singular_block(3);
  EXPECT_EQ(A.dim(), 9u);
  EXPECT_EQ(A.degree_dims(), (std::vector<std::size_t>{9}));
  EXPECT_EQ(A.vertex_count(), 1u);
  EXPECT_EQ(A.multiplicities, (std::vector<int>{3}));
  EXPECT_TRUE(check_graded_algebra(A).ok);
  auto fr = frobenius_form(A, 0);
  EXPECT_TRUE(fr.ok());
  EXPECT_EQ(fr.gram_rank, 9u);
}

TEST(Frobenius, RegularBlocks) {
  auto fr = frobenius_form(build_regular_block(3, 0), 2);
  EXPECT_EQ(fr.gram_rank, 18u);
  EXPECT_TRUE(fr.symmetric);
  EXPECT_TRUE(fr.graded);
  for (std::uint32_t p : {5u, 7u})
    for (int l = 0; 2 * l <= static_cast<int>(p) - 3; ++l) EXPECT_TRUE(frobenius_form(build_regular_block(p, l), 2).ok());
  EXPECT_TRUE(frobenius_form(quiver_presentation(3).algebra, 2).ok());
}

TEST(Frobenius, DegenerateFunctionalDetected) {
  auto A = build_regular_block(3, 0);
  std::fill(A.trace.begin(), A.trace.end(), 0);
  EXPECT_FALSE(frobenius_form(A, 2).nondegenerate);
  // right functional, wrong top degree
  EXPECT_FALSE(frobenius_form(build_regular_block(3, 0), 1).graded);
}

TEST(AntiAutomorphism, BlocksAndQuiver) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int l = 0; 2 * l <= static_cast<int>(p) - 3; ++l) {
      auto A = build_regular_block(p, l);
      auto r = check_anti_automorphism(A, block_anti_automorphism(A));
      EXPECT_TRUE(r.ok()) << r.detail;
    }
    auto S = build_singular_block(p);
    EXPECT_TRUE(check_anti_automorphism(S, block_anti_automorphism(S)).ok());
  }
  auto Q = quiver_presentation(5);
  EXPECT_TRUE(check_anti_automorphism(Q.algebra, quiver_anti_automorphism(Q)).ok());
  EXPECT_TRUE(quiver_relations_preserved(Q));
}

TEST(AntiAutomorphism, IdentityIsRejected) {
  auto A = build_regular_block(3, 0);
  std::vector<std::vector<Residue>> id;
  for (std::size_t x = 0; x < A.dim(); ++x) id.push_back(A.basis_vector(x));
  auto r = check_anti_automorphism(A, id);
  EXPECT_TRUE(r.involutive);
  EXPECT_FALSE(r.multiplicative);
}

TEST(Poincare, Palindromy) {
  auto r = poincare_symmetry(build_regular_block(3, 0), 1);
  EXPECT_EQ(r.coefficients, (std::vector<std::size_t>{5, 8, 5}));
  EXPECT_EQ(poincare_string(r.coefficients), "5+8t+5t^2");
  EXPECT_TRUE(r.palindromic);
  EXPECT_EQ(poincare_string(build_regular_block(5, 1).degree_dims()), "13+24t+13t^2");
  EXPECT_TRUE(poincare_symmetry(build_singular_block(5), 0).palindromic);
  EXPECT_FALSE(poincare_symmetry(build_regular_block(3, 0), 0).palindromic);
}

TEST(Koszulity, RegularBlocksAreLinear) {
  auto r = koszulity_probe(build_regular_block(3, 0), 4);
  EXPECT_TRUE(r.linear);
  ASSERT_EQ(r.resolutions.size(), 2u);
  // generator counts grow by one per step: i+1 copies of a simple in degree i
  for (auto& res : r.resolutions) {
    ASSERT_EQ(res.size(), 4u);
    for (auto& step : res) {
      ASSERT_EQ(step.counts.size(), 1u);
      EXPECT_EQ(step.counts.begin()->first.second, step.homological_degree);
      EXPECT_EQ(step.counts.begin()->second, static_cast<std::size_t>(step.homological_degree + 1));
    }
  }
  for (std::uint32_t p : {5u, 7u})
    for (int l = 0; 2 * l <= static_cast<int>(p) - 3; ++l) EXPECT_TRUE(koszulity_probe(build_regular_block(p, l), 4).linear);
}

TEST(Koszulity, SingularBlockIsSemisimple) {
  auto r = koszulity_probe(build_singular_block(5), 3);
  EXPECT_TRUE(r.linear);
  ASSERT_EQ(r.resolutions.size(), 1u);
  ASSERT_EQ(r.resolutions[0].size(), 1u);
  EXPECT_TRUE(r.resolutions[0][0].counts.empty());
}

TEST(Koszulity, NonlinearWitness) {
  auto A = truncated_polynomial();
  ASSERT_TRUE(check_graded_algebra(A).ok);
  auto r = koszulity_probe(A, 3);
  EXPECT_FALSE(r.linear);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, std::make_pair(2, 3));
}

TEST(Report, BlockReportJson) {
  auto r = block_report({3, 0});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.json["dim"], 18);
  EXPECT_EQ(r.json["poincare"]["polynomial"], "5+8t+5t^2");
  auto s = block_report({5, std::nullopt});
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(s.json["dim"], 25);
  EXPECT_EQ(s.json["block"]["kind"], "singular");
}
