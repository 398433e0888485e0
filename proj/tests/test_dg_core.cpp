#include <gtest/gtest.h>

#include "koszulkit/lkd.hpp"
#include "koszulkit/random.hpp"
#include "koszulkit/resolution.hpp"

using namespace koszulkit;

namespace {

const Window W = kStandardWindow;

/// Over T with f = 1: d(g1) = θ g0, generators at (0,0) and (-2,2).
SemifreeModule theta_cone(std::uint32_t p = 5) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, p);
  auto m = SemifreeModule::free(T, {{0, 0}, {-2, 2}});
  T.accumulate(m.diff[0][1], T.var_monomial(0), 1);
  return m;
}

Window preimage(const Window& w, int a, int b) { return {w.i_lo + a, w.i_hi + a, w.j_lo - b, w.j_hi - b}; }

}  // namespace

TEST(Algebra, ExteriorRankOne) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  EXPECT_EQ(T.monomials({0, 0}).size(), 1u);
  ASSERT_EQ(T.monomials({-1, 2}).size(), 1u);
  EXPECT_EQ(T.odd_degree(), (Bidegree{-1, 2}));
  auto th = T.var_monomial(0);
  EXPECT_FALSE(T.multiply(th, th).has_value());
  EXPECT_TRUE(T.monomials({-2, 4}).empty());
}

TEST(Algebra, SymmetricAndQ) {
  auto S = make_algebra(AlgebraKind::S, 1, 1, 5);
  EXPECT_EQ(S.even_degree(), (Bidegree{2, -2}));
  EXPECT_EQ(S.monomials({6, -6}).size(), 1u);
  EXPECT_EQ(make_algebra(AlgebraKind::S, 2, 2, 5).monomials({2, -2}).size(), 2u);
  auto Q = make_algebra(AlgebraKind::Q, 1, 1, 5);
  EXPECT_FALSE(Q.has_differential());
  EXPECT_EQ(Q.even_count(), 0);
  EXPECT_EQ(Q.odd_count(), 1);
  auto Q21 = make_algebra(AlgebraKind::Q, 2, 1, 5);
  EXPECT_TRUE(Q21.has_differential());
  EXPECT_EQ(Q21.even_degree(), (Bidegree{0, 2}));
  EXPECT_THROW(make_algebra(AlgebraKind::S, 1, 2, 5), std::invalid_argument);
  EXPECT_THROW(make_algebra(AlgebraKind::S, 1, 1, 9), std::invalid_argument);
}

TEST(Algebra, QDifferentialSquaresToZero) {
  auto Q = make_algebra(AlgebraKind::Q, 3, 1, 3);
  for (int i = -3; i <= 0; ++i)
    for (int j = 0; j <= 8; ++j)
      for (auto& m : Q.monomials({i, j})) EXPECT_TRUE(Q.differential(Q.differential(m)).empty());
}

TEST(Validate, FreeAndWrongBidegree) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  EXPECT_TRUE(validate(SemifreeModule::free(T, {{0, 0}})).ok);
  EXPECT_TRUE(validate(theta_cone()).ok);
  auto bad = SemifreeModule::free(T, {{0, 0}, {-2, 4}});
  T.accumulate(bad.diff[0][1], T.var_monomial(0), 1);
  auto r = validate(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.message.find("0"), std::string::npos);
}

TEST(Validate, KoszulComplexIsAModule) {
  for (int f = 0; f <= 3; ++f) {
    auto S = make_algebra(AlgebraKind::S, f, f, 3);
    auto F = functor_F(SemifreeModule::free(S, {{0, 0}}));
    EXPECT_TRUE(check_module_axioms(*F, W).ok) << "f=" << f;
  }
}

TEST(Cohomology, FreeOverT) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  EXPECT_EQ(cohomology(*expand(SemifreeModule::free(T, {{0, 0}})), W), (BigradedDims{{{0, 0}, 1}, {{-1, 2}, 1}}));
}

TEST(Cohomology, KoszulComplexOfS) {
  auto S = make_algebra(AlgebraKind::S, 1, 1, 5);
  EXPECT_EQ(cohomology(*functor_F(SemifreeModule::free(S, {{0, 0}})), W), (BigradedDims{{{0, 0}, 1}}));
}

TEST(Cohomology, ThetaCone) {
  EXPECT_EQ(cohomology(*expand(theta_cone()), W), (BigradedDims{{{0, 0}, 1}, {{-3, 4}, 1}}));
}

TEST(Cone, OfIdentityIsAcyclic) {
  auto rng = trial_rng(3, 0, "cone");
  for (auto kind : {AlgebraKind::S, AlgebraKind::T, AlgebraKind::Q}) {
    auto m = random_semifree(make_algebra(kind, 2, 1, 3), rng);
    auto c = cone(identity_map(m));
    EXPECT_TRUE(validate(c).ok);
    EXPECT_TRUE(cohomology(*expand(c), W).empty());
    EXPECT_TRUE(is_quasi_iso(identity_map(expand(m)), W));
  }
}

TEST(Cone, OfZeroIsSumWithShift) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  auto M = theta_cone();
  auto N = SemifreeModule::free(T, {{1, -2}});
  auto c = cone(zero_map(M, N));
  BigradedDims expected = cohomology(*expand(N), W);
  const auto shifted_m = shift(cohomology(*expand(M), preimage(W, 1, 0)), 1, 0).restricted(W);
  for (auto& [b, d] : shifted_m.entries()) expected.add(b, d);
  EXPECT_EQ(cohomology(*expand(c), W), expected);
}

TEST(Cone, RejectsNonChainMap) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  auto M = theta_cone();
  auto N = SemifreeModule::free(T, {{0, 0}});
  DgMap phi = zero_map(M, N);
  phi.entries[0][0] = scalar_element(T, 1);
  EXPECT_FALSE(check_chain_map(phi).ok);
  EXPECT_THROW(cone(phi), std::invalid_argument);
}

TEST(Cone, CounitOfSIsAcyclic) {
  auto S = make_algebra(AlgebraKind::S, 1, 1, 3);
  EXPECT_TRUE(cohomology(*cone(counit(expand(SemifreeModule::free(S, {{0, 0}})))), W).empty());
}

TEST(QuasiIso, ZeroMapIsNot) {
  auto m = expand(theta_cone());
  EXPECT_FALSE(is_quasi_iso(zero_map(m, m), W));
}

TEST(Resolution, TrivialModuleOverT) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 5);
  auto res = semifree_resolution(trivial_module(T), 3);
  EXPECT_EQ(res.module.gens, (std::vector<Bidegree>{{0, 0}, {-2, 2}, {-4, 4}, {-6, 6}}));
  EXPECT_TRUE(validate(res.module).ok);
  EXPECT_TRUE(check_chain_map(*res.structure_map, W).ok);
  const Window guaranteed{W.i_lo, W.i_hi, W.j_lo, res.acyclic_up_to};
  EXPECT_TRUE(is_quasi_iso(res.structure_map, guaranteed));
}

TEST(Resolution, FreeModuleResolvesToItself) {
  auto T = make_algebra(AlgebraKind::T, 2, 2, 3);
  auto res = semifree_resolution(expand(SemifreeModule::free(T, {{0, 0}})), 2);
  EXPECT_EQ(res.module.rank(), 1u);
  EXPECT_TRUE(is_quasi_iso(res.structure_map, W));
}

TEST(Resolution, RejectsBadInput) {
  auto S = make_algebra(AlgebraKind::S, 1, 1, 3);
  auto T = make_algebra(AlgebraKind::T, 1, 1, 3);
  EXPECT_THROW(semifree_resolution(trivial_module(S), 2), std::invalid_argument);
  EXPECT_THROW(semifree_resolution(trivial_module(T), 0), std::invalid_argument);
}

TEST(Serialization, RoundTripAndDiagnostics) {
  auto rng = trial_rng(5, 0, "json");
  for (auto kind : {AlgebraKind::S, AlgebraKind::T, AlgebraKind::Q}) {
    auto m = random_semifree(make_algebra(kind, 3, 2, 5), rng);
    auto j = to_json(m);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(semifree_from_json(j), m);
    EXPECT_EQ(to_json(semifree_from_json(j)).dump(), j.dump());
  }
  EXPECT_THROW(semifree_from_json(nlohmann::json::parse(R"({"schema":1})")), std::invalid_argument);
  EXPECT_THROW(semifree_from_json(nlohmann::json::parse(R"({"schema":2,"algebra":{},"gens":[],"diff":[]})")),
               std::invalid_argument);
  auto bad = to_json(theta_cone());
  bad["gens"][1] = {-2, 4};
  EXPECT_THROW(semifree_from_json(bad), std::invalid_argument);
}

TEST(RandomModules, ValidAndSeedDeterministic) {
  for (int e = 0; e <= 3; ++e)
    for (int f = 0; f <= e; ++f)
      for (auto kind : {AlgebraKind::S, AlgebraKind::T, AlgebraKind::Q}) {
        auto A = make_algebra(kind, e, f, 3);
        for (int t = 0; t < 5; ++t) {
          auto r1 = trial_rng(9, t, "det");
          auto r2 = trial_rng(9, t, "det");
          auto m = random_semifree(A, r1);
          EXPECT_TRUE(validate(m).ok);
          EXPECT_EQ(m, random_semifree(A, r2));
        }
      }
}

TEST(Shifts, CohomologyCommutesWithShift) {
  auto rng = trial_rng(2, 0, "shift");
  for (auto kind : {AlgebraKind::S, AlgebraKind::T}) {
    auto m = random_semifree(make_algebra(kind, 2, 2, 3), rng);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        auto lhs = cohomology(*expand(shifted(m, a, b)), W);
        auto rhs = shift(cohomology(*expand(m), preimage(W, a, b)), a, b);
        EXPECT_EQ(lhs, rhs) << "a=" << a << " b=" << b;
        EXPECT_EQ(cohomology(*shifted(expand(m), a, b), W), lhs);
      }
  }
}
