#include <gtest/gtest.h>

#include <algorithm>

#include "koszulkit/lkd.hpp"
#include "koszulkit/random.hpp"

using namespace koszulkit;

namespace {

const Window W = kStandardWindow;

Window preimage(const Window& w, int a, int b) { return {w.i_lo + a, w.i_hi + a, w.j_lo - b, w.j_hi - b}; }

SemifreeModule free_rank_one(AlgebraKind kind, int f, std::uint32_t p = 3) {
  return SemifreeModule::free(make_algebra(kind, f, f, p), {{0, 0}});
}

/// Relabels the variables of S along a permutation of a basis of F.
SemifreeModule permute_variables(const SemifreeModule& m, const std::vector<int>& perm) {
  SemifreeModule out = SemifreeModule::free(m.algebra, m.gens);
  for (std::size_t k = 0; k < m.rank(); ++k)
    for (std::size_t l = 0; l < m.rank(); ++l)
      for (auto& [mono, c] : m.diff[k][l]) {
        Monomial q = mono;
        for (std::size_t v = 0; v < perm.size(); ++v) q.exps[perm[v]] = mono.exps[v];
        m.algebra.accumulate(out.diff[k][l], q, c);
      }
  return out;
}

}  // namespace

TEST(Functors, KappaOfSIsTrivial) {
  for (int f = 0; f <= 3; ++f)
    EXPECT_EQ(cohomology(*kappa(expand(free_rank_one(AlgebraKind::S, f))), W), (BigradedDims{{{0, 0}, 1}})) << "f=" << f;
}

TEST(Functors, KappaOfTrivialIsExteriorDual) {
  // F(k) = T* ⊗ k with zero differential: one class per subset of a basis of F
  auto S = make_algebra(AlgebraKind::S, 2, 2, 3);
  auto t = cohomology(*functor_F(trivial_module(S)), W);
  EXPECT_EQ(t, (BigradedDims{{{0, 0}, 1}, {{1, -2}, 2}, {{2, -4}, 1}}));
}

TEST(Functors, GOfTrivialIsS) {
  for (int f = 0; f <= 3; ++f) {
    auto T = make_algebra(AlgebraKind::T, f, f, 5);
    EXPECT_EQ(cohomology(*functor_G(trivial_module(T)), W), cohomology(*expand(free_rank_one(AlgebraKind::S, f, 5)), W));
  }
}

TEST(Functors, GOfTSitsInTopDegree) {
  for (int f = 0; f <= 3; ++f)
    EXPECT_EQ(cohomology(*functor_G(expand(free_rank_one(AlgebraKind::T, f))), W), (BigradedDims{{{-f, 2 * f}, 1}}));
}

TEST(Functors, DegenerateDimensionZero) {
  auto rng = trial_rng(4, 0, "f0");
  for (int e = 0; e <= 2; ++e) {
    auto S = make_algebra(AlgebraKind::S, e, 0, 3);
    auto T = make_algebra(AlgebraKind::T, e, 0, 3);
    auto m = random_semifree(S, rng);
    auto n = random_semifree(T, rng);
    EXPECT_EQ(cohomology(*functor_F(m), W), cohomology(*expand(m), W));
    EXPECT_EQ(cohomology(*functor_G(n), W), cohomology(*expand(n), W));
  }
}

TEST(Functors, WrongAlgebraRejected) {
  EXPECT_THROW(functor_F(free_rank_one(AlgebraKind::T, 1)), std::invalid_argument);
  EXPECT_THROW(functor_G(free_rank_one(AlgebraKind::S, 1)), std::invalid_argument);
}

TEST(Functors, OutputsAreModules) {
  auto rng = trial_rng(6, 0, "axioms");
  for (int f = 0; f <= 3; ++f) {
    auto m = random_semifree(make_algebra(AlgebraKind::S, f, f, 5), rng);
    auto n = random_semifree(make_algebra(AlgebraKind::T, f, f, 5), rng);
    EXPECT_TRUE(check_module_axioms(*functor_F(m), W).ok);
    EXPECT_TRUE(check_module_axioms(*functor_G(n), W).ok);
  }
}

TEST(Adjunction, UnitAndCounitOnSmallModules) {
  for (int f = 0; f <= 3; ++f) {
    auto S = make_algebra(AlgebraKind::S, f, f, 3);
    auto T = make_algebra(AlgebraKind::T, f, f, 3);
    for (const ModulePtr& m : std::vector<ModulePtr>{expand(free_rank_one(AlgebraKind::S, f)), trivial_module(S)}) {
      auto c = counit(m);
      EXPECT_TRUE(check_chain_map(*c, W).ok);
      EXPECT_TRUE(is_quasi_iso(c, W));
    }
    for (const ModulePtr& n : std::vector<ModulePtr>{expand(free_rank_one(AlgebraKind::T, f)), trivial_module(T)}) {
      auto u = unit(n);
      EXPECT_TRUE(check_chain_map(*u, W).ok);
      EXPECT_TRUE(is_quasi_iso(u, W));
    }
  }
}

TEST(Adjunction, RandomRoundTrips) {
  for (int e = 0; e <= 3; ++e)
    for (int f = 0; f <= e; ++f)
      for (int t = 0; t < 4; ++t) {
        auto rng = trial_rng(11, t, "lkd");
        KoszulContext K{e, f, 5};
        auto m = expand(random_semifree(K.S(), rng));
        auto n = expand(random_semifree(K.T(), rng));
        EXPECT_TRUE(check_chain_map(*counit(m), W).ok);
        EXPECT_TRUE(check_chain_map(*unit(n), W).ok);
        EXPECT_TRUE(is_quasi_iso(counit(m), W)) << e << f << t;
        EXPECT_TRUE(is_quasi_iso(unit(n), W)) << e << f << t;
      }
}

TEST(Regrade, ExampleAndRoundTrip) {
  auto S = make_algebra(AlgebraKind::S, 1, 1, 3);
  auto m = SemifreeModule::free(S, {{2, -2}});
  auto r = regrade_xi(m);
  EXPECT_EQ(r.algebra.kind(), AlgebraKind::R);
  EXPECT_EQ(r.gens, (std::vector<Bidegree>{{0, -2}}));
  auto rng = trial_rng(1, 0, "xi");
  for (int f = 0; f <= 3; ++f) {
    auto x = random_semifree(make_algebra(AlgebraKind::S, f, f, 3), rng);
    EXPECT_TRUE(validate(regrade_xi(x)).ok);
    EXPECT_EQ(regrade_xi_inverse(regrade_xi(x)), x);
  }
  EXPECT_THROW(regrade_xi(free_rank_one(AlgebraKind::T, 1)), std::invalid_argument);
}

TEST(Regrade, ShiftIdentity) {
  auto rng = trial_rng(2, 0, "xi-shift");
  auto m = random_semifree(make_algebra(AlgebraKind::S, 2, 2, 3), rng);
  for (int s = -2; s <= 2; ++s) EXPECT_EQ(regrade_xi(shifted(m, 0, s)), shifted(regrade_xi(m), -s, s));
}

TEST(Kappa, CommutesWithInternalShift) {
  auto rng = trial_rng(3, 0, "kappa-shift");
  auto m = random_semifree(make_algebra(AlgebraKind::S, 2, 2, 3), rng);
  for (int s = -2; s <= 2; ++s)
    EXPECT_EQ(cohomology(*kappa(expand(shifted(m, 0, s))), W), shift(cohomology(*kappa(expand(m)), preimage(W, 0, s)), 0, s));
}

TEST(Kappa, Additive) {
  auto rng = trial_rng(4, 0, "kappa-sum");
  auto S = make_algebra(AlgebraKind::S, 2, 1, 3);
  auto a = random_semifree(S, rng), b = random_semifree(S, rng);
  BigradedDims sum = cohomology(*kappa(expand(a)), W);
  const auto tb = cohomology(*kappa(expand(b)), W);
  for (auto& [deg, d] : tb.entries()) sum.add(deg, d);
  EXPECT_EQ(cohomology(*kappa(expand(direct_sum(a, b))), W), sum);
}

TEST(Kappa, InverseOfTrivialIsS) {
  auto T = make_algebra(AlgebraKind::T, 1, 1, 3);
  EXPECT_EQ(cohomology(*kappa_inv(trivial_module(T)), W), cohomology(*expand(free_rank_one(AlgebraKind::S, 1)), W));
}

TEST(Kappa, IndependentOfBasisOrder) {
  auto rng = trial_rng(5, 0, "perm");
  for (int f = 2; f <= 3; ++f) {
    auto m = random_semifree(make_algebra(AlgebraKind::S, f, f, 5), rng);
    std::vector<int> perm(f);
    for (int k = 0; k < f; ++k) perm[k] = f - 1 - k;
    auto pm = permute_variables(m, perm);
    ASSERT_TRUE(validate(pm).ok);
    EXPECT_EQ(cohomology(*kappa(expand(pm)), W), cohomology(*kappa(expand(m)), W));
    EXPECT_TRUE(is_quasi_iso(counit(expand(pm)), W));
  }
}

TEST(Coinduced, TopDegreeDualOfT) {
  // T ⊗ L^{-1} against Coind_T(k)[n]<2n>: the dual table of T shifted by (n, 2n) is T again
  for (int f = 0; f <= 3; ++f) {
    auto t = cohomology(*expand(free_rank_one(AlgebraKind::T, f)), W);
    EXPECT_EQ(shift(dual_dims(t), f, 2 * f), t);
  }
}

TEST(ComplementSign, SmallCases) {
  EXPECT_EQ(complement_sign(0b11, 2), 1);
  EXPECT_EQ(complement_sign(0b00, 2), 1);
  EXPECT_EQ(complement_sign(0b10, 2), -1);
  EXPECT_EQ(complement_sign(0b01, 2), 1);
}
