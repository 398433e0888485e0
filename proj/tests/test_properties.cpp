#include <gtest/gtest.h>

#include "koszulkit/homdual.hpp"
#include "koszulkit/lkd.hpp"
#include "koszulkit/random.hpp"

using namespace koszulkit;

namespace {

const Window W = kStandardWindow;
const Window Wide{-12, 12, -24, 24};

/// Checks dim H(cone φ) <= dim H(N) + dim H^{i+1}(M) wherever both sides lie inside w.
void expect_cone_bound(const MapPtr& phi, const Window& w, const std::string& what) {
  auto hc = cohomology(*cone(phi), w);
  auto hn = cohomology(*phi->target(), w);
  auto hm = cohomology(*phi->source(), w);
  for (int i = w.i_lo; i < w.i_hi; ++i)
    for (int j = w.j_lo; j <= w.j_hi; ++j)
      EXPECT_LE(hc.at(i, j), hn.at(i, j) + hm.at(i + 1, j)) << what << " at " << i << "," << j;
}

}  // namespace

TEST(Rank, TransposeInvariant) {
  auto rng = trial_rng(1, 0, "rank");
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const auto r = static_cast<std::size_t>(draw(rng, 0, 7)), c = static_cast<std::size_t>(draw(rng, 0, 7));
      Matrix a(r, c, F);
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < c; ++y) a(x, y) = static_cast<Residue>(draw(rng, 0, static_cast<int>(p) - 1));
      EXPECT_EQ(rank(a), rank(a.transpose()));
      EXPECT_EQ(rank(a) + kernel_basis(a).cols(), c);
    }
  }
}

TEST(Euler, ChainLevelEqualsCohomologyOverT) {
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= e; ++f) {
      KoszulContext K{e, f, 5};
      for (int t = 0; t < 8; ++t) {
        auto rng = trial_rng(3, t, "euler");
        auto N = expand(random_semifree(K.T(), rng));
        auto chains = chain_dims(*N, Wide);
        auto h = cohomology(*N, Wide);
        for (int j = Wide.j_lo; j <= Wide.j_hi; ++j) EXPECT_EQ(chains.euler_characteristic(j), h.euler_characteristic(j));
      }
    }
}

TEST(Euler, InvariantUnderQuasiIsomorphism) {
  // the unit N -> FG(N) is a quasi-isomorphism, and FG(N) is not finite
  KoszulContext K{2, 1, 3};
  for (int t = 0; t < 6; ++t) {
    auto rng = trial_rng(4, t, "euler-qi");
    auto N = expand(random_semifree(K.T(), rng));
    auto eta = unit(N);
    ASSERT_TRUE(is_quasi_iso(eta, W));
    auto a = cohomology(*eta->source(), W), b = cohomology(*eta->target(), W);
    for (int j = W.j_lo; j <= W.j_hi; ++j) EXPECT_EQ(a.euler_characteristic(j), b.euler_characteristic(j));
  }
}

TEST(Euler, ConeOfIdentityVanishes) {
  KoszulContext K{2, 2, 5};
  for (int t = 0; t < 6; ++t) {
    auto rng = trial_rng(5, t, "euler-cone");
    auto N = random_semifree(K.T(), rng);
    auto c = chain_dims(*expand(cone(identity_map(N))), Wide);
    for (int j = Wide.j_lo; j <= Wide.j_hi; ++j) EXPECT_EQ(c.euler_characteristic(j), 0);
  }
}

TEST(Cone, LongExactSequenceBound) {
  KoszulContext K{2, 1, 5};
  for (int t = 0; t < 6; ++t) {
    auto rng = trial_rng(6, t, "cone-bound");
    auto M = random_semifree(K.S(), rng);
    auto N = random_semifree(K.T(), rng);
    auto N2 = random_semifree(K.T(), rng);
    expect_cone_bound(counit(expand(M)), W, "counit");
    expect_cone_bound(unit(expand(N)), W, "unit");
    expect_cone_bound(expand(biduality_map(N)), W, "biduality");
    expect_cone_bound(expand(zero_map(N, N2)), W, "zero");
  }
}

TEST(Exactness, FunctorsKillConesOfIdentities) {
  for (int e = 0; e <= 2; ++e)
    for (int f = 0; f <= e; ++f) {
      KoszulContext K{e, f, 3};
      auto rng = trial_rng(7, static_cast<std::uint64_t>(e * 4 + f), "exact");
      auto M = random_semifree(K.S(), rng);
      auto N = random_semifree(K.T(), rng);
      EXPECT_TRUE(cohomology(*functor_F(cone(identity_map(M))), W).empty()) << e << f;
      EXPECT_TRUE(cohomology(*functor_G(cone(identity_map(N))), W).empty()) << e << f;
    }
}

TEST(Dual, LinearDualReflectsTable) {
  KoszulContext K{3, 2, 7};
  for (int t = 0; t < 6; ++t) {
    auto rng = trial_rng(8, t, "linear-dual");
    auto N = expand(random_semifree(K.T(), rng));
    EXPECT_EQ(cohomology(*linear_dual(N), Wide), dual_dims(cohomology(*N, Wide)));
  }
}

TEST(Shift, TableCommutesWithModuleShift) {
  KoszulContext K{2, 2, 3};
  auto rng = trial_rng(9, 0, "shift-prop");
  auto N = random_semifree(K.T(), rng);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      auto lhs = cohomology(*expand(shifted(N, a, b)), W);
      auto rhs = shift(cohomology(*expand(N), Wide), a, b).restricted(W);
      EXPECT_EQ(lhs, rhs) << a << "," << b;
    }
}
