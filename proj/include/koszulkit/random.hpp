#pragma once

// Seeded random semifree modules.
//
// Each generator is placed one differential step, up to a monomial degree, from an earlier one
// so that many differential entries are possible. Differentials are strictly triangular for a weight w that every entry raises
// (w = i+j over S, w = i over R, T, Q, P). Generators are processed by decreasing weight; d(g_l)
// is then a uniformly random solution of the linear system d(d g_l) = 0.

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "semifree.hpp"

namespace koszulkit {

using Rng = std::mt19937_64;

/// Independent stream for trial t of a run seeded with `seed`; `tag` separates suites.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : tag) h = (h ^ c) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

/// Uniform in [lo, hi], identical on every platform (unlike std::uniform_int_distribution).
inline int draw(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = rng.max() - rng.max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

inline int triangular_weight(const AlgebraSpec& a, Bidegree b) {
  return a.kind() == AlgebraKind::S ? b.i + b.j : b.i;
}

struct RandomModuleOptions {
  int max_gens = 4;
  int spread = 2;  // generator bidegrees stay within this many lattice steps of the origin
};

/// Degree of a random monomial with at most `max_even` even factors.
inline Bidegree random_monomial_degree(const AlgebraSpec& a, Rng& rng, int max_even = 2) {
  int t = a.even_count() > 0 ? draw(rng, 0, max_even) : 0;
  int s = draw(rng, 0, a.odd_count());
  return t * a.even_degree() + s * a.odd_degree();
}

/// The first generator is placed near the origin; each further one sits one differential step
/// (up to a monomial degree) away from an earlier generator, so that entries can be nonzero.
inline std::vector<Bidegree> random_generators(const AlgebraSpec& a, Rng& rng, const RandomModuleOptions& opt) {
  const int r = draw(rng, 1, opt.max_gens);
  std::vector<Bidegree> gens{{draw(rng, -1, 1), 2 * draw(rng, -1, 1)}};
  for (int g = 1; g < r; ++g) {
    Bidegree h = gens[static_cast<std::size_t>(draw(rng, 0, g - 1))];
    Bidegree mu = random_monomial_degree(a, rng);
    Bidegree next = draw(rng, 0, 1) ? h + kDifferentialDegree - mu : h - kDifferentialDegree + mu;
    if (std::abs(next.i) > 2 * opt.spread || std::abs(next.j) > 3 * opt.spread) next = gens.front();
    gens.push_back(next);
  }
  return gens;
}

/// A random valid semifree module with the given generator bidegrees.
inline SemifreeModule random_differential(const AlgebraSpec& a, std::vector<Bidegree> gens, Rng& rng) {
  const auto F = a.field();
  SemifreeModule m = SemifreeModule::free(a, std::move(gens));
  const std::size_t n = m.rank();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return triangular_weight(a, m.gens[x]) > triangular_weight(a, m.gens[y]);
  });

  for (std::size_t l : order) {
    // unknowns: one coefficient per (k, monomial of the entry degree)
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    for (std::size_t k = 0; k < n; ++k) {
      if (triangular_weight(a, m.gens[k]) <= triangular_weight(a, m.gens[l])) continue;
      for (auto& mono : a.monomials(m.gens[l] + kDifferentialDegree - m.gens[k])) unknowns.push_back({k, mono});
    }
    if (unknowns.empty()) continue;
    // d(d g_l) as a linear function of the unknowns, coordinates indexed by (generator, monomial)
    std::map<std::pair<std::size_t, Monomial>, std::size_t> coord;
    std::vector<std::vector<std::pair<std::size_t, Residue>>> columns;
    for (auto& [k, mono] : unknowns) {
      FreeElement x(n);
      a.accumulate(x[k], mono, 1);
      auto dx = apply_differential(m, x);
      std::vector<std::pair<std::size_t, Residue>> col;
      for (std::size_t r = 0; r < n; ++r)
        for (auto& [mm, c] : dx[r]) {
          auto [it, _] = coord.try_emplace({r, mm}, coord.size());
          col.push_back({it->second, c});
        }
      columns.push_back(std::move(col));
    }
    Matrix sys(coord.size(), unknowns.size(), F);
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (auto& [r, v] : columns[c]) sys.add_to(r, c, v);
    Matrix ker = kernel_basis(sys);
    std::vector<Residue> pick(unknowns.size(), 0);
    for (std::size_t t = 0; t < ker.cols(); ++t) {
      Residue w = static_cast<Residue>(draw(rng, 0, static_cast<int>(a.p()) - 1));
      for (std::size_t u = 0; u < unknowns.size(); ++u) pick[u] = F.add(pick[u], F.mul(w, ker(u, t)));
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      a.accumulate(m.diff[unknowns[u].first][l], unknowns[u].second, pick[u]);
  }
  return m;
}

inline SemifreeModule random_semifree(const AlgebraSpec& a, Rng& rng, const RandomModuleOptions& opt = {}) {
  return random_differential(a, random_generators(a, rng, opt), rng);
}

}  // namespace koszulkit
