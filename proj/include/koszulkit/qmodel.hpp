#pragma once

// The Koszul model Q = Sym(E/F) ⊗ Λ(E) of the derived intersection, its comparison with
// T = Λ(F), the pushforward to P = Sym(E/F) and the duality D_Q.

#include <map>
#include <vector>

#include "homdual.hpp"
#include "lkd.hpp"
#include "semifree.hpp"

namespace koszulkit {

/// Variable map T → Q along Λ(F) ⊂ Λ(E).
inline std::vector<int> t_to_q_variables(const AlgebraSpec& q) {
  std::vector<int> vars;
  for (int k = 0; k < q.f(); ++k) vars.push_back(q.even_count() + k);
  return vars;
}

/// Variable map P → Q along Sym(E/F) ⊂ Q.
inline std::vector<int> p_to_q_variables(const AlgebraSpec& q) {
  std::vector<int> vars;
  for (int k = 0; k < q.even_count(); ++k) vars.push_back(k);
  return vars;
}

inline Monomial t_monomial_in_q(const AlgebraSpec& q, const Monomial& t) {
  Monomial m = q.one();
  m.odd = t.odd;
  return m;
}

/// Q ⊗_T N; requires N over T for the same (e, f, p) as the target Q.
inline SemifreeModule extend_to_Q(const SemifreeModule& n, int e) {
  if (n.algebra.kind() != AlgebraKind::T) throw std::invalid_argument("extend_to_Q expects a module over T");
  const auto q = make_algebra(AlgebraKind::Q, e, n.algebra.f(), n.algebra.p());
  SemifreeModule out = SemifreeModule::free(q, n.gens);
  for (std::size_t k = 0; k < n.rank(); ++k)
    for (std::size_t l = 0; l < n.rank(); ++l)
      for (auto& [mono, c] : n.diff[k][l]) q.accumulate(out.diff[k][l], t_monomial_in_q(q, mono), c);
  return out;
}

/// Restriction of a Q-module along T ⊂ Q.
inline ModulePtr restrict_to_T(const ModulePtr& m) {
  const auto& q = m->algebra();
  if (q.kind() != AlgebraKind::Q) throw std::invalid_argument("restrict_to_T expects a module over Q");
  return std::make_shared<RestrictedModule>(m, KoszulContext::of(q).T(), t_to_q_variables(q));
}

/// N → res(Q ⊗_T N), g ↦ 1 ⊗ g.
inline MapPtr extension_comparison(const SemifreeModule& n, int e) {
  auto src = expand(n);
  auto ext = expand(extend_to_Q(n, e));
  auto res = restrict_to_T(ext);
  const auto one = ext->algebra().one();
  return std::make_shared<SemifreeInducedMap>(src, res, [ext, one](const GenRef& g) {
    std::vector<Residue> v(ext->dim(g.deg), 0);
    auto idx = ext->index_of(g.deg, one, g);
    if (!idx) throw std::logic_error("extension comparison: generator missing");
    v[*idx] = 1;
    return v;
  });
}

/// Rp_*: restriction along P = Sym(E/F) ⊂ Q.
inline ModulePtr pushforward_p(const ModulePtr& m) {
  const auto& q = m->algebra();
  if (q.kind() != AlgebraKind::Q) throw std::invalid_argument("pushforward_p expects a module over Q");
  return std::make_shared<RestrictedModule>(m, KoszulContext::of(q).P(), p_to_q_variables(q));
}

/// Rp_* M as a semifree P-module on the generators θ_U·g, U ⊆ {0..e-1}.
inline SemifreeModule pushforward_semifree(const SemifreeModule& m) {
  const auto& q = m.algebra;
  if (q.kind() != AlgebraKind::Q) throw std::invalid_argument("pushforward_semifree expects a module over Q");
  const auto P = KoszulContext::of(q).P();
  const auto F = q.field();
  const std::uint32_t subsets = 1u << q.odd_count();
  auto id = [&](std::uint32_t U, std::size_t g) { return g * subsets + U; };

  std::vector<Bidegree> gens;
  for (std::size_t g = 0; g < m.rank(); ++g)
    for (std::uint32_t U = 0; U < subsets; ++U) gens.push_back(m.gens[g] + std::popcount(U) * q.odd_degree());
  SemifreeModule out = SemifreeModule::free(P, gens);

  auto deposit = [&](std::size_t col, const AlgElement& x, std::size_t g) {
    for (auto& [mono, c] : x) {
      Monomial pm = P.one();
      pm.exps = mono.exps;
      P.accumulate(out.diff[id(mono.odd, g)][col], pm, c);
    }
  };
  for (std::size_t l = 0; l < m.rank(); ++l)
    for (std::uint32_t U = 0; U < subsets; ++U) {
      Monomial th = q.one();
      th.odd = U;
      AlgElement thU;
      q.accumulate(thU, th, 1);
      const std::size_t col = id(U, l);
      deposit(col, q.differential(thU), l);
      const Residue s = F.sign(std::popcount(U));
      for (std::size_t k = 0; k < m.rank(); ++k) {
        if (m.diff[k][l].empty()) continue;
        AlgElement prod = q.multiply(thU, m.diff[k][l]);
        for (auto& [mono, c] : prod) c = F.mul(c, s);
        deposit(col, prod, k);
      }
    }
  return out;
}

inline SemifreeModule dualize_Q(const SemifreeModule& m) {
  if (m.algebra.kind() != AlgebraKind::Q) throw std::invalid_argument("dualize_Q expects a module over Q");
  return dualize(m);
}

/// Rp_* D_Q(M) against D_{F⊥}(Rp_* M) ⊗ p*K [m]<2m>.
inline DualityReport check_fbot(const SemifreeModule& m, const Window& w, std::string id = "fbot") {
  if (m.algebra.kind() != AlgebraKind::Q) throw std::invalid_argument("check_fbot expects a module over Q");
  const int e = m.algebra.e();
  auto lhs = cohomology(*pushforward_p(expand(dualize_Q(m))), w);
  Window pre{w.i_lo + e, w.i_hi + e, w.j_lo - 2 * e, w.j_hi - 2 * e};
  auto rhs = shift(cohomology(*expand(dualize(pushforward_semifree(m))), pre), e, 2 * e);
  return DualityReport::compare(std::move(id), w, std::move(lhs), std::move(rhs));
}

}  // namespace koszulkit
