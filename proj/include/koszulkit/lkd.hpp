#pragma once

// Linear Koszul duality over a point.
//
//   F(M) = T* ⊗ M   for M over S, semifree over T on φ_top ⊗ (basis of M)
//   G(N) = S ⊗ N    for N over T, semifree over S on the basis of N
//
// T* = Hom_k(T, k) is free of rank one over T on φ_top, the functional dual to θ_0⋯θ_{n-1},
// which sits in bidegree (n, -2n). Hence F(M) has one generator gen_m in deg m + (n,-2n) per
// basis vector m of M, with
//   d gen_m = (-1)^n gen_{dm} + Σ_k θ_k · gen_{x_k m}
// and G(N) has one generator per basis vector n of N with
//   d gen_n = gen_{dn} − Σ_k x_k · gen_{θ_k n}.

#include <memory>
#include <stdexcept>
#include <vector>

#include "semifree.hpp"

namespace koszulkit {

/// Dimensions and the split basis of F ⊂ E (the first f basis vectors of E span F).
struct KoszulContext {
  int e = 0;
  int f = 0;
  std::uint32_t p = 3;

  int n() const { return f; }
  int m() const { return e; }
  AlgebraSpec S() const { return make_algebra(AlgebraKind::S, e, f, p); }
  AlgebraSpec R() const { return make_algebra(AlgebraKind::R, e, f, p); }
  AlgebraSpec T() const { return make_algebra(AlgebraKind::T, e, f, p); }
  AlgebraSpec Q() const { return make_algebra(AlgebraKind::Q, e, f, p); }
  AlgebraSpec P() const { return make_algebra(AlgebraKind::P, e, f, p); }

  static KoszulContext of(const AlgebraSpec& a) { return {a.e(), a.f(), a.p()}; }
};

/// Bidegree of φ_top: T* ≅ T[-n]<-2n>.
inline Bidegree top_functional_degree(int n) { return {n, -2 * n}; }

class FunctorFSource final : public GeneratorSource {
 public:
  explicit FunctorFSource(ModulePtr m)
      : m_(std::move(m)), t_(KoszulContext::of(m_->algebra()).T()), shift_(top_functional_degree(t_.f())) {
    if (m_->algebra().kind() != AlgebraKind::S) throw std::invalid_argument("functor F expects a module over S");
  }

  const ModulePtr& module() const { return m_; }
  Bidegree shift() const { return shift_; }

  const AlgebraSpec& algebra() const override { return t_; }
  std::size_t count(Bidegree b) const override { return m_->dim(b - shift_); }
  Box box() const override { return m_->support().translated(shift_); }

  std::vector<GenTerm> boundary(const GenRef& g) const override {
    const auto F = t_.field();
    const Bidegree c = g.deg - shift_;
    std::vector<GenTerm> out;
    const Residue s = F.sign(t_.f());
    const auto& d = m_->differential(c);
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (Residue v = d(r, g.index)) out.push_back({t_.one(), F.mul(s, v), {g.deg + kDifferentialDegree, r}});
    const Bidegree up = c + m_->algebra().even_degree() + shift_;
    for (int k = 0; k < t_.f(); ++k) {
      const auto& x = m_->action(k, c);
      for (std::size_t r = 0; r < x.rows(); ++r)
        if (Residue v = x(r, g.index)) out.push_back({t_.var_monomial(k), v, {up, r}});
    }
    return out;
  }

 private:
  ModulePtr m_;
  AlgebraSpec t_;
  Bidegree shift_;
};

class FunctorGSource final : public GeneratorSource {
 public:
  explicit FunctorGSource(ModulePtr n) : n_(std::move(n)), s_(KoszulContext::of(n_->algebra()).S()) {
    if (n_->algebra().kind() != AlgebraKind::T) throw std::invalid_argument("functor G expects a module over T");
  }

  const ModulePtr& module() const { return n_; }

  const AlgebraSpec& algebra() const override { return s_; }
  std::size_t count(Bidegree b) const override { return n_->dim(b); }
  Box box() const override { return n_->support(); }

  std::vector<GenTerm> boundary(const GenRef& g) const override {
    const auto F = s_.field();
    std::vector<GenTerm> out;
    const auto& d = n_->differential(g.deg);
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (Residue v = d(r, g.index)) out.push_back({s_.one(), v, {g.deg + kDifferentialDegree, r}});
    const Bidegree down = g.deg + n_->algebra().odd_degree();
    for (int k = 0; k < s_.f(); ++k) {
      const auto& th = n_->action(k, g.deg);
      for (std::size_t r = 0; r < th.rows(); ++r)
        if (Residue v = th(r, g.index)) out.push_back({s_.var_monomial(k), F.neg(v), {down, r}});
    }
    return out;
  }

 private:
  ModulePtr n_;
  AlgebraSpec s_;
};

inline ExpansionPtr functor_F(const ModulePtr& m) { return expand(std::make_shared<FunctorFSource>(m)); }
inline ExpansionPtr functor_G(const ModulePtr& n) { return expand(std::make_shared<FunctorGSource>(n)); }
inline ExpansionPtr functor_F(const SemifreeModule& m) { return functor_F(expand(m)); }
inline ExpansionPtr functor_G(const SemifreeModule& n) { return functor_G(expand(n)); }

inline ExpansionPtr kappa(const ModulePtr& m) { return functor_F(m); }
inline ExpansionPtr kappa_inv(const ModulePtr& n) { return functor_G(n); }

/// Counit G(F(M)) → M:  s ⊗ φ_I ⊗ m ↦ [I = ∅] s·m.
/// A generator of G(F(M)) is a basis vector θ_J·gen_m of F(M); φ_∅ = θ_top φ_top.
inline MapPtr counit(const ModulePtr& m) {
  auto fm = functor_F(m);
  auto gfm = functor_G(fm);
  const int n = m->algebra().f();
  const std::uint32_t full = n == 0 ? 0u : (1u << n) - 1;
  return std::make_shared<SemifreeInducedMap>(gfm, m, [fm, m, full](const GenRef& g) {
    std::vector<Residue> v(m->dim(g.deg), 0);
    const auto& [mono, gen] = fm->basis(g.deg)[g.index];
    if (mono.odd == full) v[gen.index] = 1;
    return v;
  });
}

/// Sign σ with θ_{F∖I} φ_top = σ φ_I, factors applied highest index first.
inline int complement_sign(std::uint32_t I, int n) {
  int flips = 0;
  for (int k = 0; k < n; ++k)
    if (!(I >> k & 1u)) flips += std::popcount(I >> (k + 1));
  return (flips & 1) ? -1 : 1;
}

/// Unit N → F(G(N)):  n ↦ Σ_I φ_I ⊗ (1 ⊗ θ_I n).
inline MapPtr unit(const ModulePtr& nmod) {
  auto gn = functor_G(nmod);
  auto fgn = functor_F(gn);
  const auto& T = nmod->algebra();
  const auto F = T.field();
  const int n = T.f();
  const Bidegree top = top_functional_degree(n);
  const AlgebraSpec S = KoszulContext::of(T).S();
  return std::make_shared<FunctionMap>(nmod, fgn, [=](Bidegree b) {
    Matrix out(fgn->dim(b), nmod->dim(b), F);
    for (std::uint32_t I = 0; I < (1u << n); ++I) {
      Monomial thI = T.one();
      thI.odd = I;
      Monomial thK = T.one();
      thK.odd = ((1u << n) - 1) & ~I;
      const Bidegree c = b + T.degree(thI);
      const Residue sigma = complement_sign(I, n) < 0 ? F.neg(1) : 1;
      for (std::size_t col = 0; col < nmod->dim(b); ++col) {
        std::vector<Residue> e(nmod->dim(b), 0);
        e[col] = 1;
        auto v = apply_monomial(*nmod, thI, b, std::move(e));
        for (std::size_t r = 0; r < v.size(); ++r) {
          if (!v[r]) continue;
          auto gi = gn->index_of(c, S.one(), GenRef{c, r});
          if (!gi) throw std::logic_error("unit: missing generator of G(N)");
          auto idx = fgn->index_of(b, thK, GenRef{c + top, *gi});
          if (!idx) throw std::logic_error("unit: missing basis element of F(G(N))");
          out.add_to(*idx, col, F.mul(sigma, v[r]));
        }
      }
    }
    return out;
  });
}

/// ξ: S-modules to R-modules, ξ(M)^i_j = M^{i-j}_j. Generators move (i,j) ↦ (i+j, j).
inline SemifreeModule regrade_xi(const SemifreeModule& m) {
  if (m.algebra.kind() != AlgebraKind::S) throw std::invalid_argument("regrade_xi expects a module over S");
  SemifreeModule r = m;
  r.algebra = KoszulContext::of(m.algebra).R();
  for (auto& g : r.gens) g = {g.i + g.j, g.j};
  return r;
}

inline SemifreeModule regrade_xi_inverse(const SemifreeModule& m) {
  if (m.algebra.kind() != AlgebraKind::R) throw std::invalid_argument("regrade_xi_inverse expects a module over R");
  SemifreeModule s = m;
  s.algebra = KoszulContext::of(m.algebra).S();
  for (auto& g : s.gens) g = {g.i - g.j, g.j};
  return s;
}

}  // namespace koszulkit
