#pragma once

// Homological dualities D_S and D_T and their compatibility with κ.
//
// Derived objects are compared through their bigraded cohomology tables on a window; where a
// canonical map exists (biduality) it is also checked to be a quasi-isomorphism.

#include <optional>
#include <string>

#include "lkd.hpp"
#include "semifree.hpp"

namespace koszulkit {

struct DualityReport {
  std::string id;
  Window window;
  BigradedDims lhs;
  BigradedDims rhs;
  std::optional<Bidegree> mismatch;

  bool equal() const { return !mismatch; }

  static DualityReport compare(std::string id, const Window& w, BigradedDims lhs, BigradedDims rhs) {
    DualityReport r{std::move(id), w, lhs.restricted(w), rhs.restricted(w), std::nullopt};
    r.mismatch = r.lhs.first_difference(r.rhs);
    return r;
  }
};

inline nlohmann::json to_json(const DualityReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["window"] = r.window.str();
  j["verdict"] = r.equal() ? "equal" : "mismatch";
  if (r.mismatch) j["first_mismatch"] = {r.mismatch->i, r.mismatch->j};
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["certification"] = "cohomology tables";
  return j;
}

inline SemifreeModule dualize_S(const SemifreeModule& m) {
  if (m.algebra.kind() != AlgebraKind::S) throw std::invalid_argument("dualize_S expects a module over S");
  return dualize(m);
}

inline SemifreeModule dualize_T_res(const SemifreeModule& m) {
  if (m.algebra.kind() != AlgebraKind::T) throw std::invalid_argument("dualize_T_res expects a module over T");
  return dualize(m);
}

/// Hom_T(N, T) for a semifree module with finitely many generators per bidegree.
inline ExpansionPtr dualize_T_res(const ExpansionPtr& n) {
  if (n->algebra().kind() != AlgebraKind::T) throw std::invalid_argument("dualize_T_res expects a module over T");
  return expand(std::make_shared<DualSource>(n->source()));
}

/// Hom_k(M, k) ⊗ L [n]<2n> for a finite-dimensional T-module.
inline ModulePtr dualize_T_formula(const ModulePtr& m) {
  if (m->algebra().kind() != AlgebraKind::T) throw std::invalid_argument("dualize_T_formula expects a module over T");
  if (!m->support().bounded()) throw std::invalid_argument("dualize_T_formula needs a finite-dimensional module");
  const int n = m->algebra().f();
  return shifted(linear_dual(m), n, 2 * n);
}

/// Evaluation M → Hom(Hom(M, A), A), g ↦ (-1)^{i_g} g^∨∨ on generators.
inline DgMap biduality_map(const SemifreeModule& m) {
  auto dd = dualize(dualize(m));
  DgMap phi = zero_map(m, dd);
  const auto F = m.algebra.field();
  for (std::size_t k = 0; k < m.rank(); ++k)
    phi.entries[k][k] = scalar_element(m.algebra, m.algebra.is_even() ? 1 : F.sign(m.gens[k].i));
  return phi;
}

inline DualityReport oracle_compare_T(const SemifreeModule& m, const Window& w, std::string id = "oracle") {
  auto lhs = cohomology(*expand(dualize_T_res(m)), w);
  auto rhs = cohomology(*dualize_T_formula(expand(m)), w);
  return DualityReport::compare(std::move(id), w, std::move(lhs), std::move(rhs));
}

/// D_T(κ M) against κ(D_S M) ⊗ L<2n>[n].
inline DualityReport check_compat(const SemifreeModule& m, const Window& w, std::string id = "compat") {
  if (m.algebra.kind() != AlgebraKind::S) throw std::invalid_argument("check_compat expects a module over S");
  const int n = m.algebra.f();
  auto lhs = cohomology(*dualize_T_res(kappa(expand(m))), w);
  // the shifted side is read on the preimage of the window
  Window pre{w.i_lo + n, w.i_hi + n, w.j_lo - 2 * n, w.j_hi - 2 * n};
  auto rhs = shift(cohomology(*kappa(expand(dualize_S(m))), pre), n, 2 * n);
  return DualityReport::compare(std::move(id), w, std::move(lhs), std::move(rhs));
}

}  // namespace koszulkit
