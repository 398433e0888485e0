#pragma once

// Dg-modules viewed bidegree by bidegree: every module in the library exposes the finite
// dimension of each bidegree, the differential (bidegree (1,0)) and the action of each
// algebra generator as dense matrices. Matrices are computed on demand and memoized.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "bigraded.hpp"
#include "modp.hpp"

namespace koszulkit {

class DgModule {
 public:
  explicit DgModule(AlgebraSpec algebra) : algebra_(std::move(algebra)) {}
  virtual ~DgModule() = default;
  DgModule(const DgModule&) = delete;
  DgModule& operator=(const DgModule&) = delete;

  const AlgebraSpec& algebra() const { return algebra_; }
  PrimeField field() const { return algebra_.field(); }

  /// Box outside of which the module vanishes.
  const Box& support() const {
    std::lock_guard lock(mu_);
    if (!support_) support_ = compute_support();
    return *support_;
  }

  std::size_t dim(Bidegree b) const {
    if (!support().contains(b)) return 0;
    std::lock_guard lock(mu_);
    if (auto it = dims_.find(b); it != dims_.end()) return it->second;
    auto d = compute_dim(b);
    dims_.emplace(b, d);
    return d;
  }

  /// Differential M_b -> M_{b+(1,0)}, shape dim(b+(1,0)) x dim(b).
  const Matrix& differential(Bidegree b) const {
    std::lock_guard lock(mu_);
    if (auto it = diffs_.find(b); it != diffs_.end()) return it->second;
    Matrix m = (dim(b) == 0 || dim(b + kDifferentialDegree) == 0)
                   ? Matrix(dim(b + kDifferentialDegree), dim(b), field())
                   : compute_differential(b);
    return diffs_.emplace(b, std::move(m)).first->second;
  }

  /// Action of generator `var`: M_b -> M_{b + deg(var)}.
  const Matrix& action(int var, Bidegree b) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(var, b);
    if (auto it = actions_.find(key); it != actions_.end()) return it->second;
    Bidegree to = b + algebra_.var_degree(var);
    Matrix m = (dim(b) == 0 || dim(to) == 0) ? Matrix(dim(to), dim(b), field()) : compute_action(var, b);
    return actions_.emplace(key, std::move(m)).first->second;
  }

 protected:
  virtual Box compute_support() const = 0;
  virtual std::size_t compute_dim(Bidegree b) const = 0;
  virtual Matrix compute_differential(Bidegree b) const = 0;
  virtual Matrix compute_action(int var, Bidegree b) const = 0;

 private:
  AlgebraSpec algebra_;
  mutable std::recursive_mutex mu_;
  mutable std::optional<Box> support_;
  mutable std::map<Bidegree, std::size_t> dims_;
  mutable std::map<Bidegree, Matrix> diffs_;
  mutable std::map<std::pair<int, Bidegree>, Matrix> actions_;
};

using ModulePtr = std::shared_ptr<const DgModule>;

/// Degree-(0,0) map of dg-modules, bidegree by bidegree.
class DgMapView {
 public:
  DgMapView(ModulePtr source, ModulePtr target) : source_(std::move(source)), target_(std::move(target)) {}
  virtual ~DgMapView() = default;

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }

  /// Shape target.dim(b) x source.dim(b).
  const Matrix& at(Bidegree b) const {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(b); it != cache_.end()) return it->second;
    std::size_t r = target_->dim(b), c = source_->dim(b);
    Matrix m = (r == 0 || c == 0) ? Matrix(r, c, target_->field()) : compute(b);
    return cache_.emplace(b, std::move(m)).first->second;
  }

 protected:
  virtual Matrix compute(Bidegree b) const = 0;

 private:
  ModulePtr source_, target_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Bidegree, Matrix> cache_;
};

using MapPtr = std::shared_ptr<const DgMapView>;

class FunctionMap final : public DgMapView {
 public:
  FunctionMap(ModulePtr s, ModulePtr t, std::function<Matrix(Bidegree)> fn)
      : DgMapView(std::move(s), std::move(t)), fn_(std::move(fn)) {}

 protected:
  Matrix compute(Bidegree b) const override { return fn_(b); }

 private:
  std::function<Matrix(Bidegree)> fn_;
};

inline MapPtr identity_map(const ModulePtr& m) {
  return std::make_shared<FunctionMap>(m, m, [m](Bidegree b) { return Matrix::identity(m->dim(b), m->field()); });
}

inline MapPtr zero_map(const ModulePtr& s, const ModulePtr& t) {
  return std::make_shared<FunctionMap>(s, t, [s, t](Bidegree b) { return Matrix(t->dim(b), s->dim(b), t->field()); });
}

inline MapPtr compose(const MapPtr& second, const MapPtr& first) {
  return std::make_shared<FunctionMap>(first->source(), second->target(),
                                       [first, second](Bidegree b) { return second->at(b) * first->at(b); });
}

// ---------------------------------------------------------------------------------------------
// Cohomology

inline std::size_t cohomology_dim(const DgModule& m, Bidegree b) {
  std::size_t n = m.dim(b);
  if (n == 0) return 0;
  std::size_t out_rank = rank(m.differential(b));
  std::size_t in_rank = rank(m.differential(b - kDifferentialDegree));
  return n - out_rank - in_rank;
}

inline BigradedDims cohomology(const DgModule& m, const Window& w) {
  BigradedDims out;
  w.for_each([&](Bidegree b) {
    if (m.support().contains(b)) out.set(b, cohomology_dim(m, b));
  });
  return out;
}

inline BigradedDims chain_dims(const DgModule& m, const Window& w) {
  BigradedDims out;
  w.for_each([&](Bidegree b) { out.set(b, m.dim(b)); });
  return out;
}

// ---------------------------------------------------------------------------------------------
// Derived constructions

/// M[a]<b>: pure relabelling of bidegrees, the element of M in (i,j) sits in (i-a, j+b).
class ShiftedModule final : public DgModule {
 public:
  ShiftedModule(ModulePtr m, int a, int b) : DgModule(m->algebra()), m_(std::move(m)), a_(a), b_(b) {}

 protected:
  Box compute_support() const override { return m_->support().translated({-a_, b_}); }
  std::size_t compute_dim(Bidegree c) const override { return m_->dim(orig(c)); }
  Matrix compute_differential(Bidegree c) const override { return m_->differential(orig(c)); }
  Matrix compute_action(int v, Bidegree c) const override { return m_->action(v, orig(c)); }

 private:
  Bidegree orig(Bidegree c) const { return {c.i + a_, c.j - b_}; }
  ModulePtr m_;
  int a_, b_;
};

inline ModulePtr shifted(const ModulePtr& m, int a, int b) {
  if (a == 0 && b == 0) return m;
  return std::make_shared<ShiftedModule>(m, a, b);
}

/// Mapping cone B ⊕ A[1] of φ: A -> B with d(b, a) = (db + φa, -da).
class ConeModule final : public DgModule {
 public:
  explicit ConeModule(MapPtr phi) : DgModule(phi->target()->algebra()), phi_(std::move(phi)) {}

 protected:
  Box compute_support() const override {
    return phi_->target()->support().hull(phi_->source()->support().translated({-1, 0}));
  }
  std::size_t compute_dim(Bidegree b) const override {
    return phi_->target()->dim(b) + phi_->source()->dim(b + kDifferentialDegree);
  }
  Matrix compute_differential(Bidegree b) const override {
    const auto& A = *phi_->source();
    const auto& B = *phi_->target();
    const Bidegree up = b + kDifferentialDegree;
    const auto F = field();
    std::size_t nb0 = B.dim(b), na0 = A.dim(up), nb1 = B.dim(up), na1 = A.dim(up + kDifferentialDegree);
    Matrix m(nb1 + na1, nb0 + na0, F);
    const auto& dB = B.differential(b);
    const auto& ph = phi_->at(up);
    const auto& dA = A.differential(up);
    for (std::size_t r = 0; r < nb1; ++r) {
      for (std::size_t c = 0; c < nb0; ++c) m(r, c) = dB(r, c);
      for (std::size_t c = 0; c < na0; ++c) m(r, nb0 + c) = ph(r, c);
    }
    for (std::size_t r = 0; r < na1; ++r)
      for (std::size_t c = 0; c < na0; ++c) m(nb1 + r, nb0 + c) = F.neg(dA(r, c));
    return m;
  }
  Matrix compute_action(int v, Bidegree b) const override {
    const auto& A = *phi_->source();
    const auto& B = *phi_->target();
    const auto F = field();
    const Bidegree to = b + algebra().var_degree(v);
    std::size_t nb0 = B.dim(b), na0 = A.dim(b + kDifferentialDegree);
    std::size_t nb1 = B.dim(to), na1 = A.dim(to + kDifferentialDegree);
    Matrix m(nb1 + na1, nb0 + na0, F);
    const auto& aB = B.action(v, b);
    const auto& aA = A.action(v, b + kDifferentialDegree);
    Residue s = F.sign(algebra().var_parity(v));
    for (std::size_t r = 0; r < nb1; ++r)
      for (std::size_t c = 0; c < nb0; ++c) m(r, c) = aB(r, c);
    for (std::size_t r = 0; r < na1; ++r)
      for (std::size_t c = 0; c < na0; ++c) m(nb1 + r, nb0 + c) = F.mul(s, aA(r, c));
    return m;
  }

 private:
  MapPtr phi_;
};

inline ModulePtr cone(const MapPtr& phi) { return std::make_shared<ConeModule>(phi); }

/// True iff the cone of φ has no cohomology on the window.
inline bool is_quasi_iso(const MapPtr& phi, const Window& w) { return cohomology(*cone(phi), w).empty(); }

/// Restriction of scalars along an algebra map sending generator v to generator var_map[v].
class RestrictedModule final : public DgModule {
 public:
  RestrictedModule(ModulePtr m, AlgebraSpec to, std::vector<int> var_map)
      : DgModule(std::move(to)), m_(std::move(m)), var_map_(std::move(var_map)) {}

 protected:
  Box compute_support() const override { return m_->support(); }
  std::size_t compute_dim(Bidegree b) const override { return m_->dim(b); }
  Matrix compute_differential(Bidegree b) const override { return m_->differential(b); }
  Matrix compute_action(int v, Bidegree b) const override { return m_->action(var_map_.at(v), b); }

 private:
  ModulePtr m_;
  std::vector<int> var_map_;
};

/// Hom_k(M, k) with (dφ)(m) = -(-1)^{|φ|} φ(dm) and (t·φ)(m) = (-1)^{|t||φ|} φ(t·m).
class LinearDualModule final : public DgModule {
 public:
  explicit LinearDualModule(ModulePtr m) : DgModule(m->algebra()), m_(std::move(m)) {}

 protected:
  Box compute_support() const override { return m_->support().negated(); }
  std::size_t compute_dim(Bidegree b) const override { return m_->dim(-b); }
  Matrix compute_differential(Bidegree b) const override {
    const auto F = field();
    Residue s = F.neg(F.sign(b.i));
    return m_->differential(-b - kDifferentialDegree).transpose().scaled(s);
  }
  Matrix compute_action(int v, Bidegree b) const override {
    const auto F = field();
    Residue s = F.sign(algebra().var_parity(v) * b.i);
    return m_->action(v, -b - algebra().var_degree(v)).transpose().scaled(s);
  }

 private:
  ModulePtr m_;
};

inline ModulePtr linear_dual(const ModulePtr& m) { return std::make_shared<LinearDualModule>(m); }

/// Finite-dimensional module given by explicit matrices; unspecified matrices are zero.
class FiniteModule final : public DgModule {
 public:
  explicit FiniteModule(AlgebraSpec a) : DgModule(std::move(a)) {}

  void set_dim(Bidegree b, std::size_t d) { dims_.insert_or_assign(b, d); }
  void set_differential(Bidegree b, Matrix m) { diff_.insert_or_assign(b, std::move(m)); }
  void set_action(int v, Bidegree b, Matrix m) { act_.insert_or_assign(std::make_pair(v, b), std::move(m)); }

 protected:
  Box compute_support() const override {
    Box box = Box::empty_box();
    for (auto& [b, d] : dims_)
      if (d) box = box.hull(Box::point(b));
    return box;
  }
  std::size_t compute_dim(Bidegree b) const override {
    auto it = dims_.find(b);
    return it == dims_.end() ? 0 : it->second;
  }
  Matrix compute_differential(Bidegree b) const override {
    if (auto it = diff_.find(b); it != diff_.end()) return it->second;
    return Matrix(compute_dim(b + kDifferentialDegree), compute_dim(b), field());
  }
  Matrix compute_action(int v, Bidegree b) const override {
    if (auto it = act_.find({v, b}); it != act_.end()) return it->second;
    return Matrix(compute_dim(b + algebra().var_degree(v)), compute_dim(b), field());
  }

 private:
  std::map<Bidegree, std::size_t> dims_;
  std::map<Bidegree, Matrix> diff_;
  std::map<std::pair<int, Bidegree>, Matrix> act_;
};

/// The trivial module k in bidegree (0,0).
inline ModulePtr trivial_module(const AlgebraSpec& a) {
  auto k = std::make_shared<FiniteModule>(a);
  k->set_dim({0, 0}, 1);
  return k;
}

/// Applies a monomial to a vector of M_b: the odd factors innermost, highest index first.
inline std::vector<Residue> apply_monomial(const DgModule& m, const Monomial& mono, Bidegree b,
                                           std::vector<Residue> v) {
  const auto& A = m.algebra();
  const int ne = A.even_count();
  for (int s = A.odd_count() - 1; s >= 0; --s) {
    if (!(mono.odd >> s & 1u)) continue;
    v = m.action(ne + s, b).apply(v);
    b = b + A.odd_degree();
  }
  for (int k = 0; k < ne; ++k)
    for (int t = 0; t < mono.exps[k]; ++t) {
      v = m.action(k, b).apply(v);
      b = b + A.even_degree();
    }
  return v;
}

// ---------------------------------------------------------------------------------------------
// Axiom checks

struct CheckReport {
  bool ok = true;
  std::string message;
  std::optional<Bidegree> where;

  static CheckReport failure(std::string msg, Bidegree b) { return {false, std::move(msg), b}; }
};

/// d² = 0, Leibniz rule for every generator, and graded commutativity of the action, on a window.
inline CheckReport check_module_axioms(const DgModule& m, const Window& w) {
  const auto& A = m.algebra();
  const auto F = m.field();
  CheckReport report;
  w.for_each([&](Bidegree b) {
    if (!report.ok || m.dim(b) == 0) return;
    const Bidegree up = b + kDifferentialDegree;
    if (!(m.differential(up) * m.differential(b)).is_zero()) {
      report = CheckReport::failure("d^2 != 0", b);
      return;
    }
    for (int v = 0; v < A.var_count(); ++v) {
      const Bidegree dv = A.var_degree(v);
      Matrix lhs = m.differential(b + dv) * m.action(v, b);
      Matrix rhs = (m.action(v, up) * m.differential(b)).scaled(F.sign(A.var_parity(v)));
      if (auto w2 = A.differential_of_var(v)) rhs = rhs + m.action(*w2, b);
      if (!(lhs == rhs)) {
        report = CheckReport::failure("Leibniz rule fails for generator " + std::to_string(v), b);
        return;
      }
      for (int u = 0; u <= v; ++u) {
        const Bidegree du = A.var_degree(u);
        Matrix uv = m.action(u, b + dv) * m.action(v, b);
        Matrix vu = m.action(v, b + du) * m.action(u, b);
        Residue s = F.sign(A.var_parity(u) * A.var_parity(v));
        if (!(uv == vu.scaled(s))) {
          report = CheckReport::failure(
              "generators " + std::to_string(u) + "," + std::to_string(v) + " do not graded-commute", b);
          return;
        }
      }
    }
  });
  return report;
}

/// Chain-map and linearity conditions of a map on a window.
inline CheckReport check_chain_map(const DgMapView& phi, const Window& w) {
  const auto& S = *phi.source();
  const auto& T = *phi.target();
  const auto& A = S.algebra();
  CheckReport report;
  w.for_each([&](Bidegree b) {
    if (!report.ok || S.dim(b) == 0) return;
    const Bidegree up = b + kDifferentialDegree;
    if (!(T.differential(b) * phi.at(b) == phi.at(up) * S.differential(b))) {
      report = CheckReport::failure("map does not commute with differentials", b);
      return;
    }
    for (int v = 0; v < A.var_count(); ++v) {
      const Bidegree to = b + A.var_degree(v);
      if (!(phi.at(to) * S.action(v, b) == T.action(v, b) * phi.at(b))) {
        report = CheckReport::failure("map is not linear for generator " + std::to_string(v), b);
        return;
      }
    }
  });
  return report;
}

}  // namespace koszulkit
