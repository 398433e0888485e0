#pragma once

// Semifree resolutions of finite-dimensional T-modules by killing cone cohomology.
//
// Multiplication by T raises internal degree, so a generator adjoined in internal degree j only
// changes the cone in internal degrees >= j. Internal degrees are therefore handled in increasing
// order; after degree j is processed the cone is acyclic there for good.

#include <vector>

#include "semifree.hpp"

namespace koszulkit {

struct Resolution {
  SemifreeModule module;
  std::vector<std::vector<Residue>> images;  // π(g) ∈ M_{deg g}
  int acyclic_up_to = 0;                     // cone acyclic in every internal degree <= this
  MapPtr structure_map;
};

inline MapPtr resolution_map(const SemifreeModule& p, const std::vector<std::vector<Residue>>& images,
                             const ModulePtr& target) {
  auto src = std::make_shared<FiniteSource>(p);
  auto ex = expand(src);
  return std::make_shared<SemifreeInducedMap>(ex, target,
                                              [src, images](const GenRef& g) { return images[src->global(g)]; });
}

inline Resolution semifree_resolution(const ModulePtr& m, int depth) {
  const auto& A = m->algebra();
  if (A.kind() != AlgebraKind::T) throw std::invalid_argument("semifree_resolution expects a module over T");
  if (depth < 1) throw std::invalid_argument("resolution depth must be at least 1");
  const Box& box = m->support();
  if (!box.bounded()) throw std::invalid_argument("semifree_resolution needs a finite-dimensional module");

  Resolution res{SemifreeModule::free(A, {}), {}, 0, nullptr};
  if (box.is_empty()) {
    res.structure_map = resolution_map(res.module, res.images, m);
    return res;
  }
  const int j_lo = *box.j_lo;
  const int j_top = j_lo + 2 * depth;
  const auto F = A.field();

  for (int j = j_lo; j <= j_top; ++j) {
    // cohomological range of the cone in internal degree j
    int i_lo = *box.i_lo - 1, i_hi = *box.i_hi;
    for (auto g : res.module.gens) {
      i_lo = std::min(i_lo, g.i - A.f() - 1);
      i_hi = std::max(i_hi, g.i);
    }
    for (int i = i_hi; i >= i_lo; --i) {
      const Bidegree b{i, j};
      auto pi = resolution_map(res.module, res.images, m);
      auto ex = std::static_pointer_cast<const SemifreeExpansion>(pi->source());
      auto c = cone(pi);
      const Matrix& out = c->differential(b);
      const Matrix& in = c->differential(b - kDifferentialDegree);
      if (c->dim(b) == 0) continue;
      Matrix cycles = kernel_basis(out);
      if (cycles.cols() == 0) continue;
      Matrix reps = complement_in(in, cycles);
      if (reps.cols() == 0) continue;
      const std::size_t nm = m->dim(b);
      const auto& pbasis = ex->basis(b + kDifferentialDegree);
      for (std::size_t t = 0; t < reps.cols(); ++t) {
        const std::size_t l = res.module.rank();
        res.module.gens.push_back(b);
        i_lo = std::min(i_lo, b.i - A.f() - 1);
        for (auto& row : res.module.diff) row.emplace_back();
        res.module.diff.emplace_back(l + 1);
        std::vector<Residue> image(nm);
        for (std::size_t r = 0; r < nm; ++r) image[r] = reps(r, t);
        res.images.push_back(std::move(image));
        // d g = -p, with p the T-part of the representative
        for (std::size_t r = 0; r < pbasis.size(); ++r) {
          Residue v = reps(nm + r, t);
          if (!v) continue;
          const auto& [mono, gen] = pbasis[r];
          std::size_t k = 0;
          for (std::size_t q = 0, seen = 0; q < l; ++q)
            if (res.module.gens[q] == gen.deg && seen++ == gen.index) k = q;
          A.accumulate(res.module.diff[k][l], mono, F.neg(v));
        }
      }
    }
  }
  res.acyclic_up_to = j_top;
  res.structure_map = resolution_map(res.module, res.images, m);
  return res;
}

}  // namespace koszulkit
