#pragma once

// Semifree dg-modules: free over the algebra on homogeneous generators, with the differential
// given on generators. Sign convention: d(a·g) = d(a)·g + (-1)^{|a|} a·d(g).
//
// Two representations share one expansion routine:
//   * SemifreeModule: finitely many generators and an explicit matrix of algebra elements;
//   * GeneratorSource: generators enumerated per bidegree, possibly infinitely many in total
//     but finitely many in each bidegree (the functors F and G produce these).

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "dg_module.hpp"

namespace koszulkit {

struct GenRef {
  Bidegree deg;
  std::size_t index = 0;  // position among the generators of bidegree `deg`
  friend auto operator<=>(const GenRef&, const GenRef&) = default;
  friend bool operator==(const GenRef&, const GenRef&) = default;
};

/// One summand coef · mono · gen of the boundary of a generator.
struct GenTerm {
  Monomial mono;
  Residue coef = 0;
  GenRef gen;
};

class GeneratorSource {
 public:
  virtual ~GeneratorSource() = default;
  virtual const AlgebraSpec& algebra() const = 0;
  virtual std::size_t count(Bidegree b) const = 0;
  virtual std::vector<GenTerm> boundary(const GenRef& g) const = 0;
  /// Contains the bidegrees of all generators.
  virtual Box box() const = 0;
};

using SourcePtr = std::shared_ptr<const GeneratorSource>;

/// The bigraded module A ⊗ (generators), with its differential and A-action.
class SemifreeExpansion final : public DgModule {
 public:
  using BasisElement = std::pair<Monomial, GenRef>;

  explicit SemifreeExpansion(SourcePtr src) : DgModule(src->algebra()), src_(std::move(src)) {}

  const SourcePtr& source() const { return src_; }

  const std::vector<BasisElement>& basis(Bidegree b) const {
    std::lock_guard lock(mu_);
    return slice(b).elements;
  }

  std::optional<std::size_t> index_of(Bidegree b, const Monomial& mono, const GenRef& g) const {
    std::lock_guard lock(mu_);
    const auto& s = slice(b);
    auto it = s.index.find({mono, g});
    if (it == s.index.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<GenTerm>& generator_boundary(const GenRef& g) const {
    std::lock_guard lock(mu_);
    auto it = boundaries_.find(g);
    if (it == boundaries_.end()) it = boundaries_.emplace(g, src_->boundary(g)).first;
    return it->second;
  }

 protected:
  Box compute_support() const override { return src_->box().plus(algebra().monomial_box()); }
  std::size_t compute_dim(Bidegree b) const override { return basis(b).size(); }

  Matrix compute_differential(Bidegree b) const override {
    const auto& A = algebra();
    const auto F = field();
    const Bidegree up = b + kDifferentialDegree;
    const auto& src = basis(b);
    Matrix m(dim(up), src.size(), F);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& [a, g] = src[c];
      for (auto& [da, coef] : A.differential(a)) m.add_to(must_index(up, da, g), c, coef);
      Residue sa = F.sign(a.parity());
      for (const auto& term : generator_boundary(g)) {
        auto prod = A.multiply(a, term.mono);
        if (!prod) continue;
        Residue coef = F.mul(sa, term.coef);
        if (prod->first < 0) coef = F.neg(coef);
        m.add_to(must_index(up, prod->second, term.gen), c, coef);
      }
    }
    return m;
  }

  Matrix compute_action(int v, Bidegree b) const override {
    const auto& A = algebra();
    const auto F = field();
    const Bidegree to = b + A.var_degree(v);
    const auto& src = basis(b);
    const Monomial x = A.var_monomial(v);
    Matrix m(dim(to), src.size(), F);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& [a, g] = src[c];
      auto prod = A.multiply(x, a);
      if (!prod) continue;
      m.add_to(must_index(to, prod->second, g), c, prod->first < 0 ? F.neg(1) : 1);
    }
    return m;
  }

 private:
  struct Slice {
    std::vector<BasisElement> elements;
    std::map<BasisElement, std::size_t> index;
  };

  const Slice& slice(Bidegree b) const {
    auto it = slices_.find(b);
    if (it != slices_.end()) return it->second;
    Slice s;
    if (support().contains(b)) {
      const auto& A = algebra();
      A.for_each_monomial_degree(b, src_->box(), [&](Bidegree mu) {
        Bidegree gd = b - mu;
        std::size_t n = src_->count(gd);
        if (n == 0) return;
        for (const auto& mono : A.monomials(mu))
          for (std::size_t g = 0; g < n; ++g) s.elements.push_back({mono, GenRef{gd, g}});
      });
      std::sort(s.elements.begin(), s.elements.end());
      for (std::size_t k = 0; k < s.elements.size(); ++k) s.index.emplace(s.elements[k], k);
    }
    return slices_.emplace(b, std::move(s)).first->second;
  }

  std::size_t must_index(Bidegree b, const Monomial& mono, const GenRef& g) const {
    auto idx = index_of(b, mono, g);
    if (!idx)
      throw std::logic_error("semifree expansion: term outside basis at " + to_string(b) +
                             " (inhomogeneous differential?)");
    return *idx;
  }

  SourcePtr src_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Bidegree, Slice> slices_;
  mutable std::map<GenRef, std::vector<GenTerm>> boundaries_;
};

using ExpansionPtr = std::shared_ptr<const SemifreeExpansion>;

inline ExpansionPtr expand(SourcePtr src) { return std::make_shared<SemifreeExpansion>(std::move(src)); }

// ---------------------------------------------------------------------------------------------
// Finitely generated semifree modules

/// Element of a free module: one algebra coefficient per generator.
using FreeElement = std::vector<AlgElement>;

struct SemifreeModule {
  AlgebraSpec algebra;
  std::vector<Bidegree> gens;
  /// diff[k][l] is the coefficient of gens[k] in d(gens[l]).
  std::vector<std::vector<AlgElement>> diff;

  std::size_t rank() const { return gens.size(); }

  static SemifreeModule free(const AlgebraSpec& a, std::vector<Bidegree> gens) {
    SemifreeModule m{a, std::move(gens), {}};
    m.diff.assign(m.gens.size(), std::vector<AlgElement>(m.gens.size()));
    return m;
  }

  friend bool operator==(const SemifreeModule&, const SemifreeModule&) = default;
};

/// Degree-(0,0) map between finitely generated semifree modules.
struct DgMap {
  SemifreeModule source;
  SemifreeModule target;
  /// entries[k][l] is the coefficient of target.gens[k] in φ(source.gens[l]).
  std::vector<std::vector<AlgElement>> entries;
};

inline void add_scaled(const AlgebraSpec& A, AlgElement& out, const AlgElement& x, Residue c, int sign = 1) {
  const auto F = A.field();
  for (auto& [m, v] : x) {
    Residue t = F.mul(v, c);
    A.accumulate(out, m, sign < 0 ? F.neg(t) : t);
  }
}

/// d of a free-module element.
inline FreeElement apply_differential(const SemifreeModule& M, const FreeElement& x) {
  const auto& A = M.algebra;
  const auto F = A.field();
  FreeElement out(M.rank());
  for (std::size_t k = 0; k < M.rank(); ++k) {
    for (auto& [mono, c] : x[k]) {
      AlgElement single;
      A.accumulate(single, mono, c);
      add_scaled(A, out[k], A.differential(single), 1);
      Residue s = F.sign(mono.parity());
      for (std::size_t r = 0; r < M.rank(); ++r) {
        if (M.diff[r][k].empty()) continue;
        add_scaled(A, out[r], A.multiply(single, M.diff[r][k]), s);
      }
    }
  }
  return out;
}

/// φ of a free-module element (φ is degree zero, so no signs appear).
inline FreeElement apply_map(const DgMap& phi, const FreeElement& x) {
  const auto& A = phi.target.algebra;
  FreeElement out(phi.target.rank());
  for (std::size_t l = 0; l < phi.source.rank(); ++l) {
    if (x[l].empty()) continue;
    for (std::size_t k = 0; k < phi.target.rank(); ++k)
      if (!phi.entries[k][l].empty()) add_scaled(A, out[k], A.multiply(x[l], phi.entries[k][l]), 1);
  }
  return out;
}

inline FreeElement generator_element(const SemifreeModule& M, std::size_t l) {
  FreeElement x(M.rank());
  M.algebra.accumulate(x[l], M.algebra.one(), 1);
  return x;
}

inline bool is_zero(const FreeElement& x) {
  return std::all_of(x.begin(), x.end(), [](const AlgElement& a) { return a.empty(); });
}

/// Confirms homogeneity of every entry and d² = 0 on generators; reports the first violation.
inline CheckReport validate(const SemifreeModule& M) {
  const auto& A = M.algebra;
  const std::size_t n = M.rank();
  if (M.diff.size() != n)
    return CheckReport::failure("differential matrix has " + std::to_string(M.diff.size()) + " rows, expected " +
                                    std::to_string(n),
                                {0, 0});
  for (std::size_t k = 0; k < n; ++k) {
    if (M.diff[k].size() != n)
      return CheckReport::failure("differential row " + std::to_string(k) + " has wrong length", {0, 0});
    for (std::size_t l = 0; l < n; ++l)
      for (auto& [mono, c] : M.diff[k][l]) {
        if (c == 0 || c >= A.p()) return CheckReport::failure("entry (" + std::to_string(k) + "," + std::to_string(l) + ") has a non-reduced coefficient", M.gens[l]);
        Bidegree expected = M.gens[l] + kDifferentialDegree - M.gens[k];
        if (A.degree(mono) != expected || mono.exps.size() != static_cast<std::size_t>(A.even_count()) ||
            (mono.odd >> A.odd_count()) != 0)
          return CheckReport::failure("entry (" + std::to_string(k) + "," + std::to_string(l) +
                                          ") has a monomial of bidegree " + to_string(A.degree(mono)) +
                                          ", expected " + to_string(expected),
                                      M.gens[l] + kDifferentialDegree);
      }
  }
  for (std::size_t l = 0; l < n; ++l) {
    auto dd = apply_differential(M, apply_differential(M, generator_element(M, l)));
    if (!is_zero(dd))
      return CheckReport::failure("d^2 != 0 on generator " + std::to_string(l),
                                  M.gens[l] + kDifferentialDegree + kDifferentialDegree);
  }
  return {};
}

inline CheckReport check_chain_map(const DgMap& phi) {
  const auto& A = phi.target.algebra;
  if (!(phi.source.algebra == A)) return CheckReport::failure("source and target over different algebras", {0, 0});
  for (std::size_t k = 0; k < phi.target.rank(); ++k)
    for (std::size_t l = 0; l < phi.source.rank(); ++l)
      for (auto& [mono, c] : phi.entries[k][l])
        if (A.degree(mono) != phi.source.gens[l] - phi.target.gens[k])
          return CheckReport::failure("map entry (" + std::to_string(k) + "," + std::to_string(l) + ") is not of degree zero",
                                      phi.source.gens[l]);
  for (std::size_t l = 0; l < phi.source.rank(); ++l) {
    auto g = generator_element(phi.source, l);
    auto lhs = apply_differential(phi.target, apply_map(phi, g));
    auto rhs = apply_map(phi, apply_differential(phi.source, g));
    for (std::size_t k = 0; k < lhs.size(); ++k)
      if (lhs[k] != rhs[k]) return CheckReport::failure("map does not commute with differentials", phi.source.gens[l]);
  }
  return {};
}

/// Generator view of a finitely generated semifree module.
class FiniteSource final : public GeneratorSource {
 public:
  explicit FiniteSource(SemifreeModule m) : m_(std::move(m)) {
    for (std::size_t g = 0; g < m_.rank(); ++g) {
      auto& v = by_degree_[m_.gens[g]];
      local_.push_back(v.size());
      v.push_back(g);
    }
  }

  const SemifreeModule& module() const { return m_; }
  const AlgebraSpec& algebra() const override { return m_.algebra; }
  std::size_t count(Bidegree b) const override {
    auto it = by_degree_.find(b);
    return it == by_degree_.end() ? 0 : it->second.size();
  }
  std::vector<GenTerm> boundary(const GenRef& g) const override {
    std::size_t l = global(g);
    std::vector<GenTerm> out;
    for (std::size_t k = 0; k < m_.rank(); ++k)
      for (auto& [mono, c] : m_.diff[k][l]) out.push_back({mono, c, ref(k)});
    return out;
  }
  Box box() const override {
    Box b = Box::empty_box();
    for (auto& g : m_.gens) b = b.hull(Box::point(g));
    return b;
  }

  GenRef ref(std::size_t global_index) const { return {m_.gens[global_index], local_[global_index]}; }
  std::size_t global(const GenRef& g) const { return by_degree_.at(g.deg).at(g.index); }

 private:
  SemifreeModule m_;
  std::map<Bidegree, std::vector<std::size_t>> by_degree_;
  std::vector<std::size_t> local_;
};

inline ExpansionPtr expand(const SemifreeModule& m) { return expand(std::make_shared<FiniteSource>(m)); }

/// Map from a semifree expansion to any module, determined by generator images:
/// image(a·g) = a·image(g).
class SemifreeInducedMap final : public DgMapView {
 public:
  using ImageFn = std::function<std::vector<Residue>(const GenRef&)>;

  SemifreeInducedMap(ExpansionPtr source, ModulePtr target, ImageFn image)
      : DgMapView(source, std::move(target)), expansion_(std::move(source)), image_(std::move(image)) {}

 protected:
  Matrix compute(Bidegree b) const override {
    const auto& T = *target();
    const auto& basis = expansion_->basis(b);
    Matrix m(T.dim(b), basis.size(), T.field());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto& [mono, g] = basis[c];
      auto v = image_(g);
      if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; })) continue;
      v = apply_monomial(T, mono, g.deg, std::move(v));
      for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
    }
    return m;
  }

 private:
  ExpansionPtr expansion_;
  ImageFn image_;
};

/// Bidegree-wise view of a finite DgMap between the expansions of its source and target.
inline MapPtr expand(const DgMap& phi) {
  auto src = std::make_shared<FiniteSource>(phi.source);
  auto tgt_src = std::make_shared<FiniteSource>(phi.target);
  auto s = expand(src);
  auto t = expand(tgt_src);
  const auto& A = phi.target.algebra;
  return std::make_shared<SemifreeInducedMap>(s, t, [phi, src, tgt_src, t, A](const GenRef& g) {
    std::size_t l = src->global(g);
    std::vector<Residue> v(t->dim(g.deg), 0);
    for (std::size_t k = 0; k < phi.target.rank(); ++k)
      for (auto& [mono, c] : phi.entries[k][l]) {
        auto idx = t->index_of(g.deg, mono, tgt_src->ref(k));
        if (!idx) throw std::logic_error("map entry outside target basis");
        v[*idx] = A.field().add(v[*idx], c);
      }
    return v;
  });
}

// ---------------------------------------------------------------------------------------------
// Elementary constructions on finite semifree modules

inline DgMap identity_map(const SemifreeModule& m) {
  DgMap phi{m, m, std::vector<std::vector<AlgElement>>(m.rank(), std::vector<AlgElement>(m.rank()))};
  for (std::size_t k = 0; k < m.rank(); ++k) phi.entries[k][k] = scalar_element(m.algebra, 1);
  return phi;
}

inline DgMap zero_map(const SemifreeModule& s, const SemifreeModule& t) {
  return {s, t, std::vector<std::vector<AlgElement>>(t.rank(), std::vector<AlgElement>(s.rank()))};
}

/// M[a]<b> with unchanged differential entries.
inline SemifreeModule shifted(SemifreeModule m, int a, int b) {
  for (auto& g : m.gens) g = {g.i - a, g.j + b};
  return m;
}

inline SemifreeModule direct_sum(const SemifreeModule& x, const SemifreeModule& y) {
  if (!(x.algebra == y.algebra)) throw std::invalid_argument("direct sum of modules over different algebras");
  SemifreeModule s = SemifreeModule::free(x.algebra, x.gens);
  s.gens.insert(s.gens.end(), y.gens.begin(), y.gens.end());
  s.diff.assign(s.gens.size(), std::vector<AlgElement>(s.gens.size()));
  for (std::size_t k = 0; k < x.rank(); ++k)
    for (std::size_t l = 0; l < x.rank(); ++l) s.diff[k][l] = x.diff[k][l];
  for (std::size_t k = 0; k < y.rank(); ++k)
    for (std::size_t l = 0; l < y.rank(); ++l) s.diff[x.rank() + k][x.rank() + l] = y.diff[k][l];
  return s;
}

/// Semifree cone: generators target.gens ∪ source.gens[1],
/// d(s g) = φ(g) − Σ_k (−1)^{|a_k|} a_k · s(g_k) where d(g) = Σ_k a_k g_k.
inline SemifreeModule cone(const DgMap& phi) {
  if (auto r = check_chain_map(phi); !r.ok) throw std::invalid_argument("cone: " + r.message);
  const auto& A = phi.target.algebra;
  const auto F = A.field();
  const std::size_t nt = phi.target.rank(), ns = phi.source.rank();
  SemifreeModule c = SemifreeModule::free(A, phi.target.gens);
  for (auto g : phi.source.gens) c.gens.push_back(g - kDifferentialDegree);
  c.diff.assign(nt + ns, std::vector<AlgElement>(nt + ns));
  for (std::size_t k = 0; k < nt; ++k)
    for (std::size_t l = 0; l < nt; ++l) c.diff[k][l] = phi.target.diff[k][l];
  for (std::size_t k = 0; k < nt; ++k)
    for (std::size_t l = 0; l < ns; ++l) c.diff[k][nt + l] = phi.entries[k][l];
  for (std::size_t k = 0; k < ns; ++k)
    for (std::size_t l = 0; l < ns; ++l)
      for (auto& [mono, v] : phi.source.diff[k][l])
        A.accumulate(c.diff[nt + k][nt + l], mono, mono.parity() ? v : F.neg(v));
  return c;
}

// ---------------------------------------------------------------------------------------------
// Hom into the free rank-one module

/// Coefficient sign of the transposed differential of Hom_A(M, A).
/// Even algebras use the plain transpose, which makes dualization an involution on presentations.
/// Otherwise (dφ)(m) = −(−1)^{|φ|} φ(dm) with φ(a m) = (−1)^{|a||φ|} a φ(m).
inline Residue dual_sign(const AlgebraSpec& A, int target_gen_i, const Monomial& coef) {
  const auto F = A.field();
  if (A.is_even()) return 1;
  return F.neg(F.sign(target_gen_i * (1 + coef.parity())));
}

/// Hom_A(M, A) on a presentation: generators negated, differential transposed with dual_sign.
inline SemifreeModule dualize(const SemifreeModule& m) {
  const auto& A = m.algebra;
  const auto F = A.field();
  SemifreeModule d = SemifreeModule::free(A, {});
  for (auto g : m.gens) d.gens.push_back(-g);
  d.diff.assign(m.rank(), std::vector<AlgElement>(m.rank()));
  for (std::size_t k = 0; k < m.rank(); ++k)
    for (std::size_t l = 0; l < m.rank(); ++l)
      for (auto& [mono, c] : m.diff[k][l]) A.accumulate(d.diff[l][k], mono, F.mul(dual_sign(A, m.gens[k].i, mono), c));
  return d;
}

/// Hom_A(M, A) for a generator source with finitely many generators per bidegree.
class DualSource final : public GeneratorSource {
 public:
  explicit DualSource(SourcePtr src) : src_(std::move(src)) {}

  const AlgebraSpec& algebra() const override { return src_->algebra(); }
  std::size_t count(Bidegree b) const override { return src_->count(-b); }
  Box box() const override { return src_->box().negated(); }

  std::vector<GenTerm> boundary(const GenRef& g) const override {
    const auto& A = algebra();
    const auto F = A.field();
    const GenRef orig{-g.deg, g.index};
    std::vector<GenTerm> out;
    // generators h with deg h = deg(orig) − (1,0) + μ may contain orig in their boundary
    A.for_each_monomial_degree(g.deg + kDifferentialDegree, src_->box().negated(), [&](Bidegree mu) {
      Bidegree hdeg = mu - g.deg - kDifferentialDegree;
      std::size_t n = src_->count(hdeg);
      for (std::size_t h = 0; h < n; ++h)
        for (const auto& term : cached_boundary({hdeg, h}))
          if (term.gen == orig)
            out.push_back({term.mono, F.mul(dual_sign(A, orig.deg.i, term.mono), term.coef), GenRef{-hdeg, h}});
    });
    return out;
  }

 private:
  const std::vector<GenTerm>& cached_boundary(const GenRef& h) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(h);
    if (it == cache_.end()) it = cache_.emplace(h, src_->boundary(h)).first;
    return it->second;
  }

  SourcePtr src_;
  mutable std::mutex mu_;
  mutable std::map<GenRef, std::vector<GenTerm>> cache_;
};

// ---------------------------------------------------------------------------------------------
// JSON

inline nlohmann::json monomial_to_json(const Monomial& m) {
  auto odd = nlohmann::json::array();
  for (int s = 0; s < 32; ++s)
    if (m.odd >> s & 1u) odd.push_back(s);
  return {{"even", m.exps}, {"odd", odd}};
}

inline Monomial monomial_from_json(const AlgebraSpec& A, const nlohmann::json& j) {
  Monomial m = A.one();
  auto even = j.at("even").get<std::vector<int>>();
  if (even.size() != static_cast<std::size_t>(A.even_count()))
    throw std::invalid_argument("monomial has " + std::to_string(even.size()) + " even exponents, algebra has " +
                                std::to_string(A.even_count()));
  for (std::size_t k = 0; k < even.size(); ++k) {
    if (even[k] < 0) throw std::invalid_argument("negative exponent in monomial");
    m.exps[k] = static_cast<std::uint16_t>(even[k]);
  }
  for (int s : j.at("odd").get<std::vector<int>>()) {
    if (s < 0 || s >= A.odd_count()) throw std::invalid_argument("odd generator index out of range");
    if (m.odd >> s & 1u) throw std::invalid_argument("repeated odd generator in monomial");
    m.odd |= 1u << s;
  }
  return m;
}

inline nlohmann::json algebra_element_to_json(const AlgElement& a) {
  auto arr = nlohmann::json::array();
  for (auto& [m, c] : a) {
    auto t = monomial_to_json(m);
    t["coef"] = c;
    arr.push_back(t);
  }
  return arr;
}

inline nlohmann::json to_json(const SemifreeModule& m) {
  nlohmann::json j;
  j["schema"] = 1;
  j["algebra"] = m.algebra.to_json();
  auto gens = nlohmann::json::array();
  for (auto g : m.gens) gens.push_back({g.i, g.j});
  j["gens"] = gens;
  auto diff = nlohmann::json::array();
  for (std::size_t k = 0; k < m.rank(); ++k)
    for (std::size_t l = 0; l < m.rank(); ++l)
      if (!m.diff[k][l].empty()) diff.push_back({{"row", k}, {"col", l}, {"terms", algebra_element_to_json(m.diff[k][l])}});
  j["diff"] = diff;
  return j;
}

/// Parses and validates; throws std::invalid_argument with a diagnostic on malformed input.
inline SemifreeModule semifree_from_json(const nlohmann::json& j) {
  try {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported or missing schema (expected 1)");
    auto A = AlgebraSpec::from_json(j.at("algebra"));
    std::vector<Bidegree> gens;
    for (auto& g : j.at("gens")) {
      if (!g.is_array() || g.size() != 2) throw std::invalid_argument("generator bidegrees must be [i, j]");
      gens.push_back({g[0].get<int>(), g[1].get<int>()});
    }
    auto m = SemifreeModule::free(A, gens);
    for (auto& e : j.at("diff")) {
      auto k = e.at("row").get<std::size_t>(), l = e.at("col").get<std::size_t>();
      if (k >= m.rank() || l >= m.rank()) throw std::invalid_argument("differential entry index out of range");
      for (auto& t : e.at("terms"))
        A.accumulate(m.diff[k][l], monomial_from_json(A, t), A.field().reduce(t.at("coef").get<long long>()));
    }
    if (auto r = validate(m); !r.ok) throw std::invalid_argument("invalid dg-module: " + r.message);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed dg-module JSON: ") + e.what());
  }
}

}  // namespace koszulkit
