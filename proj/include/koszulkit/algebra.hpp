#pragma once

// The graded-commutative dg-algebras over a point:
//   S = Sym(F*)             generators in (2,-2), zero differential
//   R = Sym(F*)             generators in (0,-2), zero differential
//   T = Λ(F)                generators in (-1,2), zero differential
//   Q = Sym(E/F) ⊗ Λ(E)     even generators in (0,2), odd in (-1,2), d(e_s) = [e_s] in E/F
//   P = Sym(E/F)            generators in (0,2); functions on F⊥
//
// Monomials are normal-ordered: even part (exponent vector) first, then odd part as an
// increasing product encoded by a bitmask.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigraded.hpp"
#include "modp.hpp"

namespace koszulkit {

enum class AlgebraKind { S, R, T, Q, P };

inline std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::S: return "S";
    case AlgebraKind::R: return "R";
    case AlgebraKind::T: return "T";
    case AlgebraKind::Q: return "Q";
    case AlgebraKind::P: return "P";
  }
  return "?";
}

inline AlgebraKind algebra_kind_from_string(const std::string& s) {
  if (s == "S") return AlgebraKind::S;
  if (s == "R") return AlgebraKind::R;
  if (s == "T") return AlgebraKind::T;
  if (s == "Q") return AlgebraKind::Q;
  if (s == "P") return AlgebraKind::P;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

struct Monomial {
  std::vector<std::uint16_t> exps;  // even generators
  std::uint32_t odd = 0;            // odd generators, bit s set <=> θ_s present

  int parity() const { return std::popcount(odd) & 1; }
  int odd_count() const { return std::popcount(odd); }
  int even_total() const {
    int t = 0;
    for (auto e : exps) t += e;
    return t;
  }
  bool is_one() const { return odd == 0 && even_total() == 0; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse linear combination of monomials.
using AlgElement = std::map<Monomial, Residue>;

/// (-1)^{#{(x in left, y in right) : x > y}}, the sign of normal-ordering θ_left θ_right.
inline int odd_merge_sign(std::uint32_t left, std::uint32_t right) {
  int inversions = 0;
  for (std::uint32_t r = right; r; r &= r - 1) {
    int y = std::countr_zero(r);
    inversions += std::popcount(left >> (y + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

class AlgebraSpec {
 public:
  AlgebraSpec() = default;

  /// Throws std::invalid_argument unless 0 <= f <= e and p is an odd prime.
  static AlgebraSpec make(AlgebraKind kind, int e, int f, std::uint32_t p) {
    if (f < 0 || e < 0 || f > e)
      throw std::invalid_argument("need 0 <= f <= e, got e=" + std::to_string(e) + " f=" + std::to_string(f));
    if (e > 16) throw std::invalid_argument("dim E is capped at 16");
    (void)PrimeField(p);
    AlgebraSpec a;
    a.kind_ = kind;
    a.e_ = e;
    a.f_ = f;
    a.p_ = p;
    switch (kind) {
      case AlgebraKind::S: a.n_even_ = f; a.even_deg_ = {2, -2}; break;
      case AlgebraKind::R: a.n_even_ = f; a.even_deg_ = {0, -2}; break;
      case AlgebraKind::T: a.n_odd_ = f; a.odd_deg_ = {-1, 2}; break;
      case AlgebraKind::Q:
        a.n_even_ = e - f;
        a.even_deg_ = {0, 2};
        a.n_odd_ = e;
        a.odd_deg_ = {-1, 2};
        break;
      case AlgebraKind::P: a.n_even_ = e - f; a.even_deg_ = {0, 2}; break;
    }
    return a;
  }

  AlgebraKind kind() const { return kind_; }
  int e() const { return e_; }
  int f() const { return f_; }
  std::uint32_t p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  int even_count() const { return n_even_; }
  int odd_count() const { return n_odd_; }
  int var_count() const { return n_even_ + n_odd_; }
  Bidegree even_degree() const { return even_deg_; }
  Bidegree odd_degree() const { return odd_deg_; }
  bool has_differential() const { return kind_ == AlgebraKind::Q && e_ > f_; }
  /// True when every element has even cohomological degree (so the algebra is commutative).
  bool is_even() const { return n_odd_ == 0; }

  Bidegree var_degree(int v) const { return v < n_even_ ? even_deg_ : odd_deg_; }
  int var_parity(int v) const { return v < n_even_ ? 0 : 1; }
  Monomial one() const { return Monomial{std::vector<std::uint16_t>(n_even_, 0), 0}; }
  Monomial var_monomial(int v) const {
    Monomial m = one();
    if (v < n_even_)
      m.exps[v] = 1;
    else
      m.odd = 1u << (v - n_even_);
    return m;
  }

  Bidegree degree(const Monomial& m) const {
    return m.even_total() * even_deg_ + m.odd_count() * odd_deg_;
  }

  /// Product of monomials: (sign, monomial), or nullopt when it vanishes.
  std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) const {
    if (a.odd & b.odd) return std::nullopt;
    Monomial m = a;
    for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] += b.exps[k];
    m.odd = a.odd | b.odd;
    return std::make_pair(odd_merge_sign(a.odd, b.odd), std::move(m));
  }

  AlgElement multiply(const AlgElement& a, const AlgElement& b) const {
    const auto F = field();
    AlgElement out;
    for (auto& [ma, ca] : a)
      for (auto& [mb, cb] : b) {
        auto prod = multiply(ma, mb);
        if (!prod) continue;
        Residue c = F.mul(ca, cb);
        if (prod->first < 0) c = F.neg(c);
        accumulate(out, prod->second, c);
      }
    return out;
  }

  /// Algebra differential of a monomial (nonzero only for Q with e > f).
  AlgElement differential(const Monomial& m) const {
    AlgElement out;
    if (!has_differential()) return out;
    const auto F = field();
    int position = 0;
    for (int s = 0; s < n_odd_; ++s) {
      if (!(m.odd >> s & 1u)) continue;
      if (s >= f_) {
        Monomial t = m;
        t.odd &= ~(1u << s);
        t.exps[s - f_] += 1;
        accumulate(out, t, F.sign(position));
      }
      ++position;
    }
    return out;
  }

  AlgElement differential(const AlgElement& a) const {
    const auto F = field();
    AlgElement out;
    for (auto& [m, c] : a)
      for (auto& [dm, dc] : differential(m)) accumulate(out, dm, F.mul(c, dc));
    return out;
  }

  /// d of a generator: index of a variable or nullopt when d(var) = 0.
  std::optional<int> differential_of_var(int v) const {
    if (!has_differential() || v < n_even_) return std::nullopt;
    int s = v - n_even_;
    if (s < f_) return std::nullopt;
    return s - f_;
  }

  /// All monomials of bidegree b, in canonical (sorted) order.
  std::vector<Monomial> monomials(Bidegree b) const {
    std::vector<Monomial> out;
    for (std::uint32_t mask = 0; mask < (1u << n_odd_); ++mask) {
      Bidegree rest = b - std::popcount(mask) * odd_deg_;
      auto t = even_multiple(rest);
      if (!t) continue;
      std::vector<std::uint16_t> exps(n_even_, 0);
      compositions(*t, 0, exps, [&](const std::vector<std::uint16_t>& ex) { out.push_back({ex, mask}); });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Box containing the degrees of all monomials.
  Box monomial_box() const {
    Bidegree top = n_odd_ * odd_deg_;
    Box odd{std::min(0, top.i), std::max(0, top.i), std::min(0, top.j), std::max(0, top.j)};
    Box even = Box::point({0, 0});
    if (n_even_ > 0) {
      auto ray = [](int d, std::optional<int>& lo, std::optional<int>& hi) {
        if (d > 0) hi.reset();
        if (d < 0) lo.reset();
      };
      ray(even_deg_.i, even.i_lo, even.i_hi);
      ray(even_deg_.j, even.j_lo, even.j_hi);
    }
    return odd.plus(even);
  }

  /// Calls fn(μ) for each monomial degree μ such that target − μ lies in `gens`.
  /// Throws when infinitely many such μ could exist.
  template <class Fn>
  void for_each_monomial_degree(Bidegree target, const Box& gens, Fn&& fn) const {
    if (gens.is_empty()) return;
    for (int s = 0; s <= n_odd_; ++s) {
      Bidegree odd_part = s * odd_deg_;
      if (n_even_ == 0) {
        if (gens.contains(target - odd_part)) fn(odd_part);
        continue;
      }
      int t_max = max_even_steps(target - odd_part, gens);
      for (int t = 0; t <= t_max; ++t) {
        Bidegree mu = odd_part + t * even_deg_;
        if (gens.contains(target - mu)) fn(mu);
      }
    }
  }

  nlohmann::json to_json() const {
    return {{"kind", to_string(kind_)}, {"e", e_}, {"f", f_}, {"p", p_}};
  }
  static AlgebraSpec from_json(const nlohmann::json& j) {
    return make(algebra_kind_from_string(j.at("kind").get<std::string>()), j.at("e").get<int>(),
                j.at("f").get<int>(), j.at("p").get<std::uint32_t>());
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

  static void accumulate(AlgElement& out, const Monomial& m, Residue c, std::uint32_t p) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second = (it->second + c) % p;
      if (it->second == 0) out.erase(it);
    }
  }
  void accumulate(AlgElement& out, const Monomial& m, Residue c) const { accumulate(out, m, c, p_); }

 private:
  std::optional<int> even_multiple(Bidegree r) const {
    if (n_even_ == 0) return (r == Bidegree{0, 0}) ? std::optional<int>(0) : std::nullopt;
    int t;
    if (even_deg_.i != 0) {
      if (r.i % even_deg_.i) return std::nullopt;
      t = r.i / even_deg_.i;
    } else {
      if (r.i != 0 || r.j % even_deg_.j) return std::nullopt;
      t = r.j / even_deg_.j;
    }
    if (t < 0 || t * even_deg_ != r) return std::nullopt;
    return t;
  }

  int max_even_steps(Bidegree r, const Box& gens) const {
    // need r − t·δ inside gens; bound t using a bounded coordinate moving with t
    std::optional<int> best;
    auto consider = [&](int rc, int dc, std::optional<int> lo, std::optional<int> hi) {
      if (dc > 0 && lo) {
        int t = (rc - *lo) / dc;
        best = best ? std::min(*best, t) : t;
      } else if (dc < 0 && hi) {
        int t = (*hi - rc) / (-dc);
        best = best ? std::min(*best, t) : t;
      }
    };
    consider(r.i, even_deg_.i, gens.i_lo, gens.i_hi);
    consider(r.j, even_deg_.j, gens.j_lo, gens.j_hi);
    if (!best) throw std::logic_error("unbounded expansion: module support is not bounded along the " +
                                      to_string(kind_) + " generator direction");
    return *best;
  }

  template <class Fn>
  void compositions(int total, int k, std::vector<std::uint16_t>& ex, Fn&& fn) const {
    if (k == n_even_ - 1 || n_even_ == 0) {
      if (n_even_ == 0) {
        if (total == 0) fn(ex);
        return;
      }
      ex[k] = static_cast<std::uint16_t>(total);
      fn(ex);
      ex[k] = 0;
      return;
    }
    for (int a = 0; a <= total; ++a) {
      ex[k] = static_cast<std::uint16_t>(a);
      compositions(total - a, k + 1, ex, fn);
    }
    ex[k] = 0;
  }

  AlgebraKind kind_ = AlgebraKind::T;
  int e_ = 0;
  int f_ = 0;
  std::uint32_t p_ = 3;
  int n_even_ = 0;
  int n_odd_ = 0;
  Bidegree even_deg_{0, 0};
  Bidegree odd_deg_{0, 0};
};

inline AlgebraSpec make_algebra(AlgebraKind kind, int e, int f, std::uint32_t p) {
  return AlgebraSpec::make(kind, e, f, p);
}

inline AlgElement scalar_element(const AlgebraSpec& a, Residue c) {
  AlgElement x;
  a.accumulate(x, a.one(), c);
  return x;
}

}  // namespace koszulkit
