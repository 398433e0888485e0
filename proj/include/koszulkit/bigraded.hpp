#pragma once

// Bidegrees, dimension tables of bigraded vector spaces, and the shift functors.
//
// Shift convention used everywhere in the library:
//   M[a]<b>^i_j = M^{i+a}_{j-b}
// so [1] moves against the cohomological index and <1> moves with the internal index.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace koszulkit {

inline constexpr const char* kShiftConvention = "M[a]<b>^i_j = M^{i+a}_{j-b}";

/// (cohomological degree i, internal degree j)
struct Bidegree {
  int i = 0;
  int j = 0;

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.i + b.i, a.j + b.j}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.i - b.i, a.j - b.j}; }
  friend Bidegree operator-(Bidegree a) { return {-a.i, -a.j}; }
  friend Bidegree operator*(int k, Bidegree a) { return {k * a.i, k * a.j}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline constexpr Bidegree kDifferentialDegree{1, 0};

inline std::string to_string(Bidegree b) {
  return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

/// Rectangle of bidegrees, inclusive on both ends.
struct Window {
  int i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;

  bool contains(Bidegree b) const { return b.i >= i_lo && b.i <= i_hi && b.j >= j_lo && b.j <= j_hi; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int i = i_lo; i <= i_hi; ++i)
      for (int j = j_lo; j <= j_hi; ++j) fn(Bidegree{i, j});
  }

  /// Parses "i0:i1,j0:j1".
  static Window parse(const std::string& text) {
    Window w;
    char c1, c2, c3;
    std::istringstream in(text);
    if (!(in >> w.i_lo >> c1 >> w.i_hi >> c2 >> w.j_lo >> c3 >> w.j_hi) || c1 != ':' || c2 != ',' ||
        c3 != ':' || w.i_lo > w.i_hi || w.j_lo > w.j_hi)
      throw std::invalid_argument("window must look like i0:i1,j0:j1, got '" + text + "'");
    in >> std::ws;
    if (!in.eof()) throw std::invalid_argument("trailing characters in window '" + text + "'");
    return w;
  }

  std::string str() const {
    return std::to_string(i_lo) + ":" + std::to_string(i_hi) + "," + std::to_string(j_lo) + ":" +
           std::to_string(j_hi);
  }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Default comparison window for the verification suites.
inline constexpr Window kStandardWindow{-5, 5, -8, 8};

/// Sparse table (i,j) -> dim. Zero entries are never stored.
class BigradedDims {
 public:
  BigradedDims() = default;
  BigradedDims(std::initializer_list<std::pair<const Bidegree, std::size_t>> init) {
    for (auto& [b, d] : init) add(b, d);
  }

  std::size_t operator()(Bidegree b) const {
    auto it = table_.find(b);
    return it == table_.end() ? 0 : it->second;
  }
  std::size_t at(int i, int j) const { return (*this)(Bidegree{i, j}); }

  void set(Bidegree b, std::size_t d) {
    if (d == 0)
      table_.erase(b);
    else
      table_[b] = d;
  }
  void add(Bidegree b, std::size_t d) { set(b, (*this)(b) + d); }

  bool empty() const { return table_.empty(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [b, d] : table_) t += d;
    return t;
  }
  const std::map<Bidegree, std::size_t>& entries() const { return table_; }

  BigradedDims restricted(const Window& w) const {
    BigradedDims out;
    for (auto& [b, d] : table_)
      if (w.contains(b)) out.set(b, d);
    return out;
  }

  /// Alternating sum over i of dims with internal degree j.
  long long euler_characteristic(int j) const {
    long long chi = 0;
    for (auto& [b, d] : table_)
      if (b.j == j) chi += (b.i % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    return chi;
  }

  friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

  std::optional<Bidegree> first_difference(const BigradedDims& other) const {
    auto a = table_.begin();
    auto b = other.table_.begin();
    while (a != table_.end() || b != other.table_.end()) {
      if (b == other.table_.end() || (a != table_.end() && a->first < b->first)) return a->first;
      if (a == table_.end() || b->first < a->first) return b->first;
      if (a->second != b->second) return a->first;
      ++a;
      ++b;
    }
    return std::nullopt;
  }

 private:
  std::map<Bidegree, std::size_t> table_;
};

/// Table of M[a]<b>: D'(i,j) = D(i+a, j-b).
inline BigradedDims shift(const BigradedDims& d, int a, int b) {
  BigradedDims out;
  for (auto& [deg, n] : d.entries()) out.set({deg.i - a, deg.j + b}, n);
  return out;
}

/// Table of the graded linear dual: D'(i,j) = D(-i,-j).
inline BigradedDims dual_dims(const BigradedDims& d) {
  BigradedDims out;
  for (auto& [deg, n] : d.entries()) out.set(-deg, n);
  return out;
}

/// Lexicographically sorted list of [i, j, dim] triples.
inline nlohmann::json to_json(const BigradedDims& d) {
  auto arr = nlohmann::json::array();
  for (auto& [b, n] : d.entries()) arr.push_back({b.i, b.j, n});
  return arr;
}

inline BigradedDims dims_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("dimension table must be a JSON array");
  BigradedDims d;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("table entries must be [i, j, dim]");
    d.add({t[0].get<int>(), t[1].get<int>()}, t[2].get<std::size_t>());
  }
  return d;
}

/// Human-readable Laurent-style rendering: sum of dim * u^i t^j.
inline std::string to_laurent(const BigradedDims& d) {
  if (d.empty()) return "0";
  std::string s;
  for (auto& [b, n] : d.entries()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(n) + "*u^" + std::to_string(b.i) + "*t^" + std::to_string(b.j);
  }
  return s;
}

/// Axis-aligned, possibly unbounded box of bidegrees. Missing bounds mean unbounded.
struct Box {
  std::optional<int> i_lo, i_hi, j_lo, j_hi;

  static Box point(Bidegree b) { return {b.i, b.i, b.j, b.j}; }
  static Box empty_box() { return {1, 0, 1, 0}; }

  bool is_empty() const {
    return (i_lo && i_hi && *i_lo > *i_hi) || (j_lo && j_hi && *j_lo > *j_hi);
  }
  bool contains(Bidegree b) const {
    return !(i_lo && b.i < *i_lo) && !(i_hi && b.i > *i_hi) && !(j_lo && b.j < *j_lo) &&
           !(j_hi && b.j > *j_hi);
  }
  bool bounded() const { return i_lo && i_hi && j_lo && j_hi; }

  Box translated(Bidegree d) const {
    if (is_empty()) return *this;
    auto mv = [](std::optional<int> x, int by) { return x ? std::optional<int>(*x + by) : std::nullopt; };
    return {mv(i_lo, d.i), mv(i_hi, d.i), mv(j_lo, d.j), mv(j_hi, d.j)};
  }
  Box negated() const {
    if (is_empty()) return *this;
    auto ng = [](std::optional<int> x) { return x ? std::optional<int>(-*x) : std::nullopt; };
    return {ng(i_hi), ng(i_lo), ng(j_hi), ng(j_lo)};
  }
  /// Minkowski sum.
  Box plus(const Box& o) const {
    if (is_empty() || o.is_empty()) return empty_box();
    auto sum = [](std::optional<int> a, std::optional<int> b) {
      return (a && b) ? std::optional<int>(*a + *b) : std::nullopt;
    };
    return {sum(i_lo, o.i_lo), sum(i_hi, o.i_hi), sum(j_lo, o.j_lo), sum(j_hi, o.j_hi)};
  }
  Box hull(const Box& o) const {
    if (is_empty()) return o;
    if (o.is_empty()) return *this;
    auto lo = [](std::optional<int> a, std::optional<int> b) {
      return (a && b) ? std::optional<int>(std::min(*a, *b)) : std::nullopt;
    };
    auto hi = [](std::optional<int> a, std::optional<int> b) {
      return (a && b) ? std::optional<int>(std::max(*a, *b)) : std::nullopt;
    };
    return {lo(i_lo, o.i_lo), hi(i_hi, o.i_hi), lo(j_lo, o.j_lo), hi(j_hi, o.j_hi)};
  }
};

}  // namespace koszulkit
