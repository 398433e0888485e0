#pragma once

// Exact arithmetic over GF(p) and dense row reduction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace koszulkit {

using Residue = std::uint32_t;

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in GF(p) for an odd prime p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Residue reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Residue inv(Residue a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
  }
  /// (-1)^k as a residue.
  Residue sign(long long k) const { return (k % 2 == 0) ? 1 : p_ - 1; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A single element of GF(p) carrying its modulus.
struct FieldElt {
  Residue value = 0;
  std::uint32_t modulus = 3;

  FieldElt() = default;
  FieldElt(long long v, std::uint32_t p) : value(PrimeField(p).reduce(v)), modulus(p) {}

  friend FieldElt operator+(FieldElt a, FieldElt b) {
    check(a, b);
    return {static_cast<long long>(PrimeField(a.modulus).add(a.value, b.value)), a.modulus};
  }
  friend FieldElt operator-(FieldElt a, FieldElt b) {
    check(a, b);
    return {static_cast<long long>(PrimeField(a.modulus).sub(a.value, b.value)), a.modulus};
  }
  friend FieldElt operator*(FieldElt a, FieldElt b) {
    check(a, b);
    return {static_cast<long long>(PrimeField(a.modulus).mul(a.value, b.value)), a.modulus};
  }
  FieldElt inverse() const {
    return {static_cast<long long>(PrimeField(modulus).inv(value)), modulus};
  }
  friend bool operator==(const FieldElt&, const FieldElt&) = default;

 private:
  static void check(const FieldElt& a, const FieldElt& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("mixed moduli");
  }
};

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix() : field_(3) {}
  Matrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, PrimeField field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void add_to(std::size_t r, std::size_t c, Residue v) {
    auto& x = (*this)(r, c);
    x = field_.add(x, v);
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(Residue s) const {
    Matrix m = *this;
    for (auto& v : m.data_) v = field_.mul(v, s);
    return m;
  }

  std::vector<Residue> column(std::size_t c) const {
    std::vector<Residue> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Residue> apply(std::span<const Residue> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Residue> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        acc += static_cast<std::uint64_t>((*this)(r, c)) * x[c];
        if ((c & 63) == 63) acc %= field_.modulus();
      }
      y[r] = static_cast<Residue>(acc % field_.modulus());
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.field_);
    const auto p = a.field_.modulus();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::uint64_t aik = a(i, k);
        if (!aik) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * b(k, j)) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j]);
    }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<Residue> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
inline RowEchelon row_reduce(Matrix m) {
  const auto& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Residue inv = F.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Residue factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c)) m(r, c) = F.sub(m(r, c), F.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  // Eliminate on the shorter side.
  if (a.rows() > a.cols()) return row_reduce(a.transpose()).pivots.size();
  return row_reduce(a).pivots.size();
}

/// Columns form a basis of ker(A).
inline Matrix kernel_basis(const Matrix& a) {
  const auto& F = a.field();
  auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.cols(), free_cols.size(), F);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k(ech.pivots[r], t) = F.neg(ech.reduced(r, fc));
  }
  return k;
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Residue>> solve(const Matrix& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const auto& F = a.field();
  Matrix aug(a.rows(), a.cols() + 1, F);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r] % F.modulus();
  }
  auto ech = row_reduce(std::move(aug));
  std::vector<Residue> x(a.cols(), 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

/// Requires span(sub) ⊆ span(space). Returns columns of `space` completing a basis of
/// span(sub) to a basis of span(space).
inline Matrix complement_in(const Matrix& sub, const Matrix& space) {
  const auto& F = space.field();
  Matrix joined(space.rows(), sub.cols() + space.cols(), F);
  for (std::size_t r = 0; r < space.rows(); ++r) {
    for (std::size_t c = 0; c < sub.cols(); ++c) joined(r, c) = sub(r, c);
    for (std::size_t c = 0; c < space.cols(); ++c) joined(r, sub.cols() + c) = space(r, c);
  }
  auto ech = row_reduce(joined);
  std::vector<std::size_t> chosen;
  for (auto c : ech.pivots)
    if (c >= sub.cols()) chosen.push_back(c - sub.cols());
  Matrix out(space.rows(), chosen.size(), F);
  for (std::size_t t = 0; t < chosen.size(); ++t)
    for (std::size_t r = 0; r < space.rows(); ++r) out(r, t) = space(r, chosen[t]);
  return out;
}

}  // namespace koszulkit
