#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "smc/exactmath.hpp"

namespace smc {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[r1 * cols_ + c], data_[r2 * cols_ + c]);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class Field>
struct Echelon {
  DenseMatrix<typename Field::Element> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. Pivots are chosen by smallest Field::size_of to
/// limit coefficient growth over the rationals.
template <class Field>
Echelon<Field> reduced_row_echelon(const Field& field, DenseMatrix<typename Field::Element> m) {
  using E = typename Field::Element;
  Echelon<Field> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (field.is_zero(m(i, c))) continue;
      std::size_t sz = Field::size_of(m(i, c));
      if (best == m.rows() || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    E inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      E factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!field.is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Field>
std::size_t rank(const Field& field, DenseMatrix<typename Field::Element> m) {
  return reduced_row_echelon(field, std::move(m)).rank();
}

/// Kernel basis of `m` in canonical reduced echelon form: each vector has a
/// leading 1 at a coordinate where every other basis vector is zero, and the
/// vectors are ordered by leading coordinate.
template <class Field>
std::vector<std::vector<typename Field::Element>> kernel_basis(const Field& field,
                                                               DenseMatrix<typename Field::Element> m) {
  using E = typename Field::Element;
  const std::size_t n = m.cols();
  Echelon<Field> ech = reduced_row_echelon(field, std::move(m));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<E>> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<E> v(n, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v[ech.pivot_columns[i]] = field.neg(ech.reduced(i, f));
    }
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  DenseMatrix<E> basis(raw.size(), n, field.zero());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = raw[i][j];
  }
  Echelon<Field> canon = reduced_row_echelon(field, std::move(basis));
  std::vector<std::vector<E>> out;
  for (std::size_t i = 0; i < canon.rank(); ++i) {
    auto row = canon.reduced.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

/// Fraction-free (Bareiss) elimination over the integers with column
/// skipping; every division is exact. Returns the rank over Q.
std::size_t integer_rank(DenseMatrix<BigInt> m);

/// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1ULL;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t mask = 1ULL << (c % 64);
    std::uint64_t& w = bits_[r * words_ + c / 64];
    w = value ? (w | mask) : (w & ~mask);
  }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }

  /// In-place Gauss-Jordan; returns pivot columns.
  std::vector<std::size_t> reduce();

  std::size_t rank() const;
  /// Kernel basis in canonical reduced echelon form (bit vectors of length cols()).
  std::vector<std::vector<bool>> kernel_basis() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace smc
