#include "smc/linalg.hpp"

namespace smc {

std::size_t integer_rank(DenseMatrix<BigInt> m) {
  std::size_t r = 0;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // Smallest nonzero entry as pivot keeps intermediate minors short.
    std::size_t best = m.rows();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      std::size_t sz = mpz_sizeinbase(m(i, c).get_mpz_t(), 2);
      if (best == m.rows() || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    const BigInt pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const BigInt lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        // m(i,j) = (pivot*m(i,j) - lead*m(r,j)) / prev, exact by Sylvester's identity.
        tmp = pivot * m(i, j);
        tmp -= lead * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

std::vector<std::size_t> BitMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = 1ULL << (c % 64);
    std::size_t p = r;
    while (p < rows_ && !(bits_[p * words_ + w] & mask)) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t k = 0; k < words_; ++k) std::swap(bits_[p * words_ + k], bits_[r * words_ + k]);
    }
    const std::uint64_t* pivot_row = bits_.data() + r * words_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint64_t* target = bits_.data() + i * words_;
      if (!(target[w] & mask)) continue;
      // Columns left of c are already clear in the pivot row.
      for (std::size_t k = w; k < words_; ++k) target[k] ^= pivot_row[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.reduce().size();
}

std::vector<std::vector<bool>> BitMatrix::kernel_basis() const {
  BitMatrix ech = *this;
  std::vector<std::size_t> pivots = ech.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::size_t nullity = cols_ - pivots.size();
  if (nullity == 0) return {};
  BitMatrix basis(nullity, cols_);
  std::size_t n = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    basis.set(n, f, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (ech.get(i, f)) basis.set(n, pivots[i], true);
    }
    ++n;
  }
  basis.reduce();
  std::vector<std::vector<bool>> out(nullity, std::vector<bool>(cols_, false));
  for (std::size_t i = 0; i < nullity; ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out[i][c] = basis.get(i, c);
  }
  return out;
}

}  // namespace smc
