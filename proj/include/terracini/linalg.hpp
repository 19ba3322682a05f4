#pragma once

#include <cstddef>
#include <vector>

#include "terracini/field.hpp"

namespace terracini {

// Reduces `m` in place to reduced row echelon form and returns the pivot
// column of each nonzero row.
template <class F>
std::vector<std::size_t> rref_in_place(DenseMatrix<typename F::Element>& m, const F& field) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && field.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, pivot_row);
    const auto scale = field.inv(m(pivot_row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) = field.mul(m(pivot_row, j), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || field.is_zero(m(r, c))) continue;
      const auto factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(r, j) = field.sub(m(r, j), field.mul(factor, m(pivot_row, j)));
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

// Exact rank by forward elimination with nonzero pivoting.
template <class F>
std::size_t rank(DenseMatrix<typename F::Element> m, const F& field) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < m.rows() && field.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, rank);
    const auto pivot_inv = field.inv(m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (field.is_zero(m(r, c))) continue;
      const auto factor = field.mul(m(r, c), pivot_inv);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(r, j) = field.sub(m(r, j), field.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

// Rationals: rows are cleared of denominators and the integer matrix is
// reduced by fraction-free (Bareiss) elimination.
std::size_t rank(DenseMatrix<mpq_class> m, const RationalField& field);

// Fraction-free rank of an integer matrix.
std::size_t rank_bareiss(DenseMatrix<mpz_class> m);

// Basis of {x : m x = 0}.
template <class F>
std::vector<Vec<F>> right_null_space(const DenseMatrix<typename F::Element>& m, const F& field) {
  auto reduced = m;
  const auto pivots = rref_in_place(reduced, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of {v : v m = 0}; its size is rows - rank(m).
template <class F>
std::vector<Vec<F>> left_null_space(const DenseMatrix<typename F::Element>& m, const F& field) {
  return right_null_space(m.transpose(), field);
}

// v * m, as a row vector.
template <class F>
Vec<F> row_times_matrix(std::span<const typename F::Element> v,
                        const DenseMatrix<typename F::Element>& m, const F& field) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times_matrix: size mismatch");
  Vec<F> out(m.cols(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (field.is_zero(v[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = field.add(out[c], field.mul(v[r], m(r, c)));
  }
  return out;
}

// Stacks row vectors into a matrix.
template <class F>
DenseMatrix<typename F::Element> rows_to_matrix(const std::vector<Vec<F>>& rows, std::size_t cols) {
  DenseMatrix<typename F::Element> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("rows_to_matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace terracini
