#include "terracini/linalg.hpp"

namespace terracini {

std::size_t rank_bareiss(DenseMatrix<mpz_class> m) {
  mpz_class prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < m.rows() && sgn(m(sel, c)) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, rank);
    const mpz_class pivot = m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const mpz_class lead = m(r, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_class v = pivot * m(r, j) - lead * m(rank, j);
        // Exact: every entry is a minor of the original matrix.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m(r, j) = std::move(v);
      }
      m(r, c) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank(DenseMatrix<mpq_class> m, const RationalField&) {
  DenseMatrix<mpz_class> ints(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class denom_lcm = 1;
    for (const auto& x : m.row(r)) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_class scaled = m(r, c).get_num() * (denom_lcm / m(r, c).get_den());
      ints(r, c) = std::move(scaled);
    }
  }
  return rank_bareiss(std::move(ints));
}

}  // namespace terracini
