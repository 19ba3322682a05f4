#pragma once

// Test-only oracles. Nothing here calls into the library's elimination or
// differentiation code.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Textbook Gauss-Jordan over Q on a row-of-rows matrix.
inline std::size_t rank(QMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Value of a monomial with exponent `e` at `u`.
inline mpq_class monomial(const std::vector<unsigned>& e, const std::vector<mpq_class>& u) {
  mpq_class v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned t = 0; t < e[i]; ++t) v *= u[i];
  return v;
}

// Coefficient of t^1 in f(u + t e_j), from exact evaluations of the
// degree-<=d polynomial in t at t = 0..d (Newton forward differences).
template <class Eval>
mpq_class linear_taylor_coefficient(Eval&& f, const std::vector<mpq_class>& u, std::size_t j, unsigned d) {
  std::vector<mpq_class> values;
  for (unsigned t = 0; t <= d; ++t) {
    auto shifted = u;
    shifted[j] += t;
    values.push_back(f(shifted));
  }
  // Newton coefficients c_i of sum c_i * t(t-1)...(t-i+1)/i!.
  std::vector<mpq_class> diffs = values;
  std::vector<mpq_class> newton;
  for (unsigned i = 0; i <= d; ++i) {
    newton.push_back(diffs[0]);
    for (std::size_t q = 0; q + 1 < diffs.size(); ++q) diffs[q] = diffs[q + 1] - diffs[q];
    diffs.pop_back();
  }
  // d/dt of the falling factorial t^(i)/i! at t = 0 is (-1)^(i-1)/i for i >= 1.
  mpq_class slope = 0;
  for (unsigned i = 1; i <= d; ++i) {
    mpq_class term = newton[i] / static_cast<long>(i);
    slope += (i % 2 == 1) ? term : mpq_class(-term);
  }
  return slope;
}

}  // namespace oracle
