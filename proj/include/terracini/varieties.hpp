#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/errors.hpp"
#include "terracini/field.hpp"

namespace terracini {

inline constexpr std::size_t kDefaultMonomialGuard = 10000;

using Exponent = std::vector<unsigned>;

// C(n + d, d), saturating at SIZE_MAX.
std::size_t monomial_count(unsigned n, unsigned d);

// All exponent vectors in `n` variables of total degree <= d, graded
// lexicographic: degree ascending, then lexicographically descending within
// a degree (u1^2, u1 u2, u2^2, ...). The constant monomial comes first.
std::vector<Exponent> graded_lex_exponents(unsigned n, unsigned d);

// Affine chart x_0 = 1 of the degree-d Veronese embedding of P^n:
// u |-> (u^e) over all monomials e of degree <= d.
class VeroneseChart {
 public:
  // Throws GuardViolation when C(n+d, d) exceeds `max_monomials`.
  VeroneseChart(unsigned n, unsigned d, std::size_t max_monomials = kDefaultMonomialGuard);

  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  // Number of coordinates, r + 1.
  std::size_t size() const { return exponents_.size(); }
  // Projective dimension r of the ambient space.
  std::size_t r() const { return exponents_.size() - 1; }

  const std::vector<Exponent>& exponents() const { return exponents_; }
  std::optional<std::size_t> index_of(const Exponent& e) const;

 private:
  unsigned n_;
  unsigned d_;
  std::vector<Exponent> exponents_;
  std::map<Exponent, std::size_t> index_;
};

// P^k x V in the chart lambda_0 = 1, embedded by Segre.
class SegreProductChart {
 public:
  SegreProductChart(unsigned k, VeroneseChart base) : k_(k), base_(std::move(base)) {}

  unsigned k() const { return k_; }
  const VeroneseChart& base() const { return base_; }
  // (k+1)(r+1).
  std::size_t ambient_size() const { return (k_ + 1) * base_.size(); }
  // Affine parameters (t_1..t_k | u_1..u_n).
  std::size_t parameter_count() const { return k_ + base_.n(); }

 private:
  unsigned k_;
  VeroneseChart base_;
};

namespace detail {

inline void require_point(const VeroneseChart& chart, std::size_t len) {
  if (len != chart.n())
    throw std::invalid_argument("point has " + std::to_string(len) + " coordinates, chart expects " +
                                std::to_string(chart.n()));
}

// powers[j][e] = u_j^e for e <= d.
template <class F>
std::vector<Vec<F>> power_table(const VeroneseChart& chart, std::span<const typename F::Element> u,
                                const F& field) {
  std::vector<Vec<F>> powers(chart.n());
  for (unsigned j = 0; j < chart.n(); ++j) {
    powers[j].reserve(chart.d() + 1);
    powers[j].push_back(field.one());
    for (unsigned e = 1; e <= chart.d(); ++e) powers[j].push_back(field.mul(powers[j].back(), u[j]));
  }
  return powers;
}

}  // namespace detail

template <class F>
Vec<F> veronese_eval(const VeroneseChart& chart, std::span<const typename F::Element> u, const F& field) {
  detail::require_point(chart, u.size());
  const auto powers = detail::power_table(chart, u, field);
  Vec<F> out;
  out.reserve(chart.size());
  for (const auto& e : chart.exponents()) {
    auto v = field.one();
    for (unsigned j = 0; j < chart.n(); ++j)
      if (e[j] != 0) v = field.mul(v, powers[j][e[j]]);
    out.push_back(std::move(v));
  }
  return out;
}

// (r+1) x n matrix of exact partial derivatives, from the exponent vectors.
template <class F>
DenseMatrix<typename F::Element> veronese_jacobian(const VeroneseChart& chart,
                                                   std::span<const typename F::Element> u,
                                                   const F& field) {
  detail::require_point(chart, u.size());
  const auto powers = detail::power_table(chart, u, field);
  DenseMatrix<typename F::Element> jac(chart.size(), chart.n(), field.zero());
  for (std::size_t b = 0; b < chart.size(); ++b) {
    const auto& e = chart.exponents()[b];
    for (unsigned col = 0; col < chart.n(); ++col) {
      if (e[col] == 0) continue;
      auto v = field.from_int(e[col]);
      for (unsigned j = 0; j < chart.n(); ++j) {
        const unsigned power = j == col ? e[j] - 1 : e[j];
        if (power != 0) v = field.mul(v, powers[j][power]);
      }
      jac(b, col) = std::move(v);
    }
  }
  return jac;
}

// Affine tangent cone (p | p_u1 ... p_un) at u, an (r+1) x (n+1) matrix.
template <class F>
DenseMatrix<typename F::Element> veronese_tangent_block(const VeroneseChart& chart,
                                                        std::span<const typename F::Element> u,
                                                        const F& field) {
  const auto p = veronese_eval(chart, u, field);
  const auto jac = veronese_jacobian(chart, u, field);
  DenseMatrix<typename F::Element> block(chart.size(), chart.n() + 1);
  for (std::size_t b = 0; b < chart.size(); ++b) {
    block(b, 0) = p[b];
    for (unsigned j = 0; j < chart.n(); ++j) block(b, j + 1) = jac(b, j);
  }
  return block;
}

// Column span of the Segre tangent space at (lambda, u):
//
//   [ p 0 .. 0 | lambda_0 p_u1 .. lambda_0 p_un ]
//   [ 0 p .. 0 | lambda_1 p_u1 .. lambda_1 p_un ]
//   [ ...                                       ]
//   [ 0 0 .. p | lambda_k p_u1 .. lambda_k p_un ]
//
// of shape (k+1)(r+1) x (k+1+n).
template <class F>
DenseMatrix<typename F::Element> segre_tangent_block(const SegreProductChart& chart,
                                                     std::span<const typename F::Element> lambda,
                                                     std::span<const typename F::Element> u,
                                                     const F& field) {
  const auto& base = chart.base();
  const unsigned k = chart.k();
  if (lambda.size() != k + 1)
    throw std::invalid_argument("segre_tangent_block: lambda must have k+1 entries");
  if (field.is_zero(lambda[0]))
    throw std::invalid_argument("segre_tangent_block: lambda_0 = 0 lies outside the chart");
  const auto p = veronese_eval(base, u, field);
  const auto jac = veronese_jacobian(base, u, field);
  const std::size_t block_rows = base.size();
  DenseMatrix<typename F::Element> m(chart.ambient_size(), k + 1 + base.n(), field.zero());
  for (unsigned alpha = 0; alpha <= k; ++alpha) {
    for (std::size_t b = 0; b < block_rows; ++b) {
      const std::size_t row = alpha * block_rows + b;
      m(row, alpha) = p[b];
      for (unsigned j = 0; j < base.n(); ++j) m(row, k + 1 + j) = field.mul(lambda[alpha], jac(b, j));
    }
  }
  return m;
}

// Jacobian of (lambda, p^(0..h)) |-> (sum_j lambda_ij p^(j))_i, laid out as
// the coefficient columns (p^(j) placed in each row block i, for every j)
// followed by the derivative columns lambda_ij p_um^(j).
//
// `lambda` is (k+1) x (h+1); `points` holds h+1 chart points. Result shape is
// (k+1)(r+1) x (h+1)(k+1+n).
template <class F>
DenseMatrix<typename F::Element> grassmann_jacobian(const VeroneseChart& chart, unsigned k, unsigned h,
                                                    const DenseMatrix<typename F::Element>& lambda,
                                                    const std::vector<Vec<F>>& points, const F& field) {
  if (lambda.rows() != k + 1 || lambda.cols() != h + 1)
    throw std::invalid_argument("grassmann_jacobian: lambda must be (k+1) x (h+1)");
  if (points.size() != h + 1) throw std::invalid_argument("grassmann_jacobian: need h+1 points");
  for (const auto& x : lambda.entries())
    if (field.is_zero(x)) throw std::invalid_argument("grassmann_jacobian: zero lambda entry");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b]) throw std::invalid_argument("grassmann_jacobian: repeated point");

  const std::size_t block_rows = chart.size();
  const unsigned n = chart.n();
  const std::size_t coeff_cols = std::size_t{h + 1} * (k + 1);
  DenseMatrix<typename F::Element> m((k + 1) * block_rows, coeff_cols + std::size_t{h + 1} * n, field.zero());
  for (unsigned j = 0; j <= h; ++j) {
    const auto p = veronese_eval(chart, std::span<const typename F::Element>(points[j]), field);
    const auto jac = veronese_jacobian(chart, std::span<const typename F::Element>(points[j]), field);
    for (unsigned i = 0; i <= k; ++i) {
      for (std::size_t b = 0; b < block_rows; ++b) {
        const std::size_t row = i * block_rows + b;
        m(row, std::size_t{j} * (k + 1) + i) = p[b];
        for (unsigned u = 0; u < n; ++u)
          m(row, coeff_cols + std::size_t{j} * n + u) = field.mul(lambda(i, j), jac(b, u));
      }
    }
  }
  return m;
}

// `count` points of `dim` nonzero coordinates, pairwise distinct. Redraws a
// duplicated point a bounded number of times.
template <class F>
std::vector<Vec<F>> sample_distinct_points(std::size_t dim, std::size_t count, RandomSource& rng,
                                           const F& field) {
  constexpr int kMaxRetries = 64;
  std::vector<Vec<F>> points;
  points.reserve(count);
  while (points.size() < count) {
    int attempt = 0;
    for (;;) {
      auto candidate = sample_point(dim, rng, field);
      bool fresh = true;
      for (const auto& q : points) fresh = fresh && !(q == candidate);
      if (fresh) {
        points.push_back(std::move(candidate));
        break;
      }
      if (++attempt == kMaxRetries) throw SamplingError("could not sample distinct points");
    }
  }
  return points;
}

}  // namespace terracini
