#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/field.hpp"
#include "terracini/linalg.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

inline constexpr std::uint64_t kDefaultSeed = 2001;

// Flagged cells whose matrix has at most this many rows and columns are
// re-run over the rationals when re-verification is requested.
inline constexpr std::size_t kExactReverifyMaxDim = 64;

// h+1 points on V_{n,d}; k+1 forms (k = 0: ordinary secant variety).
struct SecantQuery {
  unsigned n = 2;
  unsigned d = 2;
  unsigned h = 0;
  unsigned k = 0;
  unsigned trials = 3;
  std::uint64_t seed = kDefaultSeed;
  ArithmeticDomain domain;
  std::size_t size_guard = kDefaultMonomialGuard;
  // Re-run any cell with a positive prime-field defect over Q.
  bool reverify_flagged = false;

  // Throws std::invalid_argument unless n, d, trials >= 1 and h >= k.
  void validate() const;

  friend bool operator==(const SecantQuery&, const SecantQuery&) = default;
};

enum class Route { Direct, Segre, Both };

std::string to_string(Route route);
Route route_from_string(std::string_view s);

struct DefectReport {
  SecantQuery query;
  Route route = Route::Direct;
  long long expected_dim = 0;
  long long computed_dim = 0;
  long long defect = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t max_rank_observed = 0;
  std::vector<std::size_t> per_trial_ranks;
  // Dimension of the GL(k+1) fibre of the spanning-frames map. The direct
  // Jacobian's row and column counts exceed the two branches of the
  // Grassmann expected dimension by exactly this amount.
  long long frame_fiber_dim = 0;
  std::optional<long long> exact_defect;
  std::vector<std::string> warnings;

  friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

// min{(n+1)(h+1) - 1, r}
long long expected_dim_secant(long long n, long long r, long long h);

// min{(h+1)n + (k+1)(h-k), (k+1)(r-k)}
long long expected_dim_grassmann(long long n, long long r, long long k, long long h);

// Dimension of Sec_h of the Segre product P^k x V_{n,d} inside P^{(k+1)(r+1)-1}:
// min{(h+1)(k+n+1) - 1, (k+1)(r+1) - 1}.
long long expected_dim_segre_secant(long long n, long long r, long long k, long long h);

// Terracini: rank of the stacked affine tangent cones at h+1 random points.
// Requires query.k == 0.
DefectReport secant_dim(const SecantQuery& query);

// Rank deficiency of the Jacobian of the spanning-frames map.
DefectReport grassmann_defect_direct(const SecantQuery& query);

// Ordinary secant defect of the Segre product P^k x V_{n,d}.
DefectReport grassmann_defect_via_segre(const SecantQuery& query);

struct RouteComparison {
  DefectReport direct;
  DefectReport segre;
  bool agree = false;

  friend bool operator==(const RouteComparison&, const RouteComparison&) = default;
};

// Runs both routes on independent samples.
RouteComparison grassmann_defect_both(const SecantQuery& query);

// Random stream for one trial of one route. The secant route and the
// interpolation module share a tag so they see identical points.
enum class StreamTag : std::uint64_t { Secant = 1, Direct = 2, Segre = 3, Certificate = 4 };

RandomSource trial_stream(std::uint64_t seed, StreamTag tag, unsigned trial);

template <class F>
struct SegreSample {
  std::vector<Vec<F>> lambdas;  // h+1 vectors of length k+1
  std::vector<Vec<F>> points;   // h+1 distinct chart points
};

template <class F>
SegreSample<F> sample_segre(unsigned n, unsigned k, unsigned h, RandomSource& rng, const F& field) {
  SegreSample<F> s;
  s.points = sample_distinct_points(n, h + 1, rng, field);
  for (unsigned j = 0; j <= h; ++j) s.lambdas.push_back(sample_point(k + 1, rng, field));
  return s;
}

// (r+1) x (h+1)(n+1): the blocks (p | p_u) side by side.
template <class F>
DenseMatrix<typename F::Element> stack_tangent_blocks(const VeroneseChart& chart,
                                                      const std::vector<Vec<F>>& points,
                                                      const F& field) {
  std::vector<DenseMatrix<typename F::Element>> blocks;
  blocks.reserve(points.size());
  for (const auto& u : points)
    blocks.push_back(veronese_tangent_block(chart, std::span<const typename F::Element>(u), field));
  return hconcat(std::span<const DenseMatrix<typename F::Element>>(blocks));
}

// (k+1)(r+1) x (h+1)(k+1+n): Segre tangent blocks side by side.
template <class F>
DenseMatrix<typename F::Element> stack_segre_blocks(const SegreProductChart& chart,
                                                    const SegreSample<F>& sample, const F& field) {
  std::vector<DenseMatrix<typename F::Element>> blocks;
  blocks.reserve(sample.points.size());
  for (std::size_t j = 0; j < sample.points.size(); ++j)
    blocks.push_back(segre_tangent_block(chart, std::span<const typename F::Element>(sample.lambdas[j]),
                                         std::span<const typename F::Element>(sample.points[j]), field));
  return hconcat(std::span<const DenseMatrix<typename F::Element>>(blocks));
}

// The lambda^(j) as the columns of a (k+1) x (h+1) matrix.
template <class F>
DenseMatrix<typename F::Element> lambda_matrix(const SegreSample<F>& sample) {
  const std::size_t rows = sample.lambdas.empty() ? 0 : sample.lambdas.front().size();
  DenseMatrix<typename F::Element> m(rows, sample.lambdas.size());
  for (std::size_t j = 0; j < sample.lambdas.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = sample.lambdas[j][i];
  return m;
}

struct ScanConfig {
  unsigned n = 2;
  unsigned k = 1;
  unsigned trials = 3;
  std::uint64_t seed = kDefaultSeed;
  ArithmeticDomain domain;
  std::size_t size_guard = kDefaultMonomialGuard;
  bool reverify_flagged = true;
  unsigned jobs = 1;
};

struct ScanCell {
  unsigned d = 0;
  unsigned h = 0;
  std::optional<RouteComparison> result;
  std::string error;

  bool flagged() const { return result && (result->direct.defect > 0 || result->segre.defect > 0); }
};

// Seed owned by one grid cell: seed xor hash(n, d, k, h).
std::uint64_t cell_seed(std::uint64_t seed, unsigned n, unsigned d, unsigned k, unsigned h);

// Both routes over the (d, h) grid, in row-major grid order. Cell failures
// are recorded in the cell and do not stop the scan.
std::vector<ScanCell> scan(std::span<const unsigned> ds, std::span<const unsigned> hs, const ScanConfig& config);

// Smallest h for which the second branch of the Grassmann expected dimension
// is active, plus 2.
unsigned default_h_max(unsigned n, unsigned d, unsigned k);

}  // namespace terracini
