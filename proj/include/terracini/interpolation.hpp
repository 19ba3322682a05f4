#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terracini/field.hpp"
#include "terracini/terracini.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

// Degree-d hypersurfaces in P^n through s assigned double points, as the
// matrix of s(n+1) linear conditions (value and the n first partials at each
// point, in the chart x_0 = 1) on the C(n+d, d) coefficients.
template <class F>
struct InterpolationSystem {
  unsigned n = 2;
  unsigned d = 0;
  std::vector<Vec<F>> points;
  DenseMatrix<typename F::Element> conditions;
};

template <class F>
InterpolationSystem<F> build_interpolation_system(const VeroneseChart& chart, std::vector<Vec<F>> points,
                                                  const F& field) {
  InterpolationSystem<F> sys;
  sys.n = chart.n();
  sys.d = chart.d();
  sys.conditions = DenseMatrix<typename F::Element>(points.size() * (chart.n() + 1), chart.size(), field.zero());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::span<const typename F::Element> u(points[i]);
    const auto value = veronese_eval(chart, u, field);
    const auto jac = veronese_jacobian(chart, u, field);
    const std::size_t base = i * (chart.n() + 1);
    for (std::size_t c = 0; c < chart.size(); ++c) {
      sys.conditions(base, c) = value[c];
      for (unsigned j = 0; j < chart.n(); ++j) sys.conditions(base + 1 + j, c) = jac(c, j);
    }
  }
  sys.points = std::move(points);
  return sys;
}

struct SystemDimensions {
  long long virtual_dim = 0;   // C(n+d, d) - 1 - (n+1)s, possibly below -1
  long long expected_dim = 0;  // max(virtual_dim, -1)
  long long actual_dim = 0;    // projective; -1 is the empty system
  bool special = false;        // actual_dim > expected_dim

  friend bool operator==(const SystemDimensions&, const SystemDimensions&) = default;
};

long long interpolation_virtual_dim(unsigned n, unsigned d, unsigned s);

// Dimensions of L_{n,d}(2^s) given the rank of its conditions matrix.
SystemDimensions dimensions_from_rank(unsigned n, unsigned d, unsigned s, std::size_t rank);

struct InterpConfig {
  unsigned n = 2;
  unsigned trials = 3;
  std::uint64_t seed = kDefaultSeed;
  ArithmeticDomain domain;
  std::size_t size_guard = kDefaultMonomialGuard;
};

struct InterpResult {
  unsigned n = 2;
  unsigned d = 0;
  unsigned s = 0;
  SystemDimensions dims;
  std::vector<std::size_t> per_trial_ranks;
  std::vector<std::string> warnings;
};

// Dimension of L_{n,d}(2^s) at random points. The largest observed rank is
// used, since an unlucky sample can only lose rank.
InterpResult interp_dim(unsigned d, unsigned s, const InterpConfig& config);

struct DualityResult {
  unsigned d = 0;
  unsigned h = 0;
  long long r = 0;
  long long secant_dim = 0;         // dim Sec_h(V_{n,d}) from stacked tangent blocks
  long long interp_actual_dim = 0;  // dim L_{n,d}(2^{h+1}) at the same points
  bool agree = false;
};

// Checks dim Sec_h(V_{n,d}) = r - (dim L_{n,d}(2^{h+1}) + 1) with both sides
// computed from the same sampled points, trial by trial.
DualityResult duality_check(unsigned d, unsigned h, const InterpConfig& config);

// Published values of dim L_{n,d}(2^s) that disagree with `actual_dim`, as a
// human-readable warning.
std::optional<std::string> reference_value_discrepancy(unsigned n, unsigned d, unsigned s, long long actual_dim);

}  // namespace terracini
