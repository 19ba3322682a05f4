#include "terracini/interpolation.hpp"

#include <algorithm>
#include <array>

#include "terracini/linalg.hpp"

namespace terracini {

long long interpolation_virtual_dim(unsigned n, unsigned d, unsigned s) {
  return static_cast<long long>(monomial_count(n, d)) - 1 - static_cast<long long>(n + 1) * s;
}

SystemDimensions dimensions_from_rank(unsigned n, unsigned d, unsigned s, std::size_t rank) {
  SystemDimensions dims;
  dims.virtual_dim = interpolation_virtual_dim(n, d, s);
  dims.expected_dim = std::max(dims.virtual_dim, -1LL);
  dims.actual_dim = static_cast<long long>(monomial_count(n, d)) - static_cast<long long>(rank) - 1;
  dims.special = dims.actual_dim > dims.expected_dim;
  return dims;
}

InterpResult interp_dim(unsigned d, unsigned s, const InterpConfig& config) {
  if (d == 0) throw std::invalid_argument("interp_dim: d must be >= 1");
  if (config.trials == 0) throw std::invalid_argument("interp_dim: trials must be >= 1");
  const VeroneseChart chart(config.n, d, config.size_guard);
  InterpResult res;
  res.n = config.n;
  res.d = d;
  res.s = s;
  visit_domain(config.domain, [&](const auto& field) {
    for (unsigned t = 0; t < config.trials; ++t) {
      auto rng = trial_stream(config.seed, StreamTag::Secant, t);
      auto sys = build_interpolation_system(chart, sample_distinct_points(config.n, s, rng, field), field);
      res.per_trial_ranks.push_back(rank(std::move(sys.conditions), field));
    }
  });
  const auto best = *std::max_element(res.per_trial_ranks.begin(), res.per_trial_ranks.end());
  res.dims = dimensions_from_rank(config.n, d, s, best);
  if (auto w = reference_value_discrepancy(config.n, d, s, res.dims.actual_dim)) res.warnings.push_back(*w);
  return res;
}

DualityResult duality_check(unsigned d, unsigned h, const InterpConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("duality_check: trials must be >= 1");
  const VeroneseChart chart(config.n, d, config.size_guard);
  DualityResult res;
  res.d = d;
  res.h = h;
  res.r = static_cast<long long>(chart.r());
  res.agree = true;
  long long best_secant = -1;
  long long best_interp = static_cast<long long>(chart.size());
  visit_domain(config.domain, [&](const auto& field) {
    for (unsigned t = 0; t < config.trials; ++t) {
      auto rng = trial_stream(config.seed, StreamTag::Secant, t);
      const auto points = sample_distinct_points(config.n, h + 1, rng, field);
      const long long sec = static_cast<long long>(rank(stack_tangent_blocks(chart, points, field), field)) - 1;
      auto sys = build_interpolation_system(chart, points, field);
      const auto dims = dimensions_from_rank(config.n, d, h + 1, rank(std::move(sys.conditions), field));
      res.agree = res.agree && sec == res.r - (dims.actual_dim + 1);
      best_secant = std::max(best_secant, sec);
      best_interp = std::min(best_interp, dims.actual_dim);
    }
  });
  res.secant_dim = best_secant;
  res.interp_actual_dim = best_interp;
  res.agree = res.agree && res.secant_dim == res.r - (res.interp_actual_dim + 1);
  return res;
}

namespace {

struct ReferenceValue {
  unsigned n, d, s;
  long long dim;
  const char* source;
};

// Values quoted in the literature on plane double-point systems.
constexpr std::array<ReferenceValue, 1> kReferenceValues{{
    {2, 3, 5, 0, "quoted for plane cubics with 5 general double points"},
}};

}  // namespace

std::optional<std::string> reference_value_discrepancy(unsigned n, unsigned d, unsigned s, long long actual_dim) {
  for (const auto& ref : kReferenceValues) {
    if (ref.n == n && ref.d == d && ref.s == s && ref.dim != actual_dim)
      return "dim L_{" + std::to_string(n) + "," + std::to_string(d) + "}(2^" + std::to_string(s) + ") = " +
             std::to_string(ref.dim) + " is " + ref.source + ", but the exact rank gives actual_dim " +
             std::to_string(actual_dim);
  }
  return std::nullopt;
}

}  // namespace terracini
