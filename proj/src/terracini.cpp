#include "terracini/terracini.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace terracini {

void SecantQuery::validate() const {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (d == 0) throw std::invalid_argument("d must be >= 1");
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (h < k) throw std::invalid_argument("h must be >= k (a k-plane needs k+1 spanning points)");
}

std::string to_string(Route route) {
  switch (route) {
    case Route::Direct: return "direct";
    case Route::Segre: return "segre";
    case Route::Both: return "both";
  }
  return "direct";
}

Route route_from_string(std::string_view s) {
  if (s == "direct") return Route::Direct;
  if (s == "segre") return Route::Segre;
  if (s == "both") return Route::Both;
  throw std::invalid_argument("unknown route '" + std::string(s) + "'");
}

long long expected_dim_secant(long long n, long long r, long long h) {
  return std::min((n + 1) * (h + 1) - 1, r);
}

long long expected_dim_grassmann(long long n, long long r, long long k, long long h) {
  return std::min((h + 1) * n + (k + 1) * (h - k), (k + 1) * (r - k));
}

long long expected_dim_segre_secant(long long n, long long r, long long k, long long h) {
  return std::min((h + 1) * (k + n + 1) - 1, (k + 1) * (r + 1) - 1);
}

RandomSource trial_stream(std::uint64_t seed, StreamTag tag, unsigned trial) {
  return RandomSource(seed).derive(static_cast<std::uint64_t>(tag)).derive(trial);
}

namespace {

struct RankRun {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> ranks;

  std::size_t max_rank() const { return *std::max_element(ranks.begin(), ranks.end()); }
};

template <class BuildMatrix>
RankRun run_trials(const SecantQuery& q, BuildMatrix&& build) {
  RankRun run;
  visit_domain(q.domain, [&](const auto& field) {
    for (unsigned t = 0; t < q.trials; ++t) {
      auto m = build(t, field);
      run.rows = m.rows();
      run.cols = m.cols();
      run.ranks.push_back(rank(std::move(m), field));
    }
  });
  return run;
}

DefectReport base_report(const SecantQuery& q, Route route, const RankRun& run) {
  DefectReport rep;
  rep.query = q;
  rep.route = route;
  rep.rows = run.rows;
  rep.cols = run.cols;
  rep.per_trial_ranks = run.ranks;
  rep.max_rank_observed = run.max_rank();
  return rep;
}

// Re-runs a flagged prime-field report over Q and keeps the smaller defect.
// Any sampled rank, in either domain, is a lower bound for the generic rank
// in characteristic zero.
template <class Compute>
void reverify(DefectReport& rep, Compute&& compute) {
  const auto& q = rep.query;
  if (!q.reverify_flagged || rep.defect == 0 || q.domain.is_rational()) return;
  if (std::max(rep.rows, rep.cols) > kExactReverifyMaxDim) {
    rep.warnings.push_back("defect not re-verified over Q: matrix exceeds " +
                           std::to_string(kExactReverifyMaxDim) + " rows or columns");
    return;
  }
  SecantQuery exact = q;
  exact.domain = ArithmeticDomain::rational();
  exact.reverify_flagged = false;
  const DefectReport other = compute(exact);
  rep.exact_defect = other.defect;
  if (other.defect < rep.defect) {
    rep.warnings.push_back("prime-field samples under-estimated the generic rank; exact re-run lowered defect from " +
                           std::to_string(rep.defect) + " to " + std::to_string(other.defect));
    rep.computed_dim += rep.defect - other.defect;
    rep.defect = other.defect;
    rep.max_rank_observed = std::max(rep.max_rank_observed, other.max_rank_observed);
  } else if (other.defect > rep.defect) {
    rep.warnings.push_back("exact re-run observed a larger defect (" + std::to_string(other.defect) +
                           "); keeping the prime-field value");
  }
}

DefectReport secant_dim_unverified(const SecantQuery& q) {
  q.validate();
  if (q.k != 0) throw std::invalid_argument("secant_dim requires k = 0");
  const VeroneseChart chart(q.n, q.d, q.size_guard);
  auto run = run_trials(q, [&](unsigned t, const auto& field) {
    auto rng = trial_stream(q.seed, StreamTag::Secant, t);
    const auto points = sample_distinct_points(q.n, q.h + 1, rng, field);
    return stack_tangent_blocks(chart, points, field);
  });
  auto rep = base_report(q, Route::Direct, run);
  rep.expected_dim = expected_dim_secant(q.n, static_cast<long long>(chart.r()), q.h);
  rep.computed_dim = static_cast<long long>(rep.max_rank_observed) - 1;
  rep.defect = rep.expected_dim - rep.computed_dim;
  return rep;
}

DefectReport direct_unverified(const SecantQuery& q) {
  q.validate();
  const VeroneseChart chart(q.n, q.d, q.size_guard);
  auto run = run_trials(q, [&](unsigned t, const auto& field) {
    auto rng = trial_stream(q.seed, StreamTag::Direct, t);
    const auto sample = sample_segre(q.n, q.k, q.h, rng, field);
    return grassmann_jacobian(chart, q.k, q.h, lambda_matrix(sample), sample.points, field);
  });
  auto rep = base_report(q, Route::Direct, run);
  const long long k1 = q.k + 1;
  rep.frame_fiber_dim = k1 * k1;
  rep.expected_dim = expected_dim_grassmann(q.n, static_cast<long long>(chart.r()), q.k, q.h);
  rep.defect = static_cast<long long>(std::min(rep.rows, rep.cols)) - static_cast<long long>(rep.max_rank_observed);
  rep.computed_dim = rep.expected_dim - rep.defect;
  return rep;
}

DefectReport segre_unverified(const SecantQuery& q) {
  q.validate();
  const SegreProductChart chart(q.k, VeroneseChart(q.n, q.d, q.size_guard));
  auto run = run_trials(q, [&](unsigned t, const auto& field) {
    auto rng = trial_stream(q.seed, StreamTag::Segre, t);
    const auto sample = sample_segre(q.n, q.k, q.h, rng, field);
    return stack_segre_blocks(chart, sample, field);
  });
  auto rep = base_report(q, Route::Segre, run);
  rep.expected_dim = expected_dim_segre_secant(q.n, static_cast<long long>(chart.base().r()), q.k, q.h);
  rep.computed_dim = static_cast<long long>(rep.max_rank_observed) - 1;
  rep.defect = rep.expected_dim - rep.computed_dim;
  return rep;
}

}  // namespace

DefectReport secant_dim(const SecantQuery& query) {
  auto rep = secant_dim_unverified(query);
  reverify(rep, secant_dim_unverified);
  return rep;
}

DefectReport grassmann_defect_direct(const SecantQuery& query) {
  auto rep = direct_unverified(query);
  reverify(rep, direct_unverified);
  return rep;
}

DefectReport grassmann_defect_via_segre(const SecantQuery& query) {
  auto rep = segre_unverified(query);
  reverify(rep, segre_unverified);
  return rep;
}

RouteComparison grassmann_defect_both(const SecantQuery& query) {
  RouteComparison cmp;
  cmp.direct = grassmann_defect_direct(query);
  cmp.segre = grassmann_defect_via_segre(query);
  cmp.agree = cmp.direct.defect == cmp.segre.defect;
  return cmp;
}

std::uint64_t cell_seed(std::uint64_t seed, unsigned n, unsigned d, unsigned k, unsigned h) {
  const std::uint64_t packed = (std::uint64_t{n} << 48) ^ (std::uint64_t{d} << 32) ^ (std::uint64_t{k} << 16) ^ h;
  return seed ^ mix64(packed);
}

std::vector<ScanCell> scan(std::span<const unsigned> ds, std::span<const unsigned> hs, const ScanConfig& config) {
  std::vector<ScanCell> cells;
  cells.reserve(ds.size() * hs.size());
  for (auto d : ds)
    for (auto h : hs) cells.push_back(ScanCell{d, h, std::nullopt, {}});

  auto evaluate = [&](ScanCell& cell) {
    SecantQuery q;
    q.n = config.n;
    q.d = cell.d;
    q.h = cell.h;
    q.k = config.k;
    q.trials = config.trials;
    q.seed = cell_seed(config.seed, config.n, cell.d, config.k, cell.h);
    q.domain = config.domain;
    q.size_guard = config.size_guard;
    q.reverify_flagged = config.reverify_flagged;
    try {
      cell.result = grassmann_defect_both(q);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size())));
  if (jobs <= 1) {
    for (auto& cell : cells) evaluate(cell);
    return cells;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) evaluate(cells[i]);
      });
    }
  }
  return cells;
}

unsigned default_h_max(unsigned n, unsigned d, unsigned k) {
  const long long r = static_cast<long long>(monomial_count(n, d)) - 1;
  const long long second = (k + 1LL) * (r - k);
  long long h = k;
  while ((h + 1) * n + (k + 1LL) * (h - k) < second) ++h;
  return static_cast<unsigned>(h + 2);
}

}  // namespace terracini
