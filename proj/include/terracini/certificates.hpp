#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terracini/errors.hpp"
#include "terracini/field.hpp"
#include "terracini/linalg.hpp"
#include "terracini/terracini.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

// A hyperplane sum_{alpha,beta} a_{alpha beta} X_{alpha beta} = 0 of the
// Segre ambient space, as a (k+1) x (r+1) coefficient matrix.
template <class F>
struct HyperplaneCoefficients {
  DenseMatrix<typename F::Element> a;
};

// A k-dimensional linear system of forms g_alpha = sum_beta a_{alpha beta} p_beta
// with its parametrization by P^k, and the points and parameter values it was
// built against.
template <class F>
struct LinearSystemCertificate {
  unsigned k = 0;
  std::vector<Vec<F>> forms;  // k+1 coefficient vectors in chart order
  std::vector<Vec<F>> assigned_points;
  std::vector<Vec<F>> assigned_parameters;
  bool verified = false;
};

template <class F>
HyperplaneCoefficients<F> reshape_covector(std::span<const typename F::Element> covector, unsigned k,
                                           std::size_t block, const F& field) {
  if (covector.size() != (k + 1) * block)
    throw std::invalid_argument("covector length does not match (k+1)(r+1)");
  bool nonzero = false;
  for (const auto& x : covector) nonzero = nonzero || !field.is_zero(x);
  if (!nonzero) throw std::invalid_argument("zero covector does not define a hyperplane");
  HyperplaneCoefficients<F> h{DenseMatrix<typename F::Element>(k + 1, block)};
  for (unsigned alpha = 0; alpha <= k; ++alpha)
    for (std::size_t b = 0; b < block; ++b) h.a(alpha, b) = covector[alpha * block + b];
  return h;
}

// Every form vanishes at every assigned point, and at each point p^(j) the
// member sum_alpha lambda^(j)_alpha g_alpha has vanishing first partials.
template <class F>
bool verify_certificate(const VeroneseChart& chart, const LinearSystemCertificate<F>& cert, const F& field) {
  if (cert.forms.size() != cert.k + 1) return false;
  for (std::size_t j = 0; j < cert.assigned_points.size(); ++j) {
    const std::span<const typename F::Element> u(cert.assigned_points[j]);
    const auto p = veronese_eval(chart, u, field);
    const auto jac = veronese_jacobian(chart, u, field);
    for (const auto& g : cert.forms) {
      auto value = field.zero();
      for (std::size_t b = 0; b < chart.size(); ++b) value = field.add(value, field.mul(g[b], p[b]));
      if (!field.is_zero(value)) return false;
    }
    const auto& lambda = cert.assigned_parameters[j];
    for (unsigned gamma = 0; gamma < chart.n(); ++gamma) {
      auto value = field.zero();
      for (unsigned alpha = 0; alpha <= cert.k; ++alpha) {
        auto partial = field.zero();
        for (std::size_t b = 0; b < chart.size(); ++b)
          partial = field.add(partial, field.mul(cert.forms[alpha][b], jac(b, gamma)));
        value = field.add(value, field.mul(lambda[alpha], partial));
      }
      if (!field.is_zero(value)) return false;
    }
  }
  return true;
}

// Turns a left-null covector of the stacked Segre tangent matrix for `sample`
// into the linear system it defines, and verifies it against that sample.
// Throws std::invalid_argument for a zero or mis-sized covector and
// ConsistencyError if verification fails.
template <class F>
LinearSystemCertificate<F> extract_certificate(const SegreProductChart& chart, const SegreSample<F>& sample,
                                               std::span<const typename F::Element> covector, const F& field) {
  const auto& base = chart.base();
  const auto coeffs = reshape_covector(covector, chart.k(), base.size(), field);
  LinearSystemCertificate<F> cert;
  cert.k = chart.k();
  for (unsigned alpha = 0; alpha <= chart.k(); ++alpha) {
    const auto row = coeffs.a.row(alpha);
    cert.forms.emplace_back(row.begin(), row.end());
  }
  cert.assigned_points = sample.points;
  cert.assigned_parameters = sample.lambdas;
  cert.verified = verify_certificate(base, cert, field);
  if (!cert.verified)
    throw ConsistencyError("covector is not in the left null space: certificate conditions fail");
  return cert;
}

template <class F>
struct CertificateSet {
  SecantQuery query;
  SegreSample<F> sample;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  long long defect = 0;  // Segre-route defect at this sample
  std::vector<LinearSystemCertificate<F>> certificates;
};

// Uses the Segre-route sample with the largest rank over the query's trials
// and extracts one certificate per left-null basis vector.
template <class F>
CertificateSet<F> segre_certificates(const SecantQuery& query, const F& field) {
  query.validate();
  const SegreProductChart chart(query.k, VeroneseChart(query.n, query.d, query.size_guard));
  CertificateSet<F> set;
  set.query = query;
  DenseMatrix<typename F::Element> best_matrix;
  bool have = false;
  for (unsigned t = 0; t < query.trials; ++t) {
    auto rng = trial_stream(query.seed, StreamTag::Segre, t);
    auto sample = sample_segre(query.n, query.k, query.h, rng, field);
    auto m = stack_segre_blocks(chart, sample, field);
    const auto r = rank(m, field);
    if (!have || r > set.rank) {
      set.rank = r;
      set.sample = std::move(sample);
      best_matrix = std::move(m);
      have = true;
    }
  }
  set.rows = best_matrix.rows();
  set.cols = best_matrix.cols();
  set.defect = expected_dim_segre_secant(query.n, static_cast<long long>(chart.base().r()), query.k, query.h) -
               (static_cast<long long>(set.rank) - 1);
  for (const auto& v : left_null_space(best_matrix, field))
    set.certificates.push_back(
        extract_certificate(chart, set.sample, std::span<const typename F::Element>(v), field));
  return set;
}

// ---------------------------------------------------------------------------
// Sparse polynomials in the chart variables, for exact division.

// Graded lexicographic, largest first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

template <class F>
using SparsePoly = std::map<Exponent, typename F::Element, GrlexGreater>;

template <class F>
SparsePoly<F> poly_from_coefficients(const VeroneseChart& chart, const Vec<F>& coeffs, const F& field) {
  SparsePoly<F> p;
  for (std::size_t b = 0; b < chart.size(); ++b)
    if (!field.is_zero(coeffs[b])) p.emplace(chart.exponents()[b], coeffs[b]);
  return p;
}

inline unsigned total_degree(const Exponent& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

template <class F>
long long poly_degree(const SparsePoly<F>& p) {
  return p.empty() ? -1 : static_cast<long long>(total_degree(p.begin()->first));
}

template <class F>
struct PolyDivision {
  SparsePoly<F> quotient;
  SparsePoly<F> remainder;
};

// Division by a single polynomial in grlex order. The remainder is zero iff
// `divisor` divides `dividend`.
template <class F>
PolyDivision<F> divide(SparsePoly<F> dividend, const SparsePoly<F>& divisor, const F& field) {
  if (divisor.empty()) throw std::invalid_argument("division by the zero polynomial");
  const auto& [lead_exp, lead_coeff] = *divisor.begin();
  const auto lead_inv = field.inv(lead_coeff);
  PolyDivision<F> out;
  while (!dividend.empty()) {
    const auto [exp, coeff] = *dividend.begin();
    bool divisible = true;
    for (std::size_t i = 0; i < exp.size(); ++i) divisible = divisible && exp[i] >= lead_exp[i];
    if (!divisible) {
      out.remainder.emplace(exp, coeff);
      dividend.erase(dividend.begin());
      continue;
    }
    Exponent shift(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) shift[i] = exp[i] - lead_exp[i];
    const auto factor = field.mul(coeff, lead_inv);
    out.quotient.emplace(shift, factor);
    for (const auto& [e, c] : divisor) {
      Exponent prod(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + shift[i];
      auto& slot = dividend.try_emplace(prod, field.zero()).first->second;
      slot = field.sub(slot, field.mul(factor, c));
      if (field.is_zero(slot)) dividend.erase(prod);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plane configurations.

// Distinct points with no three on a line.
template <class F>
bool in_general_position(const std::vector<Vec<F>>& points, const F& field) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a] == points[b]) return false;
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        const auto& p = points[a];
        const auto& q = points[b];
        const auto& s = points[c];
        // det [1 p; 1 q; 1 s] = (q - p) x (s - p)
        const auto lhs = field.mul(field.sub(q[0], p[0]), field.sub(s[1], p[1]));
        const auto rhs = field.mul(field.sub(q[1], p[1]), field.sub(s[0], p[0]));
        if (field.equal(lhs, rhs)) return false;
      }
    }
  return true;
}

// Calls draw() for whole configurations until one is in general position.
template <class F, class Draw>
std::vector<Vec<F>> sample_general_plane_points(Draw&& draw, const F& field, unsigned& resamples,
                                                unsigned max_attempts = 32) {
  resamples = 0;
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vec<F>> points = draw();
    for (const auto& p : points)
      if (p.size() != 2) throw std::invalid_argument("plane points need two coordinates");
    if (in_general_position(points, field)) return points;
    ++resamples;
  }
  throw SamplingError("no plane configuration in general position after " + std::to_string(max_attempts) +
                      " attempts");
}

// ---------------------------------------------------------------------------
// The pencil of cubics certifying the defect of V_{2,3} for lines through
// five points.

struct V23Config {
  std::uint64_t seed = kDefaultSeed;
  ArithmeticDomain domain;
};

struct V23Report {
  std::uint64_t seed = 0;
  std::string domain;
  unsigned resamples = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  long long segre_expected_dim = 0;
  long long segre_computed_dim = 0;
  long long defect = 0;
  std::size_t certificate_count = 0;
  bool certificate_verified = false;
  bool fixed_conic_divides = false;        // the conic through the 5 points divides both generators
  bool moving_lines_through_points = false;  // member at lambda^(j) of the residual lines passes p^(j)
  std::vector<std::string> conic;             // coefficients in chart order
  std::vector<std::vector<std::string>> residual_lines;

  bool passed() const {
    return rank == 19 && defect == 1 && certificate_count == 1 && certificate_verified && fixed_conic_divides &&
           moving_lines_through_points;
  }
};

V23Report certify_v23(const V23Config& config);

// ---------------------------------------------------------------------------
// Case analysis for a hypothetical (1, h)-defect of V_{2,d} whose pencils
// share a base curve of degree m.

struct CaseCheckInput {
  long long d = 0;
  long long m = 0;
  long long h = 0;
  long long delta = 0;

  // 1 <= m <= d, delta >= 1, h >= 1.
  void validate() const;
};

enum class CaseInequality {
  BaseCurveCapacity,  // m(m+3)/2 >= h+1
  SecantPointCount,   // h+1 >= (d(d+3)+3-delta)/4
  MovingPartFiber,    // (d-m)(d-m+3)+1 >= (d(d+3)+3-delta)/4 + delta - 1
  ResidualDegree,     // d-m < (d+3)/5
};

std::string to_string(CaseInequality which);

struct CaseVerdict {
  bool consistent = false;
  std::optional<CaseInequality> violated;  // first failing inequality

  friend bool operator==(const CaseVerdict&, const CaseVerdict&) = default;
};

CaseVerdict case_check(const CaseCheckInput& input);

// Bounds on delta implied for fixed (d, m), eliminating h through the base
// curve capacity (or using the given h).
struct DeltaBounds {
  mpq_class lower;  // from the point-count inequalities
  mpq_class upper;  // from the moving-part fibre count
  bool contradictory() const { return lower > upper; }
};

DeltaBounds case_delta_bounds(long long d, long long m, std::optional<long long> h = std::nullopt);

}  // namespace terracini
