#include "terracini/certificates.hpp"

#include <sstream>

namespace terracini {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

template <class F>
typename F::Element evaluate(const SparsePoly<F>& p, const Vec<F>& u, const F& field) {
  auto total = field.zero();
  for (const auto& [e, c] : p) {
    auto term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned t = 0; t < e[i]; ++t) term = field.mul(term, u[i]);
    total = field.add(total, term);
  }
  return total;
}

template <class F>
std::string dump_matrix(const DenseMatrix<typename F::Element>& m, const F& field) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << field.to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

template <class F>
std::vector<std::string> coefficient_strings(const VeroneseChart& chart, const SparsePoly<F>& p, const F& field) {
  std::vector<std::string> out;
  for (const auto& e : chart.exponents()) {
    auto it = p.find(e);
    out.push_back(it == p.end() ? "0" : field.to_string(it->second));
  }
  return out;
}

template <class F>
V23Report run_v23(const V23Config& config, const F& field) {
  V23Report rep;
  rep.seed = config.seed;
  rep.domain = config.domain.name();

  const VeroneseChart cubics(2, 3);
  const VeroneseChart conics(2, 2);
  const VeroneseChart lines(2, 1);
  const SegreProductChart chart(1, cubics);

  auto rng = RandomSource(config.seed).derive(static_cast<std::uint64_t>(StreamTag::Certificate));
  SegreSample<F> sample;
  sample.points = sample_general_plane_points(
      [&] { return sample_distinct_points(2, 5, rng, field); }, field, rep.resamples);
  for (int j = 0; j < 5; ++j) sample.lambdas.push_back(sample_point(2, rng, field));

  const auto m = stack_segre_blocks(chart, sample, field);
  rep.rows = m.rows();
  rep.cols = m.cols();
  rep.rank = rank(m, field);
  rep.segre_expected_dim = expected_dim_segre_secant(2, static_cast<long long>(cubics.r()), 1, 4);
  rep.segre_computed_dim = static_cast<long long>(rep.rank) - 1;
  rep.defect = rep.segre_expected_dim - rep.segre_computed_dim;
  if (rep.rank != 19)
    throw ConsistencyError("stacked Segre tangent matrix has rank " + std::to_string(rep.rank) +
                           ", expected 19:\n" + dump_matrix(m, field));

  const auto null = left_null_space(m, field);
  rep.certificate_count = null.size();
  if (null.size() != 1)
    throw ConsistencyError("expected a single hyperplane, found " + std::to_string(null.size()));
  const auto cert = extract_certificate(chart, sample, std::span<const typename F::Element>(null.front()), field);
  rep.certificate_verified = cert.verified;

  // The conic through the five points.
  DenseMatrix<typename F::Element> through(5, conics.size());
  for (std::size_t j = 0; j < 5; ++j) {
    const auto row = veronese_eval(conics, std::span<const typename F::Element>(sample.points[j]), field);
    for (std::size_t c = 0; c < conics.size(); ++c) through(j, c) = row[c];
  }
  const auto conic_space = right_null_space(through, field);
  if (conic_space.size() != 1)
    throw ConsistencyError("five points in general position lie on " + std::to_string(conic_space.size()) +
                           " independent conics");
  const auto conic = poly_from_coefficients(conics, conic_space.front(), field);
  rep.conic = coefficient_strings(conics, conic, field);

  rep.fixed_conic_divides = true;
  std::vector<SparsePoly<F>> residual;
  for (const auto& g : cert.forms) {
    auto division = divide(poly_from_coefficients(cubics, g, field), conic, field);
    rep.fixed_conic_divides =
        rep.fixed_conic_divides && division.remainder.empty() && poly_degree<F>(division.quotient) <= 1;
    rep.residual_lines.push_back(coefficient_strings(lines, division.quotient, field));
    residual.push_back(std::move(division.quotient));
  }

  rep.moving_lines_through_points = rep.fixed_conic_divides;
  for (std::size_t j = 0; j < 5 && rep.moving_lines_through_points; ++j) {
    auto value = field.zero();
    for (std::size_t alpha = 0; alpha < residual.size(); ++alpha)
      value = field.add(value, field.mul(sample.lambdas[j][alpha], evaluate(residual[alpha], sample.points[j], field)));
    rep.moving_lines_through_points = field.is_zero(value);
  }
  return rep;
}

}  // namespace

V23Report certify_v23(const V23Config& config) {
  return visit_domain(config.domain, [&](const auto& field) { return run_v23(config, field); });
}

void CaseCheckInput::validate() const {
  if (m < 1 || m > d) throw std::invalid_argument("case_check: need 1 <= m <= d");
  if (delta < 1) throw std::invalid_argument("case_check: need delta >= 1");
  if (h < 1) throw std::invalid_argument("case_check: need h >= 1");
}

std::string to_string(CaseInequality which) {
  switch (which) {
    case CaseInequality::BaseCurveCapacity: return "base-curve-capacity";
    case CaseInequality::SecantPointCount: return "secant-point-count";
    case CaseInequality::MovingPartFiber: return "moving-part-fiber";
    case CaseInequality::ResidualDegree: return "residual-degree";
  }
  return "unknown";
}

CaseVerdict case_check(const CaseCheckInput& input) {
  input.validate();
  const mpq_class d(static_cast<long>(input.d));
  const mpq_class m(static_cast<long>(input.m));
  const mpq_class h(static_cast<long>(input.h));
  const mpq_class delta(static_cast<long>(input.delta));

  const mpq_class point_threshold = (d * (d + 3) + 3 - delta) / 4;
  const mpq_class base_capacity = m * (m + 3) / 2;
  const mpq_class moving_left = (d - m) * (d - m + 3) + 1;
  const mpq_class moving_right = point_threshold + delta - 1;
  const mpq_class residual_bound = (d + 3) / 5;

  auto fail = [](CaseInequality which) { return CaseVerdict{false, which}; };
  if (!(base_capacity >= h + 1)) return fail(CaseInequality::BaseCurveCapacity);
  if (!(h + 1 >= point_threshold)) return fail(CaseInequality::SecantPointCount);
  if (!(moving_left >= moving_right)) return fail(CaseInequality::MovingPartFiber);
  if (!(d - m < residual_bound)) return fail(CaseInequality::ResidualDegree);
  return CaseVerdict{true, std::nullopt};
}

DeltaBounds case_delta_bounds(long long d_in, long long m_in, std::optional<long long> h) {
  const mpq_class d(static_cast<long>(d_in));
  const mpq_class m(static_cast<long>(m_in));
  // Largest admissible h+1 is the base curve capacity m(m+3)/2.
  const mpq_class points = h ? mpq_class(static_cast<long>(*h + 1)) : mpq_class(m * (m + 3) / 2);
  DeltaBounds b;
  b.lower = d * (d + 3) + 3 - 4 * points;
  b.upper = (4 * ((d - m) * (d - m + 3) + 1) - d * (d + 3) + 1) / 3;
  b.lower.canonicalize();
  b.upper.canonicalize();
  return b;
}

}  // namespace terracini
