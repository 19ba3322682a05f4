#include <doctest.h>

#include <set>
#include <utility>

#include "terracini/interpolation.hpp"
#include "terracini/linalg.hpp"

using namespace terracini;

TEST_CASE("virtual dimension") {
  CHECK(interpolation_virtual_dim(2, 2, 2) == -1);
  CHECK(interpolation_virtual_dim(2, 5, 6) == 2);
  CHECK(interpolation_virtual_dim(2, 3, 5) == -6);
  CHECK(interpolation_virtual_dim(2, 1, 0) == 2);
}

TEST_CASE("dimensions_from_rank") {
  const auto dims = dimensions_from_rank(2, 2, 2, 5);
  CHECK(dims.virtual_dim == -1);
  CHECK(dims.expected_dim == -1);
  CHECK(dims.actual_dim == 0);
  CHECK(dims.special);
  CHECK_FALSE(dimensions_from_rank(2, 3, 5, 10).special);
  CHECK(dimensions_from_rank(2, 3, 5, 10).actual_dim == -1);
}

TEST_CASE("interp_dim examples") {
  // Values frozen from tests/oracles/expected.txt.
  for (auto dom : {ArithmeticDomain::prime_field(), ArithmeticDomain::rational()}) {
    CAPTURE(dom.name());
    InterpConfig cfg;
    cfg.domain = dom;
    const auto conic = interp_dim(2, 2, cfg);
    CHECK(conic.dims.virtual_dim == -1);
    CHECK(conic.dims.actual_dim == 0);
    CHECK(conic.dims.special);

    const auto quintic = interp_dim(5, 6, cfg);
    CHECK(quintic.dims.virtual_dim == 2);
    CHECK(quintic.dims.actual_dim == 2);
    CHECK_FALSE(quintic.dims.special);

    const auto lines = interp_dim(1, 0, cfg);
    CHECK(lines.dims.actual_dim == 2);
    CHECK_FALSE(lines.dims.special);

    const auto quartic = interp_dim(4, 5, cfg);
    CHECK(quartic.dims.actual_dim == 0);
    CHECK(quartic.dims.special);
  }
}

TEST_CASE("cubics through five double points: reported, with the published value as a warning") {
  const auto res = interp_dim(3, 5, InterpConfig{});
  CHECK(res.dims.actual_dim == -1);
  CHECK_FALSE(res.dims.special);
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0].find("-1") != std::string::npos);
  CHECK_FALSE(reference_value_discrepancy(2, 3, 5, 0).has_value());
  CHECK(reference_value_discrepancy(2, 3, 5, -1).has_value());
  CHECK_FALSE(reference_value_discrepancy(2, 5, 6, 2).has_value());
}

TEST_CASE("special systems in the plane grid") {
  InterpConfig cfg;
  std::set<std::pair<unsigned, unsigned>> special;
  for (unsigned d = 1; d <= 6; ++d)
    for (unsigned s = 0; s <= 12; ++s) {
      const auto res = interp_dim(d, s, cfg);
      CHECK(res.dims.actual_dim >= res.dims.expected_dim);
      if (res.dims.special) {
        special.emplace(d, s);
        CHECK(res.dims.actual_dim == 0);
      }
    }
  CHECK(special == std::set<std::pair<unsigned, unsigned>>{{2, 2}, {4, 5}});
}

TEST_CASE("actual_dim is non-increasing in s") {
  InterpConfig cfg;
  for (unsigned d = 1; d <= 6; ++d) {
    long long prev = interp_dim(d, 0, cfg).dims.actual_dim;
    for (unsigned s = 1; s <= 12; ++s) {
      const long long cur = interp_dim(d, s, cfg).dims.actual_dim;
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("conditions rank is unchanged by relabelling and rescaling the points") {
  const PrimeField pf;
  const VeroneseChart chart(2, 4);
  auto rng = RandomSource(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto points = sample_distinct_points(2, 4, rng, pf);
    const auto base = rank(build_interpolation_system(chart, points, pf).conditions, pf);
    auto shuffled = points;
    std::swap(shuffled[0], shuffled[3]);
    std::swap(shuffled[1], shuffled[2]);
    CHECK(rank(build_interpolation_system(chart, shuffled, pf).conditions, pf) == base);
    // Multiplying the rows of a point's block by nonzero scalars is a row operation.
    auto sys = build_interpolation_system(chart, points, pf);
    for (std::size_t r = 0; r < sys.conditions.rows(); ++r) {
      const auto c = pf.sample_nonzero(rng);
      for (std::size_t col = 0; col < sys.conditions.cols(); ++col)
        sys.conditions(r, col) = pf.mul(c, sys.conditions(r, col));
    }
    CHECK(rank(sys.conditions, pf) == base);
  }
}

TEST_CASE("nonspecial for d >= 5") {
  InterpConfig cfg;
  for (unsigned d = 5; d <= 7; ++d)
    for (unsigned s = 0; s <= 14; ++s) CHECK_FALSE(interp_dim(d, s, cfg).dims.special);
}

TEST_CASE("duality_check examples") {
  InterpConfig cfg;
  const auto conics = duality_check(2, 1, cfg);
  CHECK(conics.r == 5);
  CHECK(conics.secant_dim == 4);
  CHECK(conics.interp_actual_dim == 0);
  CHECK(conics.agree);
  // Oracle: 6 double points impose 18 independent conditions on quintics,
  // 7 saturate the 21 coefficients.
  const auto q5 = duality_check(5, 5, cfg);
  CHECK(q5.secant_dim == 17);
  CHECK(q5.interp_actual_dim == 2);
  CHECK(q5.agree);
  const auto q6 = duality_check(5, 6, cfg);
  CHECK(q6.secant_dim == 20);
  CHECK(q6.interp_actual_dim == -1);
  CHECK(q6.agree);
}

TEST_CASE("duality holds on the full grid") {
  for (auto dom : {ArithmeticDomain::prime_field(), ArithmeticDomain::rational()}) {
    InterpConfig cfg;
    cfg.domain = dom;
    cfg.trials = dom.kind == ArithmeticDomain::Kind::Rational ? 1 : 3;
    for (unsigned d = 1; d <= 6; ++d)
      for (unsigned h = 0; h <= 10; ++h) {
        if (dom.kind == ArithmeticDomain::Kind::Rational && d > 4) continue;
        CAPTURE(d);
        CAPTURE(h);
        CHECK(duality_check(d, h, cfg).agree);
      }
  }
}
