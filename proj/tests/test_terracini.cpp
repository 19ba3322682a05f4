#include <doctest.h>

#include "terracini/interpolation.hpp"
#include "terracini/terracini.hpp"

using namespace terracini;

namespace {

SecantQuery query(unsigned n, unsigned d, unsigned h, unsigned k = 0,
                  ArithmeticDomain dom = ArithmeticDomain::prime_field()) {
  SecantQuery q;
  q.n = n;
  q.d = d;
  q.h = h;
  q.k = k;
  q.domain = dom;
  return q;
}

}  // namespace

TEST_CASE("expected dimensions") {
  CHECK(expected_dim_secant(2, 5, 1) == 5);
  CHECK(expected_dim_secant(2, 9, 4) == 9);
  CHECK(expected_dim_secant(3, 19, 1) == 7);

  CHECK(expected_dim_grassmann(2, 9, 1, 4) == 16);
  CHECK(expected_dim_grassmann(2, 5, 0, 1) == 5);
  CHECK(expected_dim_grassmann(2, 5, 0, 1) == expected_dim_secant(2, 5, 1));
  CHECK(expected_dim_grassmann(2, 9, 1, 3) == 12);

  CHECK(expected_dim_segre_secant(2, 9, 1, 4) == 19);
  for (long long n = 1; n <= 3; ++n)
    for (long long r = n; r <= 20; ++r)
      for (long long h = 0; h <= 8; ++h) CHECK(expected_dim_grassmann(n, r, 0, h) == expected_dim_secant(n, r, h));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(query(2, 3, 1, 2).validate(), std::invalid_argument);
  auto q = query(2, 3, 1);
  q.trials = 0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  CHECK_THROWS_AS(secant_dim(query(2, 3, 2, 1)), std::invalid_argument);
  auto big = query(2, 200, 1);
  CHECK_THROWS_AS(secant_dim(big), GuardViolation);
}

TEST_CASE("secant_dim examples") {
  for (auto dom : {ArithmeticDomain::prime_field(), ArithmeticDomain::rational()}) {
    CAPTURE(dom.name());
    // Frozen from tests/oracles/expected.txt (sympy exact rank).
    auto v22 = secant_dim(query(2, 2, 1, 0, dom));
    CHECK(v22.computed_dim == 4);
    CHECK(v22.defect == 1);
    CHECK(v22.rows == 6);
    CHECK(v22.cols == 6);
    auto v13 = secant_dim(query(1, 3, 1, 0, dom));
    CHECK(v13.computed_dim == 3);
    CHECK(v13.defect == 0);
    auto v24 = secant_dim(query(2, 4, 4, 0, dom));
    CHECK(v24.computed_dim == 13);
    CHECK(v24.defect == 1);
  }
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned d = 1; d <= 4; ++d) {
      const auto rep = secant_dim(query(n, d, 0));
      CHECK(rep.computed_dim == n);
      CHECK(rep.defect == 0);
    }
}

TEST_CASE("grassmann_defect_direct examples") {
  const auto exceptional = grassmann_defect_direct(query(2, 3, 4, 1));
  CHECK(exceptional.defect == 1);
  CHECK(exceptional.rows == 20);
  CHECK(exceptional.cols == 20);
  CHECK(exceptional.expected_dim == 16);
  CHECK(exceptional.computed_dim == 15);
  CHECK(exceptional.frame_fiber_dim == 4);
  CHECK(grassmann_defect_direct(query(2, 3, 3, 1)).defect == 0);
  const auto k0 = grassmann_defect_direct(query(2, 2, 1, 0));
  CHECK(k0.defect == 1);
  CHECK(k0.defect == secant_dim(query(2, 2, 1)).defect);
}

TEST_CASE("grassmann_defect_via_segre examples") {
  const auto exceptional = grassmann_defect_via_segre(query(2, 3, 4, 1));
  CHECK(exceptional.expected_dim == 19);
  CHECK(exceptional.computed_dim == 18);
  CHECK(exceptional.defect == 1);
  CHECK(grassmann_defect_via_segre(query(2, 3, 3, 1)).defect == 0);
  // P1 x V_{1,2}: 6 x 6, full rank by the oracle.
  const auto small = grassmann_defect_via_segre(query(1, 2, 1, 1, ArithmeticDomain::rational()));
  CHECK(small.rows == 6);
  CHECK(small.cols == 6);
  CHECK(small.defect == 0);
}

TEST_CASE("routes agree on a small grid") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned d = 2; d <= 3; ++d)
      for (unsigned k = 1; k <= 2; ++k)
        for (unsigned h = k; h <= default_h_max(n, d, k); ++h) {
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(k);
          CAPTURE(h);
          const auto cmp = grassmann_defect_both(query(n, d, h, k));
          CHECK(cmp.agree);
          CHECK(cmp.direct.defect == cmp.segre.defect);
        }
}

TEST_CASE("report invariants: defect = expected - computed >= 0") {
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned h = 1; h <= 6; ++h) {
      const auto cmp = grassmann_defect_both(query(2, d, h, 1));
      for (const auto* rep : {&cmp.direct, &cmp.segre}) {
        CHECK(rep->defect >= 0);
        CHECK(rep->defect == rep->expected_dim - rep->computed_dim);
        CHECK(rep->computed_dim <= rep->expected_dim);
        CHECK(rep->per_trial_ranks.size() == 3);
      }
    }
}

TEST_CASE("monotonicity in h") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned d = 2; d <= 4; ++d) {
      long long prev = -1;
      for (unsigned h = 0; h <= 8; ++h) {
        const auto dim = secant_dim(query(n, d, h)).computed_dim;
        if (h > 0) {
          CHECK(dim >= prev);
          CHECK(dim - prev <= n + 1);
        }
        prev = dim;
      }
      for (unsigned k = 1; k <= 2; ++k) {
        long long prev_segre = -1;
        for (unsigned h = k; h <= k + 6; ++h) {
          const auto dim = grassmann_defect_via_segre(query(n, d, h, k)).computed_dim;
          if (h > k) {
            CHECK(dim >= prev_segre);
            CHECK(dim - prev_segre <= n + k + 1);
          }
          prev_segre = dim;
        }
      }
    }
}

TEST_CASE("three trials see the same maximum rank as ten") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned d = 2; d <= 4; ++d)
      for (unsigned k = 1; k <= 2; ++k)
        for (unsigned h = k; h <= default_h_max(n, d, k); ++h) {
          auto q3 = query(n, d, h, k);
          auto q10 = q3;
          q10.trials = 10;
          CHECK(grassmann_defect_via_segre(q3).max_rank_observed ==
                grassmann_defect_via_segre(q10).max_rank_observed);
        }
}

TEST_CASE("prime and rational domains agree on small instances") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned d = 2; d <= 3; ++d)
      for (unsigned k = 0; k <= 1; ++k)
        for (unsigned h = k; h <= k + 4; ++h) {
          const auto p = grassmann_defect_via_segre(query(n, d, h, k));
          if (p.rows > 50) continue;
          const auto q = grassmann_defect_via_segre(query(n, d, h, k, ArithmeticDomain::rational()));
          CHECK(p.defect == q.defect);
        }
}

TEST_CASE("flagged cells are re-verified over the rationals") {
  auto q = query(2, 3, 4, 1);
  q.reverify_flagged = true;
  const auto rep = grassmann_defect_via_segre(q);
  REQUIRE(rep.exact_defect.has_value());
  CHECK(*rep.exact_defect == 1);
  CHECK(rep.defect == 1);
  CHECK(rep.warnings.empty());

  auto clean = query(2, 3, 3, 1);
  clean.reverify_flagged = true;
  CHECK_FALSE(grassmann_defect_via_segre(clean).exact_defect.has_value());
}

TEST_CASE("default_h_max") {
  // n=2, d=3, k=1: (h+1)2 + 2(h-1) >= 16 first at h = 4.
  CHECK(default_h_max(2, 3, 1) == 6);
  // k = 0: (h+1)n + h >= r; V_{2,2}: 3h + 2 >= 5 at h = 1.
  CHECK(default_h_max(2, 2, 0) == 3);
  CHECK(default_h_max(3, 4, 2) == 19);
}

TEST_CASE("scan") {
  ScanConfig cfg;
  cfg.n = 2;
  cfg.k = 1;
  SUBCASE("only (3,4) is flagged for d in 2..6, h in 1..12") {
    const std::vector<unsigned> ds{2, 3, 4, 5, 6};
    std::vector<unsigned> hs;
    for (unsigned h = 1; h <= 12; ++h) hs.push_back(h);
    cfg.jobs = 4;
    const auto cells = scan(ds, hs, cfg);
    REQUIRE(cells.size() == 60);
    int flagged = 0;
    for (const auto& c : cells) {
      CHECK(c.error.empty());
      REQUIRE(c.result.has_value());
      CHECK(c.result->agree);
      if (c.flagged()) {
        ++flagged;
        CHECK(c.d == 3);
        CHECK(c.h == 4);
        CHECK(c.result->direct.defect == 1);
      }
    }
    CHECK(flagged == 1);
  }
  SUBCASE("empty h range") {
    const std::vector<unsigned> ds{2, 3};
    CHECK(scan(ds, std::span<const unsigned>{}, cfg).empty());
  }
  SUBCASE("k = 0 flags exactly the special double-point systems") {
    cfg.k = 0;
    const std::vector<unsigned> ds{2, 3, 4, 5};
    const std::vector<unsigned> hs{0, 1, 2, 3, 4, 5};
    const auto cells = scan(ds, hs, cfg);
    InterpConfig ic;
    for (const auto& c : cells) {
      REQUIRE(c.result.has_value());
      const auto special = interp_dim(c.d, c.h + 1, ic).dims.special;
      CAPTURE(c.d);
      CAPTURE(c.h);
      CHECK(c.flagged() == special);
    }
  }
  SUBCASE("cell errors are recorded, not thrown") {
    cfg.k = 2;
    const std::vector<unsigned> ds{2};
    const std::vector<unsigned> hs{1, 2};
    const auto cells = scan(ds, hs, cfg);
    REQUIRE(cells.size() == 2);
    CHECK_FALSE(cells[0].error.empty());
    CHECK_FALSE(cells[0].result.has_value());
    CHECK(cells[1].result.has_value());
  }
  SUBCASE("parallelism does not change results") {
    const std::vector<unsigned> ds{2, 3, 4};
    const std::vector<unsigned> hs{1, 2, 3, 4, 5};
    cfg.jobs = 1;
    const auto serial = scan(ds, hs, cfg);
    cfg.jobs = 7;
    const auto parallel = scan(ds, hs, cfg);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].d == parallel[i].d);
      CHECK(serial[i].h == parallel[i].h);
      CHECK(serial[i].result == parallel[i].result);
    }
  }
}
