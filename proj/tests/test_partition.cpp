#include <splinedict/partition.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace splinedict;

TEST_SUITE("partition") {
  TEST_CASE("interval_cells counts exactly and rejects misfits") {
    CHECK(interval_cells(0.0, 1.0, 0.25) == 4);
    CHECK(interval_cells(0.0, 1.0, 0.1) == 10);  // non-representable step still lands
    CHECK(interval_cells(-2.0, 2.0, 1.0) == 4);
    CHECK(interval_cells(0.0, 4.0 + 1.0 / 256, 1.0 / 256) == 1025);
    CHECK_THROWS_AS((void)interval_cells(0.0, 1.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS((void)interval_cells(0.0, 1.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS((void)interval_cells(1.0, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)interval_cells(0.0, 1.0, -0.25), std::invalid_argument);
  }

  TEST_CASE("equidistant_points closures") {
    const std::vector<double> closed = equidistant_points(-2.0, 2.0, 1.0, Closure::closed);
    CHECK(closed == std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0});
    CHECK(equidistant_points(-2.0, 2.0, 1.0, Closure::open) ==
          std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(equidistant_points(-2.0, 2.0, 1.0, Closure::left_open) ==
          std::vector<double>{-1.0, 0.0, 1.0, 2.0});
    CHECK(equidistant_points(-2.0, 2.0, 1.0, Closure::right_open) ==
          std::vector<double>{-2.0, -1.0, 0.0, 1.0});
  }

  TEST_CASE("last point is pinned to the endpoint bitwise") {
    const auto pts = equidistant_points(0.0, 1.0, 0.1, Closure::closed);
    REQUIRE(pts.size() == 11);
    CHECK(pts.back() == 1.0);  // not 10 accumulated steps of 0.1
    const auto pts2 = equidistant_points(0.3, 2.7, 0.2, Closure::closed);
    CHECK(pts2.back() == 2.7);
  }

  TEST_CASE("partition accessors") {
    const Partition p(0.0, 2.0, 0.5);
    CHECK(p.left() == 0.0);
    CHECK(p.right() == 2.0);
    CHECK(p.spacing() == 0.5);
    CHECK(p.cells() == 4);
    CHECK(p.interior_count() == 3);
    CHECK(p.size() == 5);
    CHECK(p.knots() == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK_THROWS_AS(Partition(0.0, 1.0, 0.3), std::invalid_argument);
  }

  TEST_CASE("uplus interleaves a shifted copy of all but the last knot") {
    const Partition p(0.0, 2.0, 1.0);
    CHECK(p.uplus(0.5) == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
    CHECK(p.uplus(0.25) == std::vector<double>{0.0, 0.25, 1.0, 1.25, 2.0});
    CHECK_THROWS_AS((void)p.uplus(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)p.uplus(1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)p.uplus(-0.5), std::invalid_argument);
    const Partition open_p(0.0, 2.0, 1.0, Closure::open);
    CHECK_THROWS_AS((void)open_p.uplus(0.5), std::invalid_argument);
  }
}
