#include <splinedict/bspline.hpp>
#include <splinedict/dictionary.hpp>
#include <splinedict/grid.hpp>

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace splinedict;

TEST_SUITE("dictionary") {
  TEST_CASE("shift grid of a small example") {
    const auto dict = Dictionary::build(1, Partition(0.0, 2.0, 1.0), 0.5);
    REQUIRE(dict.size() == 5);
    const std::vector<double> expected{-0.5, 0.0, 0.5, 1.0, 1.5};
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(dict.shifts()[i] == doctest::Approx(expected[i]));
    CHECK(dict.refinement() == 2);
    CHECK(dict.fine_dimension() == 4);
    CHECK(dict.fine_space().dimension() == 4);
    CHECK(dict.coarse_space().dimension() == 2);
  }

  TEST_CASE("size and fine dimension formulas") {
    const double c = 0.0, d = 2.0;
    for (int m : {1, 2, 3}) {
      for (long r : {1L, 2L, 4L}) {
        const double b = 0.25;
        const double bp = b / static_cast<double>(r);
        const auto dict = Dictionary::build(m, Partition(c, d, b), bp);
        CAPTURE(m);
        CAPTURE(r);
        CHECK(dict.size() == std::lround((d - c + m * b) / bp) - 1);
        CHECK(dict.fine_dimension() == m + std::lround((d - c) / bp) - 1);
        // redundancy grows linearly in the refinement
        CHECK(dict.size() - dict.fine_dimension() == m * (r - 1));
      }
    }
  }

  TEST_CASE("fine-step flagship configuration has the expected counts") {
    const auto dict = Dictionary::build(1, Partition(0.0, 4.0, 1.0), 1.0 / 256);
    CHECK(dict.size() == 1279);
    CHECK(dict.fine_dimension() == 1024);
    CHECK(dict.refinement() == 256);
  }

  TEST_CASE("b' == b degenerates to the basis") {
    for (int m : {1, 2, 4}) {
      const Partition part(0.0, 2.0, 0.25);
      const auto dict = Dictionary::build(m, part, 0.25);
      const auto basis = build_esep_basis(SplineSpace(m, part));
      REQUIRE(dict.size() == static_cast<long>(basis.size()));
      const Grid grid = Grid::working(0.0, 2.0, 0.25, 8);
      const Eigen::MatrixXd a = sample_atoms(dict.atoms(), grid);
      const Eigen::MatrixXd e = sample_atoms(basis, grid);
      CAPTURE(m);
      CHECK((a - e).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  TEST_CASE("atoms are translates of one wide prototype") {
    const auto dict = Dictionary::build(2, Partition(0.0, 1.0, 0.25), 0.125);
    for (const auto& atom : dict.atoms()) CHECK_FALSE(atom.is_window());
    // an interior atom samples the cardinal prototype: (1/b) B_m((x-k)/b)
    const long j = dict.index_of_shift(0.25);
    const Atom& atom = dict.atoms()[static_cast<std::size_t>(j)];
    for (double x : {0.3, 0.5, 0.62, 0.74}) {
      CHECK(atom.value(x) ==
            doctest::Approx(4.0 * cardinal_bspline(2, (x - 0.25) / 0.25)).epsilon(1e-14));
    }
    // order-1 translate: indicator of [k, k+b) scaled by 1/b
    const auto box = Dictionary::build(1, Partition(0.0, 2.0, 1.0), 0.5);
    const Atom& cell = box.atoms()[static_cast<std::size_t>(box.index_of_shift(0.5))];
    CHECK(cell.value(0.75) == 1.0);
    CHECK(cell.value(0.4) == 0.0);
    CHECK(cell.value(1.6) == 0.0);
  }

  TEST_CASE("index_of_shift roundtrips and rejects off-grid values") {
    const auto dict = Dictionary::build(3, Partition(0.0, 1.0, 0.25), 0.0625);
    for (long j = 0; j < dict.size(); ++j)
      CHECK(dict.index_of_shift(dict.shifts()[static_cast<std::size_t>(j)]) == j);
    CHECK_THROWS_AS((void)dict.index_of_shift(0.03), std::invalid_argument);
    CHECK_THROWS_AS((void)dict.index_of_shift(-5.0), std::invalid_argument);
  }

  TEST_CASE("union decomposition tiles the shift set") {
    SUBCASE("frozen small case") {
      const auto dict = Dictionary::build(1, Partition(0.0, 2.0, 1.0), 0.5);
      const auto fams = union_decomposition(dict);
      REQUIRE(fams.size() == 2);
      CHECK(fams[0].offset == doctest::Approx(0.0));
      CHECK(fams[0].atom_indices == std::vector<long>{1, 3});
      CHECK(fams[1].offset == doctest::Approx(0.5));
      CHECK(fams[1].atom_indices == std::vector<long>{0, 2, 4});
    }
    SUBCASE("disjoint cover at higher refinement") {
      const auto dict = Dictionary::build(2, Partition(0.0, 1.0, 0.25), 0.0625);
      const auto fams = union_decomposition(dict);
      REQUIRE(fams.size() == 4);
      std::set<long> seen;
      for (std::size_t i = 0; i < fams.size(); ++i) {
        CHECK(fams[i].offset == doctest::Approx(0.0625 * static_cast<double>(i)));
        for (long idx : fams[i].atom_indices) {
          CHECK(seen.insert(idx).second);  // no index appears twice
          // every member shift sits on the coarse grid displaced by the offset
          const double s = dict.shifts()[static_cast<std::size_t>(idx)] - fams[i].offset;
          CHECK(std::abs(s / 0.25 - std::round(s / 0.25)) < 1e-9);
        }
      }
      CHECK(static_cast<long>(seen.size()) == dict.size());
    }
  }

  TEST_CASE("construction rejects incompatible steps") {
    const Partition part(0.0, 1.0, 0.25);
    CHECK_THROWS_AS((void)Dictionary::build(2, part, 0.1), std::invalid_argument);  // no integer ratio
    CHECK_THROWS_AS((void)Dictionary::build(2, part, 0.5), std::invalid_argument);  // coarser than b
    CHECK_THROWS_AS((void)Dictionary::build(2, part, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)Dictionary::build(0, part, 0.125), std::invalid_argument);
  }

  TEST_CASE("window-edged variant keeps translate interior") {
    const auto dict = Dictionary::build(3, Partition(0.0, 1.0, 0.25), 0.125, BasisKind::epkb);
    CHECK(dict.kind() == BasisKind::epkb);
    CHECK(dict.atoms().front().is_window());
    CHECK(dict.atoms().back().is_window());
    CHECK_FALSE(dict.atoms()[static_cast<std::size_t>(dict.size() / 2)].is_window());
  }
}
