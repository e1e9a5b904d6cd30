#include <splinedict/grid.hpp>
#include <splinedict/partition.hpp>
#include <splinedict/spline_space.hpp>

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

using namespace splinedict;

TEST_SUITE("grid") {
  TEST_CASE("points and trapezoid weights") {
    const Grid g(0.0, 1.0, 0.25);
    REQUIRE(g.size() == 5);
    CHECK(g.points()[0] == 0.0);
    CHECK(g.points()[2] == doctest::Approx(0.5));
    CHECK(g.points()[4] == 1.0);
    CHECK(g.weights()[0] == doctest::Approx(0.125));
    CHECK(g.weights()[1] == doctest::Approx(0.25));
    CHECK(g.weights()[4] == doctest::Approx(0.125));
    CHECK(g.weights().sum() == doctest::Approx(1.0));  // total mass = interval length
    CHECK_THROWS_AS(Grid(0.0, 1.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1.0, 0.0, 0.25), std::invalid_argument);
  }

  TEST_CASE("working grid refines the dictionary step") {
    const Grid g = Grid::working(0.0, 1.0, 0.125, 4);
    CHECK(g.step() == doctest::Approx(0.125 / 4));
    CHECK(g.size() == 33);
    CHECK(Grid::working(0.0, 2.0, 0.25).step() == doctest::Approx(0.25 / 16));
  }

  TEST_CASE("quadrature error of the trapezoid rule is exactly quadratic on x^2") {
    // composite trapezoid on f(x)=x^2 over [0,1] has error h^2 (b-a) f''/12 = h^2/6
    for (double h : {0.25, 0.125, 0.0625}) {
      const Grid g(0.0, 1.0, h);
      const Eigen::VectorXd x2 = g.points().array().square();
      const double integral = g.inner(x2, Eigen::VectorXd::Ones(g.size()));
      CAPTURE(h);
      CHECK(integral - 1.0 / 3.0 == doctest::Approx(h * h / 6.0).epsilon(1e-10));
    }
  }

  TEST_CASE("norm and inner product agree") {
    const Grid g(0.0, 2.0, 0.125);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.size());
    CHECK(g.norm(ones) == doctest::Approx(std::sqrt(2.0)));
    const Eigen::VectorXd v = g.points();
    CHECK(g.norm(v) == doctest::Approx(std::sqrt(g.inner(v, v))));
  }

  TEST_CASE("atom sampling") {
    const SplineSpace space(2, Partition(0.0, 1.0, 0.25));
    const auto atoms = build_esep_basis(space);
    const Grid g(0.0, 1.0, 0.0625);
    const Eigen::MatrixXd cols = sample_atoms(atoms, g);
    REQUIRE(cols.rows() == g.size());
    REQUIRE(cols.cols() == static_cast<long>(atoms.size()));
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      const Eigen::VectorXd one = sample_atom(atoms[j], g);
      CHECK((cols.col(static_cast<long>(j)) - one).cwiseAbs().maxCoeff() == 0.0);
    }
    // hat centred at 0.5 peaks there with height 1/b and vanishes off-support
    const Eigen::VectorXd hat = sample_atom(atoms[2], g);
    CHECK(hat[8] == doctest::Approx(4.0));
    CHECK(hat[0] == 0.0);
    CHECK(hat[16] == 0.0);
  }
}
