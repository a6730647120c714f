#include <cmath>

#include "doctest.h"
#include "lsep/bounds.hpp"
#include "lsep/formulas.hpp"
#include "lsep/generators.hpp"
#include "lsep/separability.hpp"
#include "family_oracle.hpp"
#include "oracles.hpp"

using namespace lsep;
using doctest::Approx;

TEST_SUITE("generators") {
  TEST_CASE("extremal density lattices") {
    for (double l : {0.0, 0.2, 0.5, std::sqrt(3.0) / 2, 0.93, 1.0}) {
      Packing p = euclidean_extremal_density_lattice(l, 5);
      CHECK(verify_packing(p).ok);
      CHECK(std::abs(packing_density(p).value - density_bound_euclidean(l).value) < 1e-9);
      CHECK(is_lambda_separable(p).separable);
    }
    CHECK_THROWS_AS(euclidean_extremal_density_lattice(1.1, 4), Error);
    CHECK_THROWS_AS(euclidean_extremal_density_lattice(0.5, 1), Error);
  }

  TEST_CASE("extremal tightness configurations") {
    for (double l : {0.5, 0.9, 0.97, 1.0}) {
      Packing p = euclidean_extremal_tightness_config(l, 5);
      CHECK(verify_packing(p).ok);
      CHECK(std::abs(packing_tightness(p).value - tightness_bound_euclidean(l).value) < 1e-9);
      CHECK(is_lambda_separable(p).separable);
    }
    CHECK(packing_tightness(euclidean_extremal_tightness_config(0.9, 4)).value ==
          Approx(std::sqrt(2 - 2 * std::sqrt(1 - 0.81)) / 0.9));
  }

  TEST_CASE("platonic caps") {
    CHECK(platonic_radius(6) == Approx(kPi / 4));
    Packing t = platonic_caps(4);
    CHECK(distance(t.centers[0], t.centers[1]) == Approx(std::acos(-1.0 / 3)));
    CHECK(distance(t.centers[0], t.centers[1]) == Approx(2 * std::asin(std::sqrt(2.0 / 3))));
    for (int n : {4, 6, 12}) {
      Packing p = platonic_caps(n);
      CHECK(verify_packing(p).ok);
      Delaunay d = delaunay(p.centers);
      CHECK(d.cells.size() == static_cast<std::size_t>(2 * n - 4));
      for (const DelaunayCell& c : d.cells)
        CHECK(c.circumradius == Approx(regular_circumradius(Geometry::Spherical, p.rho)));
      CHECK(packing_density(p).value == Approx(triangle_density(regular_triangle(Geometry::Spherical, p.rho), p.rho)));
    }
    CHECK_THROWS_AS(platonic_caps(8), Error);
  }

  TEST_CASE("grids and hexagonal patches") {
    Packing g = square_grid(3);
    CHECK(g.centers.size() == 9);
    CHECK(g.lambda == 1);
    Packing h = hexagonal_patch(7);
    CHECK(h.centers[0].coords.x == 0);
    CHECK(h.centers[1].coords.x == Approx(2));
    CHECK(h.centers[1].coords.y == Approx(0));
    // spiral order: every new disk touches an earlier one
    Packing big = hexagonal_patch(37);
    for (std::size_t k = 1; k < big.centers.size(); ++k) {
      bool touches = false;
      for (std::size_t j = 0; j < k; ++j) touches = touches || std::abs(distance(big.centers[k], big.centers[j]) - 2) < 1e-9;
      CHECK(touches);
    }
  }

  TEST_CASE("H16 and H20 constants") {
    SpecialConstants a = special_tiling_constants("H16"), b = special_tiling_constants("H20");
    CHECK(a.rho == Approx(0.57186).epsilon(1e-5));
    CHECK(a.lambda == Approx(0.53644).epsilon(1e-5));
    CHECK(b.rho == Approx(0.55357).epsilon(1e-5));
    CHECK(b.lambda == Approx(0.46365).epsilon(1e-5));
    CHECK_THROWS_AS(special_tiling_constants("H12"), Error);
    // tiles with half legs rho and area 4 pi / N sit on one of the two
    // spherical families at the stated lambda
    for (auto [c, N] : {std::pair{a, 16}, std::pair{b, 20}}) {
      auto area = [&](long double t) { return (long double)iso_area(iso_triangle(Geometry::Spherical, (double)t, c.rho)); };
      long double lo = std::asin(std::tan(c.lambda)), hi = 2 * c.rho * 0.999L;
      long double peak = oracle::golden_min([&](long double t) { return -area(t); }, lo, hi);
      long double y = oracle::bisect_root([&](long double t) { return area(t) - 4 * kPi / N; }, lo, peak);
      long double d1 = std::fabs(oracle::x1_sphere(y, c.lambda) - c.rho), d2 = std::fabs(oracle::x2_sphere(y, c.lambda) - c.rho);
      CHECK(std::min(d1, d2) < 1e-4L);
    }
  }

  TEST_CASE("random saturated sets") {
    for (Geometry g : {Geometry::Euclidean, Geometry::Spherical, Geometry::Hyperbolic}) {
      Packing p = random_saturated(g, g == Geometry::Spherical ? 0.3 : 0.6, 3, 9);
      CHECK(verify_packing(p).ok);
      CHECK(saturation_check(delaunay(p.centers), p.rho));
      Packing q = random_saturated(g, g == Geometry::Spherical ? 0.3 : 0.6, 3, 9);
      CHECK(q.centers.size() == p.centers.size());
    }
  }
}
