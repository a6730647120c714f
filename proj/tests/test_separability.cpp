#include <cmath>
#include <random>

#include "doctest.h"
#include "lsep/generators.hpp"
#include "lsep/separability.hpp"
#include "oracles.hpp"

using namespace lsep;
using doctest::Approx;

namespace {

Packing with_lambda(Packing p, double lambda) {
  p.lambda = lambda;
  return p;
}

}  // namespace

TEST_SUITE("separability") {
  TEST_CASE("examples") {
    CHECK(is_lambda_separable(square_grid(4)).separable);
    Packing tri;
    tri.centers = {Point::euclidean(0, 0), Point::euclidean(2, 0), Point::euclidean(1, std::sqrt(3.0))};
    tri.rho = 1;
    tri.lambda = 0.9;
    SeparabilityReport r = is_lambda_separable(tri);
    CHECK_FALSE(r.separable);
    REQUIRE(r.failing);
    CHECK(r.failing->clearance == Approx(std::sqrt(3.0) / 2));
    CHECK(is_lambda_separable(with_lambda(tri, std::sqrt(3.0) / 2)).separable);
    for (double l : {0.2, 0.8, 0.9, 0.97, 1.0})
      CHECK(is_lambda_separable(euclidean_extremal_density_lattice(l, 4)).separable);
  }

  TEST_CASE("witness lines keep their clearance") {
    Packing p = euclidean_extremal_density_lattice(0.95, 3);
    SeparabilityReport r = is_lambda_separable(p);
    REQUIRE(r.separable);
    std::vector<Disk> lam = p.disks(p.lambda - 1e-8);
    for (const PairSeparation& w : r.witnesses) {
      CHECK(line_separates_disks(w.line, lam[w.i], lam[w.j], lam));
      CHECK(separation_clearance(w.line, p.centers, w.i, w.j) == Approx(w.clearance));
    }
  }

  TEST_CASE("serial and parallel agree") {
    Packing p = random_saturated(Geometry::Euclidean, 1, 5, 3);
    p.lambda = 0.5;
    SeparabilityReport a = is_lambda_separable(p, false), b = is_lambda_separable(p, true);
    CHECK(a.separable == b.separable);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t k = 0; k < a.witnesses.size(); ++k) CHECK(a.witnesses[k].clearance == b.witnesses[k].clearance);
  }

  TEST_CASE("monotone in lambda") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Packing p = random_saturated(Geometry::Euclidean, 1, 4, seed);
      bool prev = true;
      for (double l = 0; l <= 1; l += 0.1) {
        bool now = is_lambda_separable(with_lambda(p, l)).separable;
        if (!prev) CHECK_FALSE(now);
        prev = now;
      }
    }
  }

  TEST_CASE("small sets against the oracle") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(0, 1);
    for (Geometry g : {Geometry::Euclidean, Geometry::Spherical, Geometry::Hyperbolic})
      for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + trial;
        Packing p;
        p.geometry = g;
        while (static_cast<int>(p.centers.size()) < n) {
          double rad = g == Geometry::Spherical ? 1.2 : 3.0;
          Point c = polar_point(g, rad * std::sqrt(U(rng)), 2 * kPi * U(rng));
          bool ok = true;
          for (const Point& q : p.centers) ok = ok && distance(c, q) > 0.5;
          if (ok) p.centers.push_back(c);
        }
        double dmin = 1e9;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) dmin = std::min(dmin, distance(p.centers[i], p.centers[j]));
        p.rho = dmin / 2;
        double t = oracle::separability_threshold(p.centers);
        REQUIRE(t > 0);
        REQUIRE(t <= p.rho + 1e-12);
        CHECK(is_lambda_separable(with_lambda(p, std::max(0.0, t - 1e-7))).separable);
        if (t + 1e-6 <= p.rho) CHECK_FALSE(is_lambda_separable(with_lambda(p, t + 1e-6)).separable);
      }
  }
}
