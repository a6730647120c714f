#include <cmath>
#include <random>

#include "doctest.h"
#include "lsep/formulas.hpp"
#include "lsep/triangles.hpp"

using namespace lsep;
using doctest::Approx;

namespace {

struct Sample {
  Geometry g;
  int variant;
  double y, lambda;
};

// random (y, lambda) strictly inside the family domain
Sample sample(Geometry g, int variant, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.02, 0.98);
  if (g == Geometry::Spherical) {
    double l = 0.7 * U(rng);
    double lo = std::asin(std::tan(l));
    return {g, variant, lo + (kPi / 2 - lo) * U(rng), l};
  }
  double l = 1.5 * U(rng);
  return {g, 0, l + 2 * U(rng), l};
}

double measured_radius(const Sample& s) {
  return circumcircle(construct(family_triangle(s.g, s.variant, s.y, s.lambda))).radius;
}

}  // namespace

TEST_SUITE("triangles") {
  TEST_CASE("closed forms against the constructed triangles") {
    std::mt19937_64 rng(7);
    struct Fam {
      Geometry g;
      int v;
    };
    for (Fam f : {Fam{Geometry::Spherical, 1}, Fam{Geometry::Spherical, 2}, Fam{Geometry::Hyperbolic, 0},
                  Fam{Geometry::Euclidean, 0}})
      for (int k = 0; k < 100; ++k) {
        Sample s = sample(f.g, f.v, rng);
        Triangle t = construct(family_triangle(s.g, s.variant, s.y, s.lambda));
        CHECK(family_area(s.g, s.variant, s.y, s.lambda) == Approx(triangle_area(t)).epsilon(1e-9));
        double c = 0;
        try {
          c = family_circumradius(s.g, s.variant, s.y, s.lambda);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NoCircumcircle);
          CHECK_THROWS(circumcircle(t));
          continue;
        }
        double R = measured_radius(s);
        if (s.g == Geometry::Spherical) CHECK(c == Approx(1 / std::tan(R)).epsilon(1e-9));
        if (s.g == Geometry::Hyperbolic) CHECK(c == Approx(1 / std::tanh(R)).epsilon(1e-9));
        if (s.g == Geometry::Euclidean) CHECK(c == Approx(R).epsilon(1e-9));
      }
  }

  TEST_CASE("half-area cosine forms") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
      Sample s = sample(Geometry::Spherical, 1 + k % 2, rng);
      CHECK(family_half_area_cosine(s.g, s.variant, s.y, s.lambda) ==
            Approx(std::cos(family_area(s.g, s.variant, s.y, s.lambda) / 2)).epsilon(1e-9));
      Sample h = sample(Geometry::Hyperbolic, 0, rng);
      // the printed hyperbolic form is the cosine, not the hyperbolic cosine
      CHECK(family_half_area_cosine(h.g, 0, h.y, h.lambda) ==
            Approx(std::cos(family_area(h.g, 0, h.y, h.lambda) / 2)).epsilon(1e-9));
    }
  }

  TEST_CASE("euclidean family landmarks") {
    for (double l : {0.87, 0.93, 1.0}) {
      double y = std::sqrt(2 - 2 * std::sqrt(1 - l * l));
      CHECK(x_euclidean(y, l) == Approx(1));
      CHECK(family_area(Geometry::Euclidean, 0, y, l) == Approx(2 * l));
      CHECK(family_circumradius(Geometry::Euclidean, 0, std::sqrt(1.5) * l, l) == Approx(3 * std::sqrt(3.0) * l / 4));
      // analytic minimizer of R^e
      double r0 = family_circumradius(Geometry::Euclidean, 0, std::sqrt(1.5) * l, l);
      for (double d : {-1e-3, 1e-3}) CHECK(family_circumradius(Geometry::Euclidean, 0, std::sqrt(1.5) * l + d, l) > r0);
    }
  }

  TEST_CASE("regular triangles") {
    CHECK(regular_circumradius(Geometry::Euclidean, 1) == Approx(2 / std::sqrt(3.0)));
    CHECK(regular_circumradius(Geometry::Spherical, kPi / 4) == Approx(std::acos(1 / std::sqrt(3.0))));
    CHECK(regular_circumradius(Geometry::Hyperbolic, 1e-5) / 1e-5 == Approx(2 / std::sqrt(3.0)).epsilon(1e-8));
    CHECK(regular_area(Geometry::Spherical, kPi / 4) == Approx(kPi / 2));
    CHECK(triangle_density(regular_triangle(Geometry::Spherical, kPi / 4), kPi / 4) ==
          Approx(3 * (1 - std::sqrt(2.0) / 2)));
    CHECK(triangle_density(regular_triangle(Geometry::Euclidean, 1), 1) == Approx(kPi / std::sqrt(12.0)));
    CHECK_THROWS_AS(regular_triangle(Geometry::Spherical, 1.1), Error);
  }

  TEST_CASE("condition (c**)") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
      Sample s = sample(Geometry::Spherical, 1, rng);
      CHECK(satisfies_cstarstar(family_triangle(s.g, 1, s.y, s.lambda), s.lambda));
      Sample h = sample(Geometry::Hyperbolic, 0, rng);
      CHECK(satisfies_cstarstar(family_triangle(h.g, 0, h.y, h.lambda), h.lambda));
    }
    IsoTriangle reg = regular_triangle(Geometry::Euclidean, 1);
    CHECK(satisfies_cstarstar(reg, std::sqrt(3.0) / 2));
    CHECK_FALSE(satisfies_cstarstar(reg, 0.9));
  }

  TEST_CASE("circumcenter containment thresholds") {
    for (double l : {0.1, 0.3, 0.5}) {
      double ys = std::asin(std::sqrt(2.0) * std::sin(l));
      CHECK(contains_circumcenter(construct(family_triangle(Geometry::Spherical, 1, ys - 1e-3, l))));
      CHECK_FALSE(contains_circumcenter(construct(family_triangle(Geometry::Spherical, 1, ys + 1e-3, l))));
      CHECK(contains_circumcenter(construct(family_triangle(Geometry::Spherical, 1, ys, l))));
      for (double y = std::asin(std::tan(l)) + 0.01; y < kPi / 2; y += 0.05)
        CHECK(contains_circumcenter(construct(family_triangle(Geometry::Spherical, 2, y, l))));
      double yh = std::asinh(std::sqrt(2.0) * std::sinh(l));
      CHECK(contains_circumcenter(construct(family_triangle(Geometry::Hyperbolic, 0, yh - 1e-3, l))));
      CHECK_FALSE(contains_circumcenter(construct(family_triangle(Geometry::Hyperbolic, 0, yh + 1e-3, l))));
      double ye = std::sqrt(2.0) * l;
      CHECK(contains_circumcenter(construct(family_triangle(Geometry::Euclidean, 0, ye - 1e-3, l))));
      CHECK_FALSE(contains_circumcenter(construct(family_triangle(Geometry::Euclidean, 0, ye + 1e-3, l))));
    }
  }

  TEST_CASE("side ordering on the sphere") {
    for (double l = 0.05; l < std::asin(0.6); l += 0.05) {
      double lo = std::asin(std::tan(l)), ys = y_s(Geometry::Spherical, l);
      for (double y = lo + 1e-3; y < kPi / 2; y += 0.01) {
        double x1 = x1_spherical(y, l), x2 = x2_spherical(y, l);
        CHECK(x1 <= x2 + 1e-15);
        if (y < ys - 1e-9) CHECK(y < x1);
        if (y > ys + 1e-9) CHECK(y > x1);
      }
    }
  }

  TEST_CASE("two-disk density") {
    // angle-weighted sectors against a quasi-random area estimate
    const double x = 2.6, y = 2.2, rho = 1;
    double d = two_disk_density(Geometry::Euclidean, x, y, rho);
    double h = std::sqrt(x * x - y * y / 4);
    const double ax = -y / 2, bx = y / 2;
    long inside = 0, hits = 0;
    const long N = 1000000;
    for (long k = 0; k < N; ++k) {
      double u = std::fmod(k * 0.7548776662466927, 1.0), v = std::fmod(k * 0.5698402909980532, 1.0);
      double px = ax + (bx - ax) * u, py = h * v;
      if (py > h * (1 - std::abs(px) / (y / 2))) continue;  // outside the triangle
      ++inside;
      if (std::hypot(px - ax, py) < rho || std::hypot(px - bx, py) < rho) ++hits;
    }
    CHECK(double(hits) / inside == Approx(d).epsilon(1e-3));
    CHECK_THROWS_AS(two_disk_density(Geometry::Euclidean, 2, 1.5, 1), Error);

    const double eps = 1e-3;
    for (Geometry g : {Geometry::Spherical, Geometry::Hyperbolic})
      CHECK(two_disk_density(g, eps * x, eps * y, eps * rho) == Approx(d).epsilon(1e-4));
  }
}
