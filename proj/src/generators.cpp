#include "lsep/generators.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "lsep/formulas.hpp"

namespace lsep {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }

Packing lattice_patch(double ux, double vx, double vy, int window, double rho, double lambda) {
  if (window < 2) domain("window must hold at least 2 fundamental cells per axis");
  Packing p;
  p.geometry = Geometry::Euclidean;
  p.rho = rho;
  p.lambda = lambda;
  for (int b = 0; b <= window; ++b)
    for (int a = 0; a <= window; ++a) p.centers.push_back(Point::euclidean(a * ux + b * vx, b * vy));
  return p;
}

void check_lambda(double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) domain("lambda must lie in [0, 1]");
}

Packing hexagonal_lattice(int window, double lambda) {
  return lattice_patch(2, 1, std::sqrt(3.0), window, 1, lambda);
}

Packing isosceles_lattice(double y, int window, double lambda) {
  // legs 2, base 2y horizontal
  return lattice_patch(2 * y, y, std::sqrt(4 - y * y), window, 1, lambda);
}

}  // namespace

Packing euclidean_extremal_density_lattice(double lambda, int window) {
  check_lambda(lambda);
  if (lambda <= std::sqrt(3.0) / 2) return hexagonal_lattice(window, lambda);
  return isosceles_lattice(std::sqrt(2 - 2 * std::sqrt(1 - lambda * lambda)), window, lambda);
}

Packing euclidean_extremal_tightness_config(double lambda, int window) {
  check_lambda(lambda);
  if (lambda <= 2 * std::sqrt(2.0) / 3) return euclidean_extremal_density_lattice(lambda, window);
  return lattice_patch(std::sqrt(6.0) * lambda, std::sqrt(1.5) * lambda, std::sqrt(3.0) * lambda, window, 1,
                       lambda);
}

double platonic_radius(int n) {
  switch (n) {
    case 4: return std::asin(std::sqrt(2.0 / 3.0));
    case 6: return kPi / 4;
    case 12: return std::asin(1 / (2 * std::sin(2 * kPi / 5)));
  }
  domain("platonic caps exist for n = 4, 6, 12");
}

Packing platonic_caps(int n, double lambda) {
  Packing p;
  p.geometry = Geometry::Spherical;
  p.rho = platonic_radius(n);
  p.lambda = lambda;
  std::vector<Vec3> v;
  if (n == 4) {
    v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (n == 6) {
    v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    for (double s : {1.0, -1.0})
      for (double t : {1.0, -1.0}) {
        v.push_back({0, s, t * phi});
        v.push_back({s, t * phi, 0});
        v.push_back({t * phi, 0, s});
      }
  }
  for (const Vec3& c : v) p.centers.push_back(Point::spherical(c));
  p.validate();
  return p;
}

Packing square_grid(int k) {
  if (k < 1) domain("square grid needs k >= 1");
  Packing p;
  p.rho = 1;
  p.lambda = 1;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) p.centers.push_back(Point::euclidean(2.0 * i, 2.0 * j));
  return p;
}

Packing hexagonal_patch(int n, double lambda) {
  if (n < 1) domain("hexagonal patch needs n >= 1");
  if (!(lambda >= 0 && lambda <= 1)) domain("lambda must lie in [0, 1]");
  Packing p;
  p.rho = 1;
  p.lambda = lambda;
  // lattice steps e_k = 2 (cos 60k, sin 60k) in integer coordinates a e_0 + b e_1
  const std::array<std::array<int, 2>, 6> e{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  auto emit = [&](int a, int b) {
    if (static_cast<int>(p.centers.size()) < n) p.centers.push_back(Point::euclidean(2.0 * a + b, std::sqrt(3.0) * b));
  };
  emit(0, 0);
  for (int r = 1; static_cast<int>(p.centers.size()) < n; ++r) {
    int a = r, b = 0;
    for (int side : {4, 3, 2, 1, 0, 5})
      for (int s = 0; s < r; ++s) {
        emit(a, b);
        a += e[side][0];
        b += e[side][1];
      }
  }
  return p;
}

SpecialConstants special_tiling_constants(std::string_view name) {
  const double s2 = std::sqrt(2.0);
  if (name == "H16") {
    double rho = 0.5 * std::asin(std::sqrt(2 * s2 - 2));
    double lambda = std::asin(2 * std::sin(kPi / 8) * std::sqrt(1 + s2) / std::sqrt(4 + s2));
    return {rho, lambda};
  }
  if (name == "H20") {
    double c = std::cos(kPi / 5);
    double rho = 0.5 * std::asin(std::sqrt(1 + 2 * c) / (1 + c));
    double lambda = std::asin(2 / std::sqrt(5.0) * std::sin(kPi / 10) * std::sqrt(1 + 2 * c));
    return {rho, lambda};
  }
  domain("unknown tiling '" + std::string(name) + "' (expected H16 or H20)");
}

Packing random_saturated(Geometry g, double rho, double region, std::uint64_t seed, double lambda) {
  Packing p;
  p.geometry = g;
  p.rho = rho;
  p.lambda = lambda;
  p.validate();
  if (g != Geometry::Spherical && !(region > 2 * rho)) domain("region must exceed 2 rho");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0, 1);
  auto sample = [&]() -> Point {
    double phi = 2 * kPi * U(rng);
    switch (g) {
      case Geometry::Euclidean: return polar_point(g, region * std::sqrt(U(rng)), phi);
      case Geometry::Spherical: return polar_point(g, std::acos(1 - 2 * U(rng)), phi);
      case Geometry::Hyperbolic:
        return polar_point(g, std::acosh(1 + U(rng) * (std::cosh(region) - 1)), phi);
    }
    return origin(g);
  };
  auto fits = [&](const Point& q) {
    for (const Point& c : p.centers)
      if (distance(c, q) < 2 * rho) return false;
    return true;
  };
  auto inside = [&](const Point& q) { return g == Geometry::Spherical || distance(origin(g), q) <= region; };

  // A ring of centers on the boundary circle keeps the hull round; without
  // it thin cells along the hull have far-away circumcenters and repairing
  // them only grows the set outwards.
  if (g != Geometry::Spherical) {
    double s = g == Geometry::Euclidean ? rho / region : std::sinh(rho) / std::sinh(region);
    int m = static_cast<int>(std::floor(kPi / std::asin(std::min(1.0, s))));
    if (m < 3) domain("region too small for a saturated set");
    for (int k = 0; k < m; ++k) p.centers.push_back(polar_point(g, region, 2 * kPi * k / m));
  }

  for (int misses = 0; misses < 3000;) {
    Point q = sample();
    if (fits(q)) {
      p.centers.push_back(q);
      misses = 0;
    } else {
      ++misses;
    }
  }
  if (p.centers.size() < 3) throw Error(ErrorCode::Construction, "region too small for a saturated set");

  const double limit = 2 * saturation_radius(g, rho) + 1e-10;
  for (int round = 0; round < 200; ++round) {
    Delaunay d = delaunay(p.centers);
    if (saturation_check(d, rho)) return p;
    bool added = false;
    for (const DelaunayCell& c : d.cells) {
      if (c.on_hull || (c.circumcenter && c.circumradius <= limit)) continue;
      Point q;
      if (c.circumcenter) {
        q = *c.circumcenter;
      } else {
        Vec3 s{0, 0, 0};
        for (int i : c.vertices) s = s + d.points[i].coords;
        q = Point::renormalized(g, s);
      }
      if (inside(q) && fits(q)) {
        p.centers.push_back(q);
        added = true;
      }
    }
    if (!added) break;
  }
  throw Error(ErrorCode::Construction, "could not saturate the random set");
}

}  // namespace lsep
