#include "lsep/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsep/formulas.hpp"

namespace lsep {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }

struct HalfAngles {
  double alpha;  // half apex angle
  double beta;   // base angle of the T1 / T^h member
};

// sin/cos of alpha and beta from the laws of sines and cosines
HalfAngles family_angles(Geometry g, double y, double lambda) {
  double s, L, t, cy;
  if (g == Geometry::Spherical) {
    s = std::sin(y);
    L = std::sin(lambda);
    t = std::tan(lambda);
    cy = std::cos(y);
  } else {
    s = std::sinh(y);
    L = std::sinh(lambda);
    t = std::tanh(lambda);
    cy = std::cosh(y);
  }
  double cl = g == Geometry::Spherical ? std::cos(lambda) : std::cosh(lambda);
  double sa = std::sqrt(std::max(0.0, (s - L) * (s + L))) / (s * cl);
  double ca = t * cy / s;
  double sb = t / s;
  double cb = std::sqrt(std::max(0.0, (s - t) * (s + t))) / s;
  return {std::atan2(sa, ca), std::atan2(sb, cb)};
}

void check_family(Geometry g, int variant, double y, double lambda) {
  // x_of_y validates the (y, lambda) domain and the variant
  (void)x_of_y(g, variant, y, lambda);
}

}  // namespace

IsoTriangle family_triangle(Geometry g, int variant, double y, double lambda) {
  double x = x_of_y(g, variant, y, lambda);
  return {g, y, x, lambda, variant, false};
}

IsoTriangle regular_triangle(Geometry g, double rho) {
  if (!(rho > 0)) domain("regular triangle needs rho > 0");
  if (g == Geometry::Spherical && !(rho < kPi / 3))
    domain("no spherical regular triangle of edge 2 rho for rho >= pi/3");
  return {g, rho, rho, 0, 0, true};
}

IsoTriangle iso_triangle(Geometry g, double y, double x) {
  if (!(y > 0 && x > 0)) domain("isosceles triangle needs positive sides");
  if (!(x > y / 2)) domain("legs 2x must exceed half the base 2y");
  if (g == Geometry::Spherical && !(x + x + y < kPi + 1e-15 && y < kPi / 2))
    domain("spherical isosceles triangle too large");
  return {g, y, x, 0, 0, std::abs(x - y) < 1e-15};
}

Triangle construct(const IsoTriangle& t) {
  const Geometry g = t.geometry;
  const double y = t.half_base, x = t.half_leg;
  double h = 0;
  switch (g) {
    case Geometry::Euclidean: h = std::sqrt(std::max(0.0, 4 * x * x - y * y)); break;
    case Geometry::Spherical: {
      double c = std::cos(2 * x) / std::cos(y);
      if (!(std::abs(c) <= 1 + 1e-12)) throw Error(ErrorCode::Construction, "no spherical apex");
      h = std::acos(std::clamp(c, -1.0, 1.0));
      break;
    }
    case Geometry::Hyperbolic: {
      double c = std::cosh(2 * x) / std::cosh(y);
      if (!(c >= 1 - 1e-12)) throw Error(ErrorCode::Construction, "no hyperbolic apex");
      h = std::acosh(std::max(1.0, c));
      break;
    }
  }
  Point apex = polar_point(g, h, kPi / 2);
  Point q1 = polar_point(g, y, 0);
  Point q2 = polar_point(g, y, kPi);
  return Triangle::make(apex, q1, q2);
}

double family_area(Geometry g, int variant, double y, double lambda) {
  check_family(g, variant, y, lambda);
  switch (g) {
    case Geometry::Euclidean: {
      double x = x_euclidean(y, lambda);
      return y * std::sqrt(std::max(0.0, 4 * x * x - y * y));
    }
    case Geometry::Spherical: {
      auto [a, b] = family_angles(g, y, lambda);
      return variant == 1 ? 2 * a + 2 * b - kPi : 2 * a - 2 * b + kPi;
    }
    case Geometry::Hyperbolic: {
      auto [a, b] = family_angles(g, y, lambda);
      return kPi - 2 * a - 2 * b;
    }
  }
  return 0;
}

double family_half_area_cosine(Geometry g, int variant, double y, double lambda) {
  check_family(g, variant, y, lambda);
  if (g == Geometry::Euclidean) domain("no half-area cosine form in the Euclidean plane");
  bool sph = g == Geometry::Spherical;
  double sy = sph ? std::sin(y) : std::sinh(y);
  double sl = sph ? std::sin(lambda) : std::sinh(lambda);
  double cl = sph ? std::cos(lambda) : std::cosh(lambda);
  double cy = sph ? std::cos(y) : std::cosh(y);
  double r1 = std::sqrt(std::max(0.0, sy * sy - sl * sl));
  double r2 = std::sqrt(std::max(0.0, sy * sy * cl * cl - sl * sl));
  double sign = variant == 2 ? -1.0 : 1.0;
  return (sign * r1 * r2 + sl * sl * cy) / (sy * sy * cl * cl);
}

double family_circumradius(Geometry g, int variant, double y, double lambda) {
  check_family(g, variant, y, lambda);
  if (g == Geometry::Euclidean)
    return y * y * y / (2 * lambda * std::sqrt((y - lambda) * (y + lambda)));
  bool sph = g == Geometry::Spherical;
  double sy = sph ? std::sin(y) : std::sinh(y);
  double sl = sph ? std::sin(lambda) : std::sinh(lambda);
  double cl = sph ? std::cos(lambda) : std::cosh(lambda);
  double cy = sph ? std::cos(y) : std::cosh(y);
  double r1 = std::sqrt(std::max(0.0, (sy - sl) * (sy + sl)));
  double r2 = std::sqrt(std::max(0.0, sy * sy * cl * cl - sl * sl));
  double sign = variant == 2 ? -1.0 : 1.0;
  double k = sl / (cl * cl) * (sign * cy * cy / (sy * sy * sy) * r2 + cy / (sy * sy * sy) * r1);
  if (!sph && !(k > 1)) throw Error(ErrorCode::NoCircumcircle, "hyperbolic family triangle has no circumcircle");
  return k;
}

std::array<double, 3> iso_angles(const IsoTriangle& t) {
  Triangle tri = construct(t);
  return triangle_angles(tri);
}

double iso_area(const IsoTriangle& t) { return triangle_area(construct(t)); }

double iso_circumradius(const IsoTriangle& t) { return circumcircle(construct(t)).radius; }

double regular_circumradius(Geometry g, double rho) {
  const double k = 2 / std::sqrt(3.0);
  switch (g) {
    case Geometry::Euclidean: return k * rho;
    case Geometry::Spherical: {
      double s = k * std::sin(rho);
      if (!(rho < kPi / 3)) domain("no spherical regular triangle for rho >= pi/3");
      return std::asin(std::min(1.0, s));
    }
    case Geometry::Hyperbolic: return std::asinh(k * std::sinh(rho));
  }
  return 0;
}

double regular_area(Geometry g, double rho) {
  double a = 2 * rho;
  switch (g) {
    case Geometry::Euclidean: return std::sqrt(3.0) * rho * rho;
    case Geometry::Spherical: {
      if (!(rho < kPi / 3)) domain("no spherical regular triangle for rho >= pi/3");
      double A = std::acos(std::cos(a) / (1 + std::cos(a)));
      return 3 * A - kPi;
    }
    case Geometry::Hyperbolic: {
      double A = std::acos(std::cosh(a) / (1 + std::cosh(a)));
      return kPi - 3 * A;
    }
  }
  return 0;
}

double cell_density_from(Geometry g, double rho, double angle_sum, double area) {
  if (!(area > 0)) throw Error(ErrorCode::Degenerate, "cell of zero area");
  return sector_area_per_radian(g, rho) * angle_sum / area;
}

double triangle_density(const IsoTriangle& t, double rho) {
  const Geometry g = t.geometry;
  double area;
  if (t.regular) {
    area = regular_area(g, t.half_base);
  } else if (t.variant != 0 || (t.lambda > 0 && g != Geometry::Spherical)) {
    area = family_area(g, t.variant, t.half_base, t.lambda);
  } else {
    area = iso_area(t);
  }
  // angle sum is pi + area (S), pi - area (H), pi (E)
  double phi = kPi + curvature(g) * area;
  return cell_density_from(g, rho, phi, area);
}

bool satisfies_cstarstar(const IsoTriangle& t, double lambda) {
  Triangle tri = construct(t);
  const Point &apex = tri.v[0], &q1 = tri.v[1];
  Geodesic line = Geodesic::through(midpoint(apex, q1), origin(t.geometry));
  for (const Point& p : tri.v)
    if (std::abs(point_line_distance(p, line) - lambda) > 1e-9) return false;
  return true;
}

double two_disk_density(Geometry g, double x, double y, double rho) {
  if (!(rho > 0)) domain("two_disk_density needs rho > 0");
  if (!(y >= 2 * rho - 1e-12)) domain("two_disk_density needs base y >= 2 rho");
  if (!(x > y / 2)) domain("two_disk_density needs legs x > y/2");
  if (g == Geometry::Spherical && !(y < kPi && x < kPi / 2 + kPi / 2 && x + x + y < 2 * kPi))
    domain("two_disk_density: spherical triangle out of range");
  // base angle from the right triangle cut off by the height
  double cb = 0;
  switch (g) {
    case Geometry::Euclidean: cb = (y / 2) / x; break;
    case Geometry::Spherical: cb = std::tan(y / 2) / std::tan(x); break;
    case Geometry::Hyperbolic: cb = std::tanh(y / 2) / std::tanh(x); break;
  }
  if (!(std::abs(cb) < 1)) domain("two_disk_density: no such triangle");
  double beta = std::acos(cb);
  IsoTriangle t{g, y / 2, x / 2, 0, 0, false};
  double area = iso_area(t);
  return cell_density_from(g, rho, 2 * beta, area);
}

}  // namespace lsep
