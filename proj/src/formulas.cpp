#include "lsep/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace lsep {

namespace {

constexpr double kEdgeSlack = 1e-12;

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double clamp1(double v) { return std::min(1.0, std::max(-1.0, v)); }

// asin argument of x1/x2; 1 at both ends of the domain
double spherical_sin2x(double y, double lambda) {
  if (!(lambda >= 0 && lambda < kPi / 4)) domain("lambda must lie in [0, pi/4), got " + num(lambda));
  double lo = std::asin(std::tan(lambda));
  if (!(y >= lo - kEdgeSlack && y <= kPi / 2 + kEdgeSlack))
    domain("y = " + num(y) + " outside [arcsin tan lambda, pi/2]");
  y = std::clamp(y, lo, kPi / 2);
  double sy = std::sin(y);
  if (sy == 0) return 0;
  // sin^2 y - sin^2 lambda, factored to keep precision near y = lambda
  double d = std::sin(y - lambda) * std::sin(y + lambda);
  if (d <= 0) return 1;
  return clamp1(std::cos(lambda) * sy * sy / std::sqrt(d));
}

}  // namespace

const char* to_string(Branch b) {
  switch (b) {
    case Branch::S1: return "S1";
    case Branch::S2: return "S2";
    case Branch::H1: return "H1";
    case Branch::H2: return "H2";
  }
  return "?";
}

void SeparabilityParams::validate() const {
  if (!(rho > 0)) domain("rho must be positive, got " + num(rho));
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  if (!(lambda <= rho)) domain("lambda <= rho violated (" + num(lambda) + " > " + num(rho) + ")");
  if (geometry == Geometry::Spherical) {
    if (!(rho < kPi / 2)) domain("spherical rho must be below pi/2, got " + num(rho));
    if (!(lambda <= kPi / 2 - rho + 1e-15))
      domain("lambda <= pi/2 - rho violated (" + num(lambda) + " > " + num(kPi / 2 - rho) + ")");
  }
}

double x1_spherical(double y, double lambda) { return 0.5 * std::asin(spherical_sin2x(y, lambda)); }

double x2_spherical(double y, double lambda) {
  return kPi / 2 - 0.5 * std::asin(spherical_sin2x(y, lambda));
}

double x_hyperbolic(double y, double lambda) {
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  if (!(y > lambda)) domain("x^h needs y > lambda (y = " + num(y) + ", lambda = " + num(lambda) + ")");
  double sy = std::sinh(y);
  double d = std::sinh(y - lambda) * std::sinh(y + lambda);  // sinh^2 y - sinh^2 lambda
  return 0.5 * std::asinh(std::cosh(lambda) * sy * sy / std::sqrt(d));
}

double x_euclidean(double y, double lambda) {
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  if (!(y > lambda)) domain("x^e needs y > lambda (y = " + num(y) + ", lambda = " + num(lambda) + ")");
  return y * y / (2 * std::sqrt((y - lambda) * (y + lambda)));
}

double x_of_y(Geometry g, int variant, double y, double lambda) {
  switch (g) {
    case Geometry::Spherical:
      if (variant == 1) return x1_spherical(y, lambda);
      if (variant == 2) return x2_spherical(y, lambda);
      domain("spherical family variant must be 1 or 2");
    case Geometry::Hyperbolic:
      if (variant != 0) domain("hyperbolic family has no variant");
      return x_hyperbolic(y, lambda);
    case Geometry::Euclidean:
      if (variant != 0) domain("euclidean family has no variant");
      return x_euclidean(y, lambda);
  }
  domain("bad geometry");
}

double y_lower(Geometry g, double lambda) {
  if (g == Geometry::Spherical) return std::asin(std::tan(lambda));
  return lambda;
}

double y_circumcenter(Geometry g, double lambda) {
  switch (g) {
    case Geometry::Spherical: return std::asin(clamp1(std::sqrt(2.0) * std::sin(lambda)));
    case Geometry::Hyperbolic: return std::asinh(std::sqrt(2.0) * std::sinh(lambda));
    case Geometry::Euclidean: return std::sqrt(2.0) * lambda;
  }
  return 0;
}

std::pair<double, double> branch_interval(Geometry g, Branch b, double lambda) {
  bool spherical_branch = b == Branch::S1 || b == Branch::S2;
  if (spherical_branch != (g == Geometry::Spherical))
    domain(std::string("branch ") + to_string(b) + " used with " + to_string(g) + " geometry");
  double mid = y_circumcenter(g, lambda);
  switch (b) {
    case Branch::S1: return {y_lower(g, lambda), mid};
    case Branch::S2: return {mid, kPi / 2};
    case Branch::H1: return {lambda, mid};
    case Branch::H2: return {mid, std::numeric_limits<double>::infinity()};
  }
  return {0, 0};
}

double x_inverse(Geometry g, int variant, Branch b, double rho, double lambda) {
  auto [lo, hi] = branch_interval(g, b, lambda);
  auto f = [&](double y) { return x_of_y(g, variant, y, lambda) - rho; };
  if (g != Geometry::Spherical) {
    if (!(rho >= lambda - kEdgeSlack))
      domain("rho = " + num(rho) + " below the branch minimum " + num(lambda));
    if (rho <= lambda) return y_circumcenter(g, lambda);
    if (b == Branch::H1) {
      // x -> infinity at y = lambda; step in from the open end
      double a = lambda + (hi - lambda) * 0.5;
      while (f(a) < 0) {
        a = lambda + (a - lambda) * 0.5;
        if (a - lambda < 1e-300) domain("x_inverse: no solution on H1");
      }
      lo = a;
    } else {
      // open at +infinity; grow the bracket from the circumcenter landmark
      double step = std::max(1.0, lo);
      double top = lo + step;
      while (f(top) < 0) {
        step *= 2;
        top = lo + step;
        if (!(top < 700)) domain("x_inverse: no solution on H2");
      }
      hi = top;
    }
    return bisect(f, lo, hi);
  }
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    // asin is flat at the x = pi/4 end, so that endpoint is only good to ~1e-8
    const double tol = 1e-7;
    if (std::min(std::abs(flo), std::abs(fhi)) > tol)
      domain("rho = " + num(rho) + " not attained on branch " + to_string(b));
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
  }
  return bisect(f, lo, hi);
}

double y_s(Geometry g, double lambda) {
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  switch (g) {
    case Geometry::Spherical: {
      double L2 = std::sin(lambda) * std::sin(lambda);
      double D = 9 - 34 * L2 + 25 * L2 * L2;
      if (D < -1e-12) domain("y_s^s needs lambda <= arcsin(3/5), got " + num(lambda));
      D = std::max(0.0, D);
      // (3 + 5L^2 - sqrt D)/8 with the cancellation removed
      double s2 = 8 * L2 / (3 + 5 * L2 + std::sqrt(D));
      return std::asin(std::sqrt(s2));
    }
    case Geometry::Hyperbolic: {
      double L2 = std::sinh(lambda) * std::sinh(lambda);
      double E = 25 * L2 * L2 + 34 * L2 + 9;
      double s2 = 8 * L2 / (std::sqrt(E) + 3 - 5 * L2);
      return std::asinh(std::sqrt(s2));
    }
    case Geometry::Euclidean: return 2 * lambda / std::sqrt(3.0);
  }
  return 0;
}

double y_b(double lambda) {
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  double L2 = std::sin(lambda) * std::sin(lambda);
  double D = 9 - 34 * L2 + 25 * L2 * L2;
  if (D < -1e-12) domain("y_b^s needs lambda <= arcsin(3/5), got " + num(lambda));
  D = std::max(0.0, D);
  return std::asin(std::sqrt((3 + 5 * L2 + std::sqrt(D)) / 8));
}

double y_min(Geometry g, double lambda) {
  if (!(lambda >= 0)) domain("lambda must be nonnegative, got " + num(lambda));
  if (lambda == 0) return 0;
  switch (g) {
    case Geometry::Spherical: {
      if (!(lambda < kPi / 2)) domain("y_min^s needs lambda < pi/2, got " + num(lambda));
      double L = std::sin(lambda), L2 = L * L, L4 = L2 * L2;
      // Z^3 + pZ + q = 0 with Z = Y^2 - 5L^2/3
      double p = 2 * L2 - 10 * L4 / 3;
      double q = L4 / 3 - 25 * L4 * L2 / 27;
      double z;
      if (p > 0) {
        double k = std::sqrt(p / 3);
        z = -2 * k * std::sinh(std::asinh(3 * q / (2 * p) / k) / 3);
      } else {
        double disc = q * q / 4 + p * p * p / 27;
        if (disc < 0) domain("y_min^s: cubic has three real roots at lambda = " + num(lambda));
        double r = std::sqrt(disc);
        z = std::cbrt(-q / 2 + r) + std::cbrt(-q / 2 - r);
      }
      double Y2 = z + 5 * L2 / 3;
      if (!(Y2 > 0 && Y2 <= 1 + 1e-12)) domain("y_min^s undefined at lambda = " + num(lambda));
      return std::asin(std::sqrt(std::min(1.0, Y2)));
    }
    case Geometry::Hyperbolic: {
      double L = std::sinh(lambda), L2 = L * L;
      double u = (25 * L2 + 9) * L / (4 * std::sqrt(2.0) * std::pow(5 * L2 + 3, 1.5));
      double Y2 = 5 * L2 / 3 + 2.0 / 3 * std::sqrt(10 * L2 * L2 + 6 * L2) *
                                   std::cos(std::acos(clamp1(u)) / 3 - 2 * kPi / 3);
      return std::asinh(std::sqrt(Y2));
    }
    case Geometry::Euclidean: return std::sqrt(1.5) * lambda;
  }
  return 0;
}

std::optional<double> y_min_spherical_cardano(double lambda) {
  double L = std::sin(lambda), L2 = L * L, L4 = L2 * L2, L6 = L4 * L2;
  double rad = -375 * L6 * L6 + 750 * L6 * L4 - 471 * L4 * L4 + 96 * L6;
  if (rad < 0) return std::nullopt;
  double A = 100 * L6 - 36 * L4 + 12 * std::sqrt(rad);
  double a3 = std::cbrt(A);
  if (a3 == 0) return std::nullopt;
  double inner = 6 * a3 - 216 * (-10.0 / 9 * L4 + 2.0 / 3 * L2) / a3 + 60 * L2;
  if (inner < 0) return std::nullopt;
  double s = std::sqrt(inner) / 6;
  if (s > 1) return std::nullopt;
  return std::asin(s);
}

double saturation_radius(Geometry g, double rho) {
  if (!(rho > 0)) domain("rho must be positive, got " + num(rho));
  switch (g) {
    case Geometry::Euclidean: return std::sqrt(2.0) * rho;
    case Geometry::Spherical:
      if (rho > kPi / 4 + 1e-15)
        throw Error(ErrorCode::NoThreshold, "R_rho does not exist for spherical rho > pi/4");
      return std::asin(clamp1(std::sqrt(2.0) * std::sin(rho)));
    case Geometry::Hyperbolic: return std::asinh(std::sqrt(2.0) * std::sinh(rho));
  }
  return 0;
}

}  // namespace lsep
