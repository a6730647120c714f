#pragma once

// Scalar functions of (y, lambda) describing the extremal isosceles triangles:
// the half-leg x as a function of the half-base y, its monotone-branch
// inverses, and the landmark values y_s, y_b, y_min.

#include <optional>
#include <utility>

#include "lsep/geometry.hpp"

namespace lsep {

/// Monotone pieces of x(y). S1/S2 split the spherical domain at
/// arcsin(sqrt2 sin lambda); H1/H2 split the hyperbolic (and Euclidean) one at
/// arcsinh(sqrt2 sinh lambda) (resp. sqrt2 lambda).
enum class Branch { S1, S2, H1, H2 };

const char* to_string(Branch b);

struct SeparabilityParams {
  Geometry geometry = Geometry::Euclidean;
  double lambda = 0;
  double rho = 1;

  /// 0 <= lambda <= rho, rho > 0; on the sphere also rho < pi/2 and
  /// lambda <= pi/2 - rho. Throws Domain naming the violated condition.
  void validate() const;
};

// Individual families. Spherical: 0 <= lambda < pi/4 and
// arcsin tan lambda <= y <= pi/2 (endpoints included as limits).
// Hyperbolic / Euclidean: 0 <= lambda < y.
double x1_spherical(double y, double lambda);
double x2_spherical(double y, double lambda);
double x_hyperbolic(double y, double lambda);
double x_euclidean(double y, double lambda);

/// Dispatch: variant 1 or 2 on the sphere, variant 0 ("none") otherwise.
double x_of_y(Geometry g, int variant, double y, double lambda);

/// Smallest admissible half-base: arcsin tan lambda (S), lambda (H, E).
double y_lower(Geometry g, double lambda);
/// Breakpoint of x(y): arcsin(sqrt2 sin l), arcsinh(sqrt2 sinh l), sqrt2 l.
double y_circumcenter(Geometry g, double lambda);

/// Closed interval of a branch (the upper H2 end is +infinity).
std::pair<double, double> branch_interval(Geometry g, Branch b, double lambda);

/// y on branch `b` with x_of_y(y) = rho, by bisection down to the last
/// representable bit. Throws Domain if rho is not attained.
double x_inverse(Geometry g, int variant, Branch b, double rho, double lambda);

/// Fixed points of x(y) = y. Sphere: 0 < lambda <= arcsin(3/5) (lambda = 0
/// gives the limit). Euclidean: 2 lambda / sqrt3.
double y_s(Geometry g, double lambda);
/// Larger spherical fixed point, x2(y_b) = y_b.
double y_b(double lambda);

/// Minimizer of the family circumradius R(y). Sphere via the real root of the
/// reduced cubic, hyperbolic via the trigonometric root, Euclidean sqrt(3/2) l.
double y_min(Geometry g, double lambda);
/// The spherical minimizer evaluated through the Cardano expression with
/// A^(1/3); nullopt where the inner square root is of a negative number.
std::optional<double> y_min_spherical_cardano(double lambda);

/// R_rho: circumradius of the regular quadrangle of edge 2 rho.
/// Throws NoThreshold on the sphere for rho > pi/4.
double saturation_radius(Geometry g, double rho);

/// Derivative-free scalar helpers shared with the test oracles.
template <class F>
double bisect(F&& f, double lo, double hi) {
  // assumes f(lo), f(hi) of opposite sign (or zero)
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace lsep
