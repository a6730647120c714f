#pragma once

// Embedded-model primitives for the three constant-curvature planes.
//
//   Euclidean  : points stored projectively as (x, y, 1)
//   Spherical  : unit vectors in R^3
//   Hyperbolic : upper sheet of the hyperboloid x0^2 + x1^2 - x2^2 = -1
//
// In every model a geodesic is the zero set of a linear functional, so the
// separation tests below reduce to one sign / threshold computation.

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string_view>

#include "lsep/error.hpp"

namespace lsep {

inline constexpr double kPi = std::numbers::pi;

/// Absolute tolerance for geometric predicates.
inline constexpr double kPredicateTol = 1e-10;
/// Tolerance for model normalization invariants.
inline constexpr double kNormTol = 1e-12;
/// Triangles below this area are rejected as degenerate.
inline constexpr double kDegenerateArea = 1e-14;

enum class Geometry : int { Hyperbolic = -1, Euclidean = 0, Spherical = 1 };

inline int curvature(Geometry g) { return static_cast<int>(g); }
Geometry geometry_from_curvature(int k);
const char* to_string(Geometry g);
/// Accepts "euclidean", "sphere"/"spherical", "hyperbolic" (and E2/S2/H2).
Geometry parse_geometry(std::string_view name);

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }
/// Lorentz form <a,b>_L = a0 b0 + a1 b1 - a2 b2.
inline double lorentz(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y - a.z * b.z; }
/// Reflection diag(1,1,-1); J(a x b) is Lorentz-orthogonal to a and b.
inline Vec3 lorentz_flip(Vec3 a) { return {a.x, a.y, -a.z}; }

/// A point of one of the three models. Construct through the named factories,
/// which establish the model invariant.
struct Point {
  Geometry geometry = Geometry::Euclidean;
  Vec3 coords{0, 0, 1};

  static Point euclidean(double x, double y) { return {Geometry::Euclidean, {x, y, 1.0}}; }
  /// Normalizes `v`; throws Domain on the zero vector.
  static Point spherical(Vec3 v);
  /// Hyperboloid point with spatial part (x0, x1).
  static Point hyperbolic(double x0, double x1) {
    return {Geometry::Hyperbolic, {x0, x1, std::sqrt(1.0 + x0 * x0 + x1 * x1)}};
  }
  /// From Poincare disk coordinates, |(u,v)| < 1.
  static Point poincare(double u, double v);
  /// Rescales onto the model surface (unit sphere / hyperboloid sheet).
  static Point renormalized(Geometry g, Vec3 v);

  /// Poincare disk coordinates of a hyperbolic point.
  std::array<double, 2> to_poincare() const;
  /// Klein disk coordinates of a hyperbolic point.
  std::array<double, 2> to_klein() const;

  /// Checks the normalization invariant of the model.
  bool valid() const;
};

/// Point at geodesic distance `r` from the model origin, in direction `angle`.
/// Origin: (0,0) in E, north pole (0,0,1) in S, (0,0,1) in H.
Point polar_point(Geometry g, double r, double angle);
Point origin(Geometry g);

/// Geodesic line. The normal encodes the defining linear functional:
///   E: (a, b, -c) with a^2+b^2 = 1, line {a x + b y = c}
///   S: unit n, line {<p,n> = 0}
///   H: spacelike n with <n,n>_L = 1, line {<p,n>_L = 0}
struct Geodesic {
  Geometry geometry = Geometry::Euclidean;
  Vec3 normal{1, 0, 0};

  /// Line through two distinct points.
  static Geodesic through(const Point& p, const Point& q);
  /// Perpendicular bisector of [p, q]; the positive side contains p.
  static Geodesic bisector(const Point& p, const Point& q);
  /// Two-parameter family covering all lines: direction `angle` of the normal
  /// and a signed `offset` (E: distance from origin, S: latitude of the pole,
  /// H: rapidity). Used by the continuous separability search.
  static Geodesic from_params(Geometry g, double angle, double offset);
  bool valid() const;
};

struct Disk {
  Point center;
  double radius = 0;
};

struct Circle {
  Point center;
  double radius = 0;
};

/// Non-degenerate geodesic triangle; use Triangle::make to validate.
struct Triangle {
  std::array<Point, 3> v;

  /// Throws GeometryMismatch, AntipodalPair or Degenerate.
  static Triangle make(const Point& a, const Point& b, const Point& c);
};

void require_same_geometry(const Point& p, const Point& q);

double distance(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);

/// Signed value of the line functional at p (sign = side of the line).
double signed_offset(const Geodesic& line, const Point& p);
double point_line_distance(const Point& p, const Geodesic& line);

/// Orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 within tol.
/// Measured as the signed offset of c from the line a->b, so the magnitude is
/// (a sine of) a distance.
int orientation(const Point& a, const Point& b, const Point& c, double tol = 0.0);
/// Determinant of the model coordinates; positive iff (a, b, c) is
/// counterclockwise. Cheap, unnormalized.
double orientation_det(const Point& a, const Point& b, const Point& c);

Circle circumcircle(const Triangle& t);
std::array<double, 3> side_lengths(const Triangle& t);
/// Interior angles at v[0], v[1], v[2] from the law of cosines (half-angle form).
/// side_lengths()[i] is the side opposite v[i].
std::array<double, 3> triangle_angles(const Triangle& t);
double triangle_area(const Triangle& t);
bool contains_circumcenter(const Triangle& t);

/// Interior angle at `p` of a counterclockwise polygon with neighbours `prev`
/// and `next`; in [0, 2pi).
double vertex_angle(const Point& prev, const Point& p, const Point& next);

/// Area of a simple counterclockwise polygon (Gauss-Bonnet for S and H).
double polygon_area(std::span<const Point> ccw);
/// Sum of interior angles of a simple counterclockwise polygon.
double polygon_angle_sum(std::span<const Point> ccw);

/// Area of a disk of radius r divided by 2pi, i.e. sector area per radian:
/// 1 - cos r (S), cosh r - 1 (H), r^2/2 (E).
double sector_area_per_radian(Geometry g, double r);
double disk_area(Geometry g, double r);

/// True iff L keeps every disk of `all` out of its open side, within 1e-12,
/// and the centers of A and B lie strictly on opposite sides.
bool line_separates_disks(const Geodesic& line, const Disk& a, const Disk& b,
                          std::span<const Disk> all);

/// True iff the closed geodesic segments [p,q] and [r,s] share a point other
/// than a common endpoint.
bool segments_meet(const Point& p, const Point& q, const Point& r, const Point& s,
                   double tol = 1e-9);

/// Point on [p, q] at fraction t of the distance from p.
Point interpolate(const Point& p, const Point& q, double t);

/// Approximate equality of model points.
bool same_point(const Point& p, const Point& q, double tol = 1e-9);

}  // namespace lsep
