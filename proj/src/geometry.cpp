#include "lsep/geometry.hpp"

#include <algorithm>
#include <string>

namespace lsep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::GeometryMismatch: return "geometry mismatch";
    case ErrorCode::AntipodalPair: return "antipodal pair";
    case ErrorCode::Degenerate: return "degenerate input";
    case ErrorCode::NoCircumcircle: return "no circumcircle";
    case ErrorCode::Domain: return "domain violation";
    case ErrorCode::NoThreshold: return "threshold undefined";
    case ErrorCode::NotSaturated: return "not saturated";
    case ErrorCode::Construction: return "construction failure";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown";
}

Geometry geometry_from_curvature(int k) {
  switch (k) {
    case -1: return Geometry::Hyperbolic;
    case 0: return Geometry::Euclidean;
    case 1: return Geometry::Spherical;
  }
  throw Error(ErrorCode::Domain, "curvature must be -1, 0 or 1, got " + std::to_string(k));
}

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic: return "hyperbolic";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Spherical: return "spherical";
  }
  return "?";
}

Geometry parse_geometry(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "euclidean" || s == "e2" || s == "e" || s == "0") return Geometry::Euclidean;
  if (s == "sphere" || s == "spherical" || s == "s2" || s == "s" || s == "1" || s == "+1")
    return Geometry::Spherical;
  if (s == "hyperbolic" || s == "h2" || s == "h" || s == "-1") return Geometry::Hyperbolic;
  throw Error(ErrorCode::Parse, "unknown geometry '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Points

Point Point::spherical(Vec3 v) {
  double n = norm(v);
  if (!(n > 1e-300)) throw Error(ErrorCode::Domain, "zero vector is not a point of S2");
  return {Geometry::Spherical, v / n};
}

Point Point::poincare(double u, double v) {
  double r2 = u * u + v * v;
  if (!(r2 < 1.0)) throw Error(ErrorCode::Domain, "Poincare coordinates outside the unit disk");
  double k = 1.0 / (1.0 - r2);
  return {Geometry::Hyperbolic, {2 * u * k, 2 * v * k, (1 + r2) * k}};
}

Point Point::renormalized(Geometry g, Vec3 v) {
  switch (g) {
    case Geometry::Euclidean: return euclidean(v.x, v.y);
    case Geometry::Spherical: return spherical(v);
    case Geometry::Hyperbolic: {
      double q = -lorentz(v, v);
      if (!(q > 0)) throw Error(ErrorCode::Domain, "vector is not timelike");
      Vec3 w = v / std::sqrt(q);
      if (w.z < 0) w = -w;
      return {Geometry::Hyperbolic, w};
    }
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

std::array<double, 2> Point::to_poincare() const {
  return {coords.x / (1 + coords.z), coords.y / (1 + coords.z)};
}

std::array<double, 2> Point::to_klein() const { return {coords.x / coords.z, coords.y / coords.z}; }

bool Point::valid() const {
  switch (geometry) {
    case Geometry::Euclidean: return coords.z == 1.0;
    case Geometry::Spherical: return std::abs(norm(coords) - 1.0) <= kNormTol;
    case Geometry::Hyperbolic:
      // relative check; far-out points have large coordinates
      return coords.z >= 1.0 &&
             std::abs(lorentz(coords, coords) + 1.0) <= kNormTol * std::max(1.0, coords.z * coords.z);
  }
  return false;
}

Point polar_point(Geometry g, double r, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  switch (g) {
    case Geometry::Euclidean: return Point::euclidean(r * c, r * s);
    case Geometry::Spherical:
      return {Geometry::Spherical, {std::sin(r) * c, std::sin(r) * s, std::cos(r)}};
    case Geometry::Hyperbolic:
      return {Geometry::Hyperbolic, {std::sinh(r) * c, std::sinh(r) * s, std::cosh(r)}};
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

Point origin(Geometry g) { return {g, {0, 0, 1}}; }

void require_same_geometry(const Point& p, const Point& q) {
  if (p.geometry != q.geometry)
    throw Error(ErrorCode::GeometryMismatch,
                std::string("points from ") + to_string(p.geometry) + " and " + to_string(q.geometry));
}

static void require_not_antipodal(const Point& p, const Point& q) {
  if (p.geometry == Geometry::Spherical && norm(p.coords + q.coords) < 1e-12)
    throw Error(ErrorCode::AntipodalPair, "antipodal points have no unique segment");
}

double distance(const Point& p, const Point& q) {
  require_same_geometry(p, q);
  switch (p.geometry) {
    case Geometry::Euclidean: return std::hypot(p.coords.x - q.coords.x, p.coords.y - q.coords.y);
    case Geometry::Spherical: return std::atan2(norm(cross(p.coords, q.coords)), dot(p.coords, q.coords));
    case Geometry::Hyperbolic: {
      Vec3 d = p.coords - q.coords;
      return 2.0 * std::asinh(std::sqrt(std::max(0.0, lorentz(d, d))) / 2.0);
    }
  }
  return 0;
}

Point midpoint(const Point& p, const Point& q) {
  require_same_geometry(p, q);
  switch (p.geometry) {
    case Geometry::Euclidean:
      return Point::euclidean((p.coords.x + q.coords.x) / 2, (p.coords.y + q.coords.y) / 2);
    case Geometry::Spherical:
      require_not_antipodal(p, q);
      return Point::spherical(p.coords + q.coords);
    case Geometry::Hyperbolic: return Point::renormalized(Geometry::Hyperbolic, p.coords + q.coords);
  }
  return p;
}

Point interpolate(const Point& p, const Point& q, double t) {
  require_same_geometry(p, q);
  if (p.geometry == Geometry::Euclidean)
    return Point::euclidean(p.coords.x + t * (q.coords.x - p.coords.x),
                            p.coords.y + t * (q.coords.y - p.coords.y));
  double d = distance(p, q);
  if (d < 1e-14) return p;
  double a, b;
  if (p.geometry == Geometry::Spherical) {
    a = std::sin((1 - t) * d) / std::sin(d);
    b = std::sin(t * d) / std::sin(d);
  } else {
    a = std::sinh((1 - t) * d) / std::sinh(d);
    b = std::sinh(t * d) / std::sinh(d);
  }
  return Point::renormalized(p.geometry, a * p.coords + b * q.coords);
}

bool same_point(const Point& p, const Point& q, double tol) {
  if (p.geometry != q.geometry) return false;
  return distance(p, q) <= tol;
}

// ---------------------------------------------------------------------------
// Geodesics

Geodesic Geodesic::through(const Point& p, const Point& q) {
  require_same_geometry(p, q);
  switch (p.geometry) {
    case Geometry::Euclidean: {
      double dx = q.coords.x - p.coords.x, dy = q.coords.y - p.coords.y;
      double len = std::hypot(dx, dy);
      if (!(len > 0)) throw Error(ErrorCode::Degenerate, "line through coincident points");
      double a = -dy / len, b = dx / len;
      return {Geometry::Euclidean, {a, b, -(a * p.coords.x + b * p.coords.y)}};
    }
    case Geometry::Spherical: {
      require_not_antipodal(p, q);
      Vec3 n = cross(p.coords, q.coords);
      double len = norm(n);
      if (!(len > 0)) throw Error(ErrorCode::Degenerate, "line through coincident points");
      return {Geometry::Spherical, n / len};
    }
    case Geometry::Hyperbolic: {
      Vec3 n = lorentz_flip(cross(p.coords, q.coords));
      double q2 = lorentz(n, n);
      if (!(q2 > 0)) throw Error(ErrorCode::Degenerate, "line through coincident points");
      return {Geometry::Hyperbolic, n / std::sqrt(q2)};
    }
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

Geodesic Geodesic::bisector(const Point& p, const Point& q) {
  require_same_geometry(p, q);
  switch (p.geometry) {
    case Geometry::Euclidean: {
      double dx = p.coords.x - q.coords.x, dy = p.coords.y - q.coords.y;
      double len = std::hypot(dx, dy);
      if (!(len > 0)) throw Error(ErrorCode::Degenerate, "bisector of coincident points");
      double a = dx / len, b = dy / len;
      double c = a * (p.coords.x + q.coords.x) / 2 + b * (p.coords.y + q.coords.y) / 2;
      return {Geometry::Euclidean, {a, b, -c}};
    }
    case Geometry::Spherical: {
      Vec3 n = p.coords - q.coords;
      double len = norm(n);
      if (!(len > 0)) throw Error(ErrorCode::Degenerate, "bisector of coincident points");
      return {Geometry::Spherical, n / len};
    }
    case Geometry::Hyperbolic: {
      Vec3 n = p.coords - q.coords;
      double q2 = lorentz(n, n);
      if (!(q2 > 0)) throw Error(ErrorCode::Degenerate, "bisector of coincident points");
      return {Geometry::Hyperbolic, n / std::sqrt(q2)};
    }
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

Geodesic Geodesic::from_params(Geometry g, double angle, double offset) {
  double c = std::cos(angle), s = std::sin(angle);
  switch (g) {
    case Geometry::Euclidean: return {g, {c, s, -offset}};
    case Geometry::Spherical:
      return {g, {c * std::cos(offset), s * std::cos(offset), std::sin(offset)}};
    case Geometry::Hyperbolic:
      return {g, {c * std::cosh(offset), s * std::cosh(offset), std::sinh(offset)}};
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

bool Geodesic::valid() const {
  switch (geometry) {
    case Geometry::Euclidean: return std::abs(std::hypot(normal.x, normal.y) - 1) <= kNormTol;
    case Geometry::Spherical: return std::abs(norm(normal) - 1) <= kNormTol;
    case Geometry::Hyperbolic:
      return std::abs(lorentz(normal, normal) - 1) <= kNormTol * std::max(1.0, normal.z * normal.z);
  }
  return false;
}

double signed_offset(const Geodesic& line, const Point& p) {
  if (line.geometry != p.geometry)
    throw Error(ErrorCode::GeometryMismatch, "line and point from different geometries");
  if (p.geometry == Geometry::Hyperbolic) return lorentz(line.normal, p.coords);
  return dot(line.normal, p.coords);
}

double point_line_distance(const Point& p, const Geodesic& line) {
  double s = std::abs(signed_offset(line, p));
  switch (p.geometry) {
    case Geometry::Euclidean: return s;
    case Geometry::Spherical: return std::asin(std::min(1.0, s));
    case Geometry::Hyperbolic: return std::asinh(s);
  }
  return s;
}

double orientation_det(const Point& a, const Point& b, const Point& c) {
  require_same_geometry(a, b);
  require_same_geometry(a, c);
  return det3(a.coords, b.coords, c.coords);
}

int orientation(const Point& a, const Point& b, const Point& c, double tol) {
  double s = signed_offset(Geodesic::through(a, b), c);
  if (s > tol) return 1;
  if (s < -tol) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Triangles

std::array<double, 3> side_lengths(const Triangle& t) {
  return {distance(t.v[1], t.v[2]), distance(t.v[0], t.v[2]), distance(t.v[0], t.v[1])};
}

namespace {

// sin, sinh or identity, depending on the curvature
double curved(Geometry g, double x) {
  switch (g) {
    case Geometry::Spherical: return std::sin(x);
    case Geometry::Hyperbolic: return std::sinh(x);
    case Geometry::Euclidean: return x;
  }
  return x;
}

std::array<double, 3> angles_from_sides(Geometry g, const std::array<double, 3>& side) {
  double s = (side[0] + side[1] + side[2]) / 2;
  std::array<double, 3> ang{};
  for (int i = 0; i < 3; ++i) {
    double a = side[i], b = side[(i + 1) % 3], c = side[(i + 2) % 3];
    double num = std::max(0.0, curved(g, s - b) * curved(g, s - c));
    double den = std::max(0.0, curved(g, s) * curved(g, s - a));
    ang[i] = 2 * std::atan2(std::sqrt(num), std::sqrt(den));
  }
  return ang;
}

double area_from_sides(Geometry g, const std::array<double, 3>& side) {
  double s = (side[0] + side[1] + side[2]) / 2;
  auto pos = [](double v) { return std::max(0.0, v); };
  switch (g) {
    case Geometry::Euclidean:
      return std::sqrt(pos(s * (s - side[0]) * (s - side[1]) * (s - side[2])));
    case Geometry::Spherical: {
      // l'Huilier
      double p = std::tan(s / 2) * std::tan((s - side[0]) / 2) * std::tan((s - side[1]) / 2) *
                 std::tan((s - side[2]) / 2);
      return 4 * std::atan(std::sqrt(pos(p)));
    }
    case Geometry::Hyperbolic: {
      double p = std::tanh(s / 2) * std::tanh((s - side[0]) / 2) * std::tanh((s - side[1]) / 2) *
                 std::tanh((s - side[2]) / 2);
      return 4 * std::atan(std::sqrt(pos(p)));
    }
  }
  return 0;
}

}  // namespace

Triangle Triangle::make(const Point& a, const Point& b, const Point& c) {
  require_same_geometry(a, b);
  require_same_geometry(a, c);
  require_not_antipodal(a, b);
  require_not_antipodal(b, c);
  require_not_antipodal(a, c);
  Triangle t{{a, b, c}};
  double area = 0;
  if (a.geometry == Geometry::Euclidean)
    area = std::abs(orientation_det(a, b, c)) / 2;
  else
    area = area_from_sides(a.geometry, side_lengths(t));
  if (!(area >= kDegenerateArea)) throw Error(ErrorCode::Degenerate, "degenerate triangle");
  return t;
}

std::array<double, 3> triangle_angles(const Triangle& t) {
  return angles_from_sides(t.v[0].geometry, side_lengths(t));
}

double triangle_area(const Triangle& t) {
  if (t.v[0].geometry == Geometry::Euclidean)
    return std::abs(orientation_det(t.v[0], t.v[1], t.v[2])) / 2;
  return area_from_sides(t.v[0].geometry, side_lengths(t));
}

Circle circumcircle(const Triangle& t) {
  const Point &a = t.v[0], &b = t.v[1], &c = t.v[2];
  switch (a.geometry) {
    case Geometry::Euclidean: {
      double bx = b.coords.x - a.coords.x, by = b.coords.y - a.coords.y;
      double cx = c.coords.x - a.coords.x, cy = c.coords.y - a.coords.y;
      double d = 2 * (bx * cy - by * cx);
      if (d == 0) throw Error(ErrorCode::Degenerate, "collinear triangle");
      double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
      Point o = Point::euclidean(a.coords.x + (cy * b2 - by * c2) / d,
                                 a.coords.y + (bx * c2 - cx * b2) / d);
      return {o, distance(o, a)};
    }
    case Geometry::Spherical: {
      Vec3 n = cross(b.coords - a.coords, c.coords - a.coords);
      double len = norm(n);
      if (!(len > 0)) throw Error(ErrorCode::Degenerate, "collinear triangle");
      n = n / len;
      double h = dot(n, a.coords);
      if (h < 0) {
        n = -n;
        h = -h;
      }
      if (h <= kNormTol)
        throw Error(ErrorCode::NoCircumcircle, "spherical triangle has no circumdisk below pi/2");
      Point o{Geometry::Spherical, n};
      return {o, distance(o, a)};
    }
    case Geometry::Hyperbolic: {
      Vec3 n = lorentz_flip(cross(b.coords - a.coords, c.coords - a.coords));
      double q = lorentz(n, n);
      // a timelike normal is needed for a genuine circle (else hyper/horocycle)
      if (!(q < -kNormTol * std::max(1.0, dot(n, n))))
        throw Error(ErrorCode::NoCircumcircle, "hyperbolic triangle has no circumcircle");
      Vec3 o = n / std::sqrt(-q);
      if (o.z < 0) o = -o;
      Point op{Geometry::Hyperbolic, o};
      return {op, distance(op, a)};
    }
  }
  throw Error(ErrorCode::Domain, "bad geometry");
}

bool contains_circumcenter(const Triangle& t) {
  Circle c = circumcircle(t);
  for (int i = 0; i < 3; ++i) {
    Geodesic edge = Geodesic::through(t.v[(i + 1) % 3], t.v[(i + 2) % 3]);
    double sv = signed_offset(edge, t.v[i]);
    double so = signed_offset(edge, c.center);
    if ((sv > 0 ? so : -so) < -kPredicateTol) return false;
  }
  return true;
}

double vertex_angle(const Point& prev, const Point& p, const Point& next) {
  require_same_geometry(prev, p);
  require_same_geometry(next, p);
  double s = 0, c = 0;
  switch (p.geometry) {
    case Geometry::Euclidean: {
      double ax = next.coords.x - p.coords.x, ay = next.coords.y - p.coords.y;
      double bx = prev.coords.x - p.coords.x, by = prev.coords.y - p.coords.y;
      s = ax * by - ay * bx;
      c = ax * bx + ay * by;
      break;
    }
    case Geometry::Spherical: {
      Vec3 tn = next.coords - dot(p.coords, next.coords) * p.coords;
      Vec3 tp = prev.coords - dot(p.coords, prev.coords) * p.coords;
      s = det3(p.coords, tn, tp);
      c = dot(tn, tp);
      break;
    }
    case Geometry::Hyperbolic: {
      Vec3 tn = next.coords + lorentz(p.coords, next.coords) * p.coords;
      Vec3 tp = prev.coords + lorentz(p.coords, prev.coords) * p.coords;
      s = det3(p.coords, tn, tp);
      c = lorentz(tn, tp);
      break;
    }
  }
  double a = std::atan2(s, c);
  return a < 0 ? a + 2 * kPi : a;
}

double polygon_angle_sum(std::span<const Point> ccw) {
  const std::size_t k = ccw.size();
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i)
    sum += vertex_angle(ccw[(i + k - 1) % k], ccw[i], ccw[(i + 1) % k]);
  return sum;
}

double polygon_area(std::span<const Point> ccw) {
  const std::size_t k = ccw.size();
  if (k < 3) return 0;
  switch (ccw[0].geometry) {
    case Geometry::Euclidean: {
      double a = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Vec3 &p = ccw[i].coords, &q = ccw[(i + 1) % k].coords;
        a += p.x * q.y - p.y * q.x;
      }
      return a / 2;
    }
    case Geometry::Spherical: return polygon_angle_sum(ccw) - (double(k) - 2) * kPi;
    case Geometry::Hyperbolic: return (double(k) - 2) * kPi - polygon_angle_sum(ccw);
  }
  return 0;
}

double sector_area_per_radian(Geometry g, double r) {
  switch (g) {
    case Geometry::Euclidean: return r * r / 2;
    case Geometry::Spherical: {
      double s = std::sin(r / 2);
      return 2 * s * s;
    }
    case Geometry::Hyperbolic: {
      double s = std::sinh(r / 2);
      return 2 * s * s;
    }
  }
  return 0;
}

double disk_area(Geometry g, double r) { return 2 * kPi * sector_area_per_radian(g, r); }

bool line_separates_disks(const Geodesic& line, const Disk& a, const Disk& b,
                          std::span<const Disk> all) {
  double sa = signed_offset(line, a.center);
  double sb = signed_offset(line, b.center);
  if (!((sa > 0 && sb < 0) || (sa < 0 && sb > 0))) return false;
  if (point_line_distance(a.center, line) < a.radius - 1e-12) return false;
  if (point_line_distance(b.center, line) < b.radius - 1e-12) return false;
  for (const Disk& d : all)
    if (point_line_distance(d.center, line) < d.radius - 1e-12) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Segment intersection

namespace {

bool on_open_segment(const Point& x, const Point& a, const Point& b, double tol) {
  if (same_point(x, a, tol) || same_point(x, b, tol)) return false;
  return distance(a, x) + distance(x, b) - distance(a, b) <= tol;
}

}  // namespace

bool segments_meet(const Point& p, const Point& q, const Point& r, const Point& s, double tol) {
  require_same_geometry(p, r);
  bool pr = same_point(p, r, tol), ps = same_point(p, s, tol);
  bool qr = same_point(q, r, tol), qs = same_point(q, s, tol);
  if ((pr && qs) || (ps && qr)) return true;  // identical segments

  // an endpoint of one lying inside the other
  if (on_open_segment(r, p, q, tol) || on_open_segment(s, p, q, tol) ||
      on_open_segment(p, r, s, tol) || on_open_segment(q, r, s, tol))
    return true;
  if (pr || ps || qr || qs) return false;  // only a shared endpoint left

  Geodesic l1 = Geodesic::through(p, q), l2 = Geodesic::through(r, s);
  double o1 = signed_offset(l1, r), o2 = signed_offset(l1, s);
  double o3 = signed_offset(l2, p), o4 = signed_offset(l2, q);
  bool cross12 = (o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0);
  bool cross34 = (o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0);
  if (!cross12 || !cross34) return false;
  if (p.geometry == Geometry::Spherical) {
    // the great circles meet at +-X; both arcs must contain the same one
    Vec3 x = cross(l1.normal, l2.normal);
    if (dot(x, p.coords + q.coords) < 0) x = -x;
    return dot(x, r.coords + s.coords) > 0;
  }
  return true;
}

}  // namespace lsep
