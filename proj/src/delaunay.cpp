#include "lsep/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace lsep {

namespace {

// Coordinates whose convex hull carries the Delaunay faces.
std::vector<Vec3> lifted(std::span<const Point> pts, Vec3 shift) {
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (p.geometry == Geometry::Euclidean) {
      double x = p.coords.x - shift.x, y = p.coords.y - shift.y;
      out.push_back({x, y, x * x + y * y});
    } else {
      out.push_back(p.coords);
    }
  }
  return out;
}

// Sort polygon vertices counterclockwise about their centroid, measured in
// the tangent plane there.
void sort_ccw(std::vector<int>& ids, std::span<const Point> pts) {
  const Geometry g = pts[ids[0]].geometry;
  Vec3 c{0, 0, 0};
  for (int i : ids) c = c + pts[i].coords;
  c = c / double(ids.size());
  if (g != Geometry::Euclidean) c = Point::renormalized(g, c).coords;
  auto tangent = [&](const Vec3& p) -> Vec3 {
    switch (g) {
      case Geometry::Euclidean: return {p.x - c.x, p.y - c.y, 0};
      case Geometry::Spherical: return p - dot(c, p) * c;
      case Geometry::Hyperbolic: return p + lorentz(c, p) * c;
    }
    return {};
  };
  auto inner = [&](Vec3 a, Vec3 b) { return g == Geometry::Hyperbolic ? lorentz(a, b) : dot(a, b); };
  Vec3 normal = g == Geometry::Euclidean ? Vec3{0, 0, 1} : c;
  Vec3 e1 = tangent(pts[ids[0]].coords);
  std::vector<std::pair<double, int>> keyed;
  for (int i : ids) {
    Vec3 t = tangent(pts[i].coords);
    keyed.push_back({std::atan2(det3(normal, e1, t), inner(e1, t)), i});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = keyed[k].second;
}

void validate_input(std::span<const Point> pts) {
  if (pts.size() < 3) throw Error(ErrorCode::Degenerate, "Delaunay needs at least 3 points");
  const Geometry g = pts[0].geometry;
  for (const Point& p : pts) {
    if (p.geometry != g) throw Error(ErrorCode::GeometryMismatch, "mixed geometries in point set");
    if (!p.valid()) throw Error(ErrorCode::Domain, "point off the model surface");
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (distance(pts[i], pts[j]) < 1e-12)
        throw Error(ErrorCode::Degenerate,
                    "coincident points " + std::to_string(i) + ", " + std::to_string(j));
    }
}

}  // namespace

Delaunay delaunay(std::span<const Point> points, double cocircular_tol) {
  validate_input(points);
  const Geometry g = points[0].geometry;
  const int n = static_cast<int>(points.size());

  Delaunay out;
  out.geometry = g;
  out.points.assign(points.begin(), points.end());

  Vec3 shift{0, 0, 0};
  if (g == Geometry::Euclidean) {
    for (const Point& p : points) shift = shift + p.coords;
    shift = shift / double(n);
  }
  const std::vector<Vec3> L = lifted(points, shift);
  std::vector<Vec3> M(n);  // model coordinates for orientation
  for (int i = 0; i < n; ++i)
    M[i] = g == Geometry::Euclidean ? Vec3{L[i].x, L[i].y, 1.0} : points[i].coords;
  // inside the circle through a, b, c  <=>  inside_sign * n.(P - A) > 0
  const double inside_sign = g == Geometry::Spherical ? 1.0 : -1.0;

  auto left_of = [&](int a, int b, int c) {
    double d = det3(M[a], M[b], M[c]);
    double scale = norm(cross(M[a], M[b])) * norm(M[c]);
    return d > 1e-13 * scale;
  };
  // relative insideness of d w.r.t. the circle through a, b, c
  auto inside = [&](int a, int b, int c, int d) {
    Vec3 nrm = cross(L[b] - L[a], L[c] - L[a]);
    Vec3 pd = L[d] - L[a];
    double s = norm(nrm) * norm(pd);
    return s > 0 ? inside_sign * dot(nrm, pd) / s : 0.0;
  };

  // closest pair is a Delaunay edge
  int sa = 0, sb = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = distance(points[i], points[j]);
      if (d < best) best = d, sa = i, sb = j;
    }

  std::set<std::pair<int, int>> done;
  std::set<std::vector<int>> seen;
  std::vector<std::pair<int, int>> stack{{sa, sb}, {sb, sa}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (done.count({a, b})) continue;
    done.insert({a, b});

    int c = -1;
    for (int d = 0; d < n; ++d) {
      if (d == a || d == b || !left_of(a, b, d)) continue;
      if (c < 0 || inside(a, b, c, d) > cocircular_tol) c = d;
    }
    if (c < 0) {
      out.hull_edges.push_back({b, a});
      continue;
    }
    std::vector<int> poly{a, b};
    for (int d = 0; d < n; ++d) {
      if (d == a || d == b) continue;
      if (d == c || (left_of(a, b, d) && std::abs(inside(a, b, c, d)) <= cocircular_tol))
        poly.push_back(d);
    }
    sort_ccw(poly, points);
    std::vector<int> key = poly;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;

    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
      int u = poly[i], v = poly[(i + 1) % k];
      done.insert({u, v});
      if (!done.count({v, u})) stack.push_back({v, u});
    }
    DelaunayCell cell;
    cell.vertices = std::move(poly);
    out.cells.push_back(std::move(cell));
  }
  if (out.cells.empty()) throw Error(ErrorCode::Degenerate, "point set is collinear");

  std::set<std::pair<int, int>> hull;
  for (auto [u, v] : out.hull_edges) hull.insert({u, v});
  for (DelaunayCell& cell : out.cells) {
    const auto& vs = cell.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (hull.count({vs[i], vs[(i + 1) % vs.size()]})) cell.on_hull = true;
    Triangle t = Triangle::make(points[vs[0]], points[vs[1]], points[vs[2]]);
    try {
      Circle cc = circumcircle(t);
      cell.circumcenter = cc.center;
      cell.circumradius = cc.radius;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoCircumcircle) throw;
      cell.circumradius = std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

std::vector<Point> cell_points(const Delaunay& d, const DelaunayCell& c) {
  std::vector<Point> out;
  out.reserve(c.vertices.size());
  for (int i : c.vertices) out.push_back(d.points[i]);
  return out;
}

std::vector<int> hull_polygon(const Delaunay& d) {
  if (d.hull_edges.empty()) return {};
  std::map<int, int> next;
  for (auto [u, v] : d.hull_edges) next[u] = v;
  std::vector<int> out{d.hull_edges[0][0]};
  for (int v = next[out[0]]; v != out[0]; v = next.at(v)) {
    out.push_back(v);
    if (out.size() > d.hull_edges.size())
      throw Error(ErrorCode::Degenerate, "hull sides do not close up");
  }
  return out;
}

double hull_area(const Delaunay& d) {
  if (d.covers_sphere()) return 4 * kPi;
  std::vector<Point> poly;
  for (int i : hull_polygon(d)) poly.push_back(d.points[i]);
  return polygon_area(poly);
}

bool empty_circumdisk(const Delaunay& d, const DelaunayCell& c, double tol) {
  if (!c.circumcenter) return false;
  const double R = c.circumradius;
  std::vector<bool> is_vertex(d.points.size(), false);
  for (int i : c.vertices) {
    is_vertex[i] = true;
    if (std::abs(distance(*c.circumcenter, d.points[i]) - R) > tol * std::max(1.0, R)) return false;
  }
  for (std::size_t i = 0; i < d.points.size(); ++i)
    if (!is_vertex[i] && distance(*c.circumcenter, d.points[i]) < R - tol * std::max(1.0, R))
      return false;
  return true;
}

}  // namespace lsep
