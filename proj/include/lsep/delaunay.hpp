#pragma once

// Delaunay decomposition of a finite point set in E2, S2 or H2.
//
// All three are computed as convex-hull faces of lifted points:
//   E: lower faces of the paraboloid lift (x, y, x^2 + y^2)
//   S: faces of the hull of the unit vectors with the origin inside
//   H: faces of the hull of the hyperboloid points seen from the origin
// by gift wrapping from the closest pair. Cocircular points become one
// polygonal cell.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "lsep/geometry.hpp"

namespace lsep {

struct DelaunayCell {
  std::vector<int> vertices;  // counterclockwise indices into the point list
  /// Missing for hyperbolic cells bounded by a hypercycle or horocycle.
  std::optional<Point> circumcenter;
  double circumradius = 0;  // +inf when there is no circumcenter
  bool on_hull = false;     // has a side on the boundary of conv(X)
};

struct Delaunay {
  Geometry geometry = Geometry::Euclidean;
  std::vector<Point> points;
  std::vector<DelaunayCell> cells;
  /// Directed boundary sides of conv(X), interior on the left. Empty when X
  /// is not contained in a closed hemisphere of S2.
  std::vector<std::array<int, 2>> hull_edges;

  bool covers_sphere() const { return geometry == Geometry::Spherical && hull_edges.empty(); }
};

/// Throws Degenerate for fewer than 3 points, coincident points or a
/// collinear set. Antipodal pairs are fine as long as no cell joins them
/// (AntipodalPair otherwise).
Delaunay delaunay(std::span<const Point> points, double cocircular_tol = 1e-11);

/// Model vertices of a cell.
std::vector<Point> cell_points(const Delaunay& d, const DelaunayCell& c);

/// Counterclockwise boundary of conv(X) as point indices (empty if X spans S2).
std::vector<int> hull_polygon(const Delaunay& d);
/// Area of conv(X); 4 pi when X spans the sphere.
double hull_area(const Delaunay& d);

/// True iff no point lies strictly inside the circumdisk (tolerance `tol`).
bool empty_circumdisk(const Delaunay& d, const DelaunayCell& c, double tol = 1e-10);

}  // namespace lsep
