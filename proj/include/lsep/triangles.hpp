#pragma once

// Isosceles triangles with base 2y and legs 2x: the extremal families
// T1^s(y), T2^s(y), T^h(y), T^e(y) and the regular triangles.

#include "lsep/geometry.hpp"

namespace lsep {

struct IsoTriangle {
  Geometry geometry = Geometry::Euclidean;
  double half_base = 0;  // y
  double half_leg = 0;   // x
  double lambda = 0;     // defining parameter (0 for regular / free triangles)
  int variant = 0;       // 1, 2 on the sphere; 0 otherwise
  bool regular = false;
};

/// Family member with x = x_of_y(g, variant, y, lambda).
IsoTriangle family_triangle(Geometry g, int variant, double y, double lambda);
/// Regular triangle of edge 2 rho (x = y = rho). Sphere needs rho < pi/3.
IsoTriangle regular_triangle(Geometry g, double rho);
/// Free isosceles triangle with base 2y and legs 2x.
IsoTriangle iso_triangle(Geometry g, double y, double x);

/// Explicit model triangle {apex, q1, q2}: base midpoint at the model origin,
/// q1,2 = polar_point(y, 0 / pi), apex on the perpendicular axis.
Triangle construct(const IsoTriangle& t);

/// Closed-form area of the family triangle (angle form of the Step-4
/// expressions; the Euclidean one is y * sqrt(4x^2 - y^2)).
double family_area(Geometry g, int variant, double y, double lambda);
/// cos(area/2) exactly as the printed closed form (S and H); test transcription.
double family_half_area_cosine(Geometry g, int variant, double y, double lambda);
/// Closed-form circumradius: cot R_i^s, coth R^h, R^e. Throws NoCircumcircle
/// when the hyperbolic triangle has none (coth R <= 1).
double family_circumradius(Geometry g, int variant, double y, double lambda);

/// Angles (apex, base, base), area and circumradius by the law of cosines.
std::array<double, 3> iso_angles(const IsoTriangle& t);
double iso_area(const IsoTriangle& t);
double iso_circumradius(const IsoTriangle& t);

/// Circumradius of the regular triangle of edge 2 rho: s(rho) = s(R) sqrt3/2.
double regular_circumradius(Geometry g, double rho);
double regular_area(Geometry g, double rho);

/// Cell density of a polygon with interior angle sum phi and area A:
/// w(rho) * phi / A, w the sector area per radian.
double cell_density_from(Geometry g, double rho, double angle_sum, double area);
/// delta(T) for a triangle with disks of radius rho at its vertices.
double triangle_density(const IsoTriangle& t, double rho);

/// Explicit check of the extremal tangency condition: the line through the
/// midpoints of one leg and of the base is at distance lambda from all three
/// vertices (within 1e-9).
bool satisfies_cstarstar(const IsoTriangle& t, double lambda);

/// Density of the two base-vertex disks of radius rho inside the isosceles
/// triangle with legs x and base y (full lengths).
double two_disk_density(Geometry g, double x, double y, double rho);

}  // namespace lsep
