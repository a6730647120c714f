#pragma once

// Named extremal and witness configurations, plus random saturated sets.

#include <cstdint>
#include <string_view>

#include "lsep/packing.hpp"

namespace lsep {

/// Unit-disk lattice whose Delaunay triangles are T_reg^e(1) (lambda <=
/// sqrt3/2) or the isosceles triangle with legs 2 and horizontal base
/// 2 sqrt(2 - 2 sqrt(1 - lambda^2)). A patch of window x window fundamental
/// parallelograms. window >= 2.
Packing euclidean_extremal_density_lattice(double lambda, int window);

/// Lattice realizing the tightness-extremal triangle of the regime; for
/// lambda > 2sqrt2/3 the triangle with sides 3lambda/sqrt2 (twice), sqrt6 lambda.
Packing euclidean_extremal_tightness_config(double lambda, int window);

/// Caps of radius rho_n at the vertices of the regular tetrahedron (4),
/// octahedron (6) or icosahedron (12).
Packing platonic_caps(int n, double lambda = 0);
double platonic_radius(int n);

/// k x k unit disks, spacing 2, lambda = 1.
Packing square_grid(int k);
/// n unit disks of the hexagonal lattice in spiral order: the origin, then
/// ring after ring, each ring clockwise from its rightmost point.
Packing hexagonal_patch(int n, double lambda = 0);

struct SpecialConstants {
  double rho = 0;
  double lambda = 0;
};
/// "H16" or "H20".
SpecialConstants special_tiling_constants(std::string_view name);

/// Random packing of radius-rho disks, saturated in the sense of
/// saturation_check. E2/H2: a ring of centers spaced at least 2 rho on the
/// circle of radius `region` about the model origin, random sequential
/// addition inside it, then circumcenters of oversized interior Delaunay
/// cells are added until none is left. S2 ignores `region`.
Packing random_saturated(Geometry g, double rho, double region, std::uint64_t seed, double lambda = 0);

}  // namespace lsep
