#pragma once

// Concrete packings: validity, density and tightness over the refined
// decomposition, contact graphs.

#include <optional>
#include <utility>
#include <vector>

#include "lsep/decomposition.hpp"

namespace lsep {

struct Packing {
  Geometry geometry = Geometry::Euclidean;
  std::vector<Point> centers;
  double rho = 1;
  double lambda = 0;

  /// rho > 0 (S: rho < pi/2), 0 <= lambda <= rho, centers in `geometry`.
  void validate() const;
  std::vector<Disk> disks(double radius) const;
};

struct PackingCheck {
  bool ok = true;
  /// The closest pair (the first violating pair when !ok).
  std::optional<std::pair<int, int>> pair;
  double min_distance = 0;
};

/// Pairwise center distances >= 2 rho - 1e-10.
PackingCheck verify_packing(const Packing& p);

struct DensityReport {
  double value = 0;
  bool saturated = true;
  bool whole_sphere = false;  // value is total cap area / 4 pi
  std::vector<double> cell_densities;  // interior refined cells
  std::vector<double> cell_areas;
  int boundary_cells = 0;              // hull cells left out of the average
};

/// S2 spanning the sphere: n * cap area / 4 pi. Otherwise the area-weighted
/// mean density of the interior cells of the refined decomposition (of the
/// Delaunay cells when the set is not saturated; then `saturated` is false).
DensityReport packing_density(const Packing& p);

struct TightnessReport {
  double value = 0;     // covering radius of the center set
  int cell = -1;        // Delaunay cell attaining it
  bool interior_only = false;
};

/// Max circumradius over the Delaunay cells (interior ones for E2/H2 and
/// hemisphere-bound S2 sets). Throws NotSaturated.
TightnessReport packing_tightness(const Packing& p);

struct ContactGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

/// Edge iff |d(ci, cj) - 2 rho| <= tol.
ContactGraph contact_graph(const Packing& p, double tol = 1e-9);
long contact_number(const Packing& p);
bool is_triangle_free(const ContactGraph& g);

/// Length of the closed walk around the unbounded face of the straight-line
/// embedding, summed over components (cut vertices and bridge edges count
/// each time they are passed; an isolated vertex counts once).
long outer_face_incidences(const ContactGraph& g, const std::vector<Point>& centers);

/// floor(2n - k/2 - 2).
long triangle_free_edge_bound(long n, long k);

}  // namespace lsep
