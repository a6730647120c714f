#pragma once

// Molnar decomposition (Delaunay cells with bridges through the circumcenters
// of cells that do not contain them) and its refinement into type-1 cells
// (circumradius <= R_rho) and type-2 cells (one disk pair each).

#include <array>
#include <optional>
#include <vector>

#include "lsep/delaunay.hpp"

namespace lsep {

enum class CellKind {
  MCell,     // unrefined Molnar cell
  Type1,     // Delaunay triangle of circumradius <= R_rho
  Type2,     // cl(conv{v, ci, cj} - conv{v', ci, cj})
  Boundary,  // hull cell that cannot be refined (no circumcircle or
             // circumcenter beyond a hull side); kept as its Molnar cell
};

const char* to_string(CellKind k);

/// Bridge [c_i, o_F] + [o_F, c_j] replacing the separating side [c_i, c_j].
struct Bridge {
  int cell = -1;        // Delaunay cell F
  int from = -1, to = -1;  // the separating side, counterclockwise in F
  int apex = -1;        // vertex id of o_F
};

struct MolnarCell {
  CellKind kind = CellKind::MCell;
  /// Counterclockwise vertex ids; id < n is an input point, id >= n is the
  /// circumcenter of Delaunay cell id - n.
  std::vector<int> boundary;
  int source_cell = -1;  // Delaunay cell the piece comes from
  int apex = -1;         // type 2: fan apex v
  int notch = -1;        // type 2: v' when it is a circumcenter, else -1
  std::array<int, 2> base{-1, -1};  // type 2: the side [ci, cj]
  bool on_hull = false;
};

struct Decomposition {
  Delaunay delaunay;
  /// Input points followed by one slot per Delaunay cell (its circumcenter,
  /// or a placeholder that is never referenced).
  std::vector<Point> vertices;
  std::vector<MolnarCell> cells;
  std::vector<Bridge> bridges;
  /// Cells whose circumcenter lies beyond a side of conv(X).
  std::vector<int> unbridged_hull_cells;
  /// Set by refine().
  double rho = 0;
  double saturation_radius = 0;

  Geometry geometry() const { return delaunay.geometry; }
  int point_count() const { return static_cast<int>(delaunay.points.size()); }
};

/// Separating side of a Delaunay cell: the side whose line has the
/// circumcenter strictly on the outer side (beyond `tol`). nullopt if the
/// cell contains its circumcenter or has none.
std::optional<std::array<int, 2>> separating_side(const Delaunay& d, int cell, double tol = 1e-10);

Decomposition molnar(const Delaunay& d);
Decomposition molnar(std::span<const Point> points);

/// Splits every Molnar cell into type-1 and type-2 cells for disks of radius
/// rho. Throws NotSaturated unless saturation_check(d, rho) holds and
/// NoThreshold on S2 for rho > pi/4.
Decomposition refine(const Decomposition& m, double rho);

/// Every interior Delaunay cell has circumradius <= 2 R_rho (and a
/// circumcircle), and there is at least one. Always true on S2 for rho > pi/4.
bool saturation_check(const Delaunay& d, double rho);

std::vector<Point> cell_polygon(const Decomposition& dec, const MolnarCell& c);
double cell_area(const Decomposition& dec, const MolnarCell& c);
/// Sum of interior angles at the input points (the disk centers) of the cell.
double cell_center_angle_sum(const Decomposition& dec, const MolnarCell& c);
/// w(rho) * (angle at centers) / area.
double cell_density(const Decomposition& dec, const MolnarCell& c, double rho);
/// Circumradius of the source Delaunay cell.
double cell_circumradius(const Decomposition& dec, const MolnarCell& c);

/// Sum of cell areas.
double total_area(const Decomposition& dec);

/// Every side not on the boundary of conv(X) is shared by exactly two cells
/// with opposite orientation.
bool edge_to_edge(const Decomposition& dec);

/// Pairwise checks on the bridges: (a) two bridges meet at most in a common
/// endpoint; (b) a bridge meets a Delaunay side only if that side is itself
/// bridged or shares an endpoint.
bool bridges_disjoint(const Decomposition& dec);
bool bridges_avoid_sides(const Decomposition& dec);

}  // namespace lsep
