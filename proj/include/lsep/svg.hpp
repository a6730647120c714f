#pragma once

// Static SVG 1.1 output. Projections: E2 as is, S2 orthographic from +z
// (front hemisphere only), H2 Poincare disk.

#include <string>
#include <vector>

#include "lsep/decomposition.hpp"

namespace lsep {

/// Cell edges solid, separating sides of the Delaunay cells dashed, disk
/// centers as dots. `rho` > 0 also draws the disks.
std::string svg_decomposition(const Decomposition& dec, double rho = 0);

struct Curve {
  std::string name;
  std::string color;
  std::vector<double> x, y;  // NaN y values break the polyline
};

std::string svg_curves(const std::vector<Curve>& curves, const std::string& xlabel, const std::string& ylabel);

}  // namespace lsep
