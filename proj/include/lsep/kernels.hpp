#pragma once

// Data-parallel kernels. Each has an OpenMP version and a serial reference
// with identical results (the reductions are order independent or done in
// index order).

#include <vector>

#include "lsep/bounds.hpp"
#include "lsep/decomposition.hpp"

namespace lsep {

enum class Exec { Serial, Parallel };

enum class Quantity { Density, Tightness };

struct SweepRow {
  double lambda = 0;
  double rho = 0;
  double value = 0;
  Regime regime = Regime::Regular;
  bool ok = true;  // false when (lambda, rho) is outside the domain
};

/// Bound evaluation over the grid lambdas x rhos, row-major in lambda.
std::vector<SweepRow> bound_sweep(Geometry g, Quantity q, const std::vector<double>& lambdas,
                                  const std::vector<double>& rhos, Exec exec = Exec::Parallel);

/// Densities of all cells with positive area (non-interior cells included).
std::vector<double> cell_densities(const Decomposition& dec, double rho, Exec exec = Exec::Parallel);

/// Smallest pairwise distance, brute force.
double min_pairwise_distance(std::span<const Point> pts, Exec exec = Exec::Parallel);

/// Number of Delaunay cells whose circumdisk check fails (cells without a
/// circumcircle are skipped).
long count_nonempty_circumdisks(const Delaunay& d, double tol = 1e-10, Exec exec = Exec::Parallel);

/// Evenly spaced grid including both ends.
std::vector<double> linspace(double a, double b, int n);

}  // namespace lsep
