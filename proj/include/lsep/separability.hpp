#pragma once

// lambda-separability: every pair of centers is split by a geodesic that
// keeps a distance >= lambda from all centers.

#include <optional>
#include <utility>
#include <vector>

#include "lsep/packing.hpp"

namespace lsep {

/// Smallest distance from L to any center, provided centers i and j lie
/// strictly on opposite sides of L; -1 otherwise.
double separation_clearance(const Geodesic& L, std::span<const Point> centers, int i, int j);

struct PairSeparation {
  int i = -1, j = -1;
  Geodesic line;
  double clearance = -1;  // best clearance found
};

/// Best line for one pair: candidate lines (bisector, lines through the
/// midpoints of two edges at i or at j) followed by a local max-min search
/// over the line parameters. `neighbours` restricts the midpoint candidates;
/// empty means all centers. Stops early once `target` is reached.
PairSeparation best_separating_line(std::span<const Point> centers, int i, int j,
                                    const std::vector<std::vector<int>>& neighbours, double target);

struct SeparabilityReport {
  bool separable = true;
  std::vector<PairSeparation> witnesses;     // one per pair, i < j
  std::optional<PairSeparation> failing;     // worst pair when not separable
};

/// Accepts a pair at clearance >= lambda - 1e-8; `parallel` uses OpenMP
/// over the pairs.
SeparabilityReport is_lambda_separable(const Packing& p, bool parallel = true);

}  // namespace lsep
