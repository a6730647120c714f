#pragma once

// Piecewise density / tightness bounds for lambda-separable packings and the
// contact-number bounds for unit disks.

#include <optional>

#include "lsep/triangles.hpp"

namespace lsep {

enum class Regime {
  Regular,     // T_reg(rho)
  Family,      // T(x|_1^{-1}(rho)): T1^s, T^h, T^e at x = rho (or legs 2)
  FamilyMin,   // T(y_min(lambda)): smallest circumradius of the family
  Family2,     // T2^s(rho)
};

const char* to_string(Regime r);

struct BoundResult {
  double value = 0;
  Regime regime = Regime::Regular;
  std::optional<IsoTriangle> extremal_triangle;
  /// Equality is attained (the Euclidean bounds); on S and H the bound is
  /// attained only if a matching tiling exists.
  bool sharp = false;
};

/// Unit disks, 0 <= lambda <= 1.
BoundResult density_bound_euclidean(double lambda);
BoundResult tightness_bound_euclidean(double lambda);
/// Disks of radius rho: the unit bound at lambda/rho, rescaled.
BoundResult density_bound_euclidean(double lambda, double rho);
BoundResult tightness_bound_euclidean(double lambda, double rho);

BoundResult density_bound_spherical(double lambda, double rho);
BoundResult tightness_bound_spherical(double lambda, double rho);
BoundResult density_bound_hyperbolic(double lambda, double rho);
BoundResult tightness_bound_hyperbolic(double lambda, double rho);

BoundResult density_bound(Geometry g, double lambda, double rho);
BoundResult tightness_bound(Geometry g, double lambda, double rho);

struct ContactBounds {
  long lower = 0;
  /// lambda <= sqrt3/2: equals `lower` (exact). Otherwise the two-term
  /// expression 2n - sqrt(pi lambda) sqrt n, valid only up to an unknown O(1).
  double upper = 0;
  bool exact = false;
  bool upper_has_unresolved_constant = false;
};

ContactBounds contact_bounds(long n, double lambda);

/// floor(3n - sqrt(12n - 3)) and floor(2n - 2 sqrt n) in integer arithmetic.
long hexagonal_contact_number(long n);
long square_contact_number(long n);

}  // namespace lsep
