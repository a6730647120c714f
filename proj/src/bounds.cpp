#include "lsep/bounds.hpp"

#include <cmath>
#include <string>

#include "lsep/formulas.hpp"

namespace lsep {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }

const double kSqrt3Half = std::sqrt(3.0) / 2;
const double kTwoSqrt2Third = 2 * std::sqrt(2.0) / 3;

void check_unit_lambda(double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) domain("lambda must lie in [0, 1] for unit disks");
}

// half-base of the density-extremal Euclidean triangle (legs 2, height 2 lambda)
double euclid_density_y(double lambda) { return std::sqrt(2 - 2 * std::sqrt(1 - lambda * lambda)); }

long ceil_sqrt(long m) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(m)));
  while (s * s > m) --s;
  while ((s + 1) * (s + 1) <= m) ++s;
  return s * s == m ? s : s + 1;
}

double density_of(const IsoTriangle& t, double rho) { return triangle_density(t, rho); }

// family_circumradius gives cot R (S) or coth R (H)
double family_radius(Geometry g, int variant, double y, double lambda) {
  double c = family_circumradius(g, variant, y, lambda);
  return g == Geometry::Spherical ? std::atan2(1.0, c) : std::atanh(1 / c);
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Regular: return "regular";
    case Regime::Family: return "family";
    case Regime::FamilyMin: return "family-min";
    case Regime::Family2: return "family2";
  }
  return "?";
}

BoundResult density_bound_euclidean(double lambda) {
  check_unit_lambda(lambda);
  if (lambda <= kSqrt3Half)
    return {kPi / std::sqrt(12.0), Regime::Regular, regular_triangle(Geometry::Euclidean, 1), true};
  return {kPi / (4 * lambda), Regime::Family,
          family_triangle(Geometry::Euclidean, 0, euclid_density_y(lambda), lambda), true};
}

BoundResult tightness_bound_euclidean(double lambda) {
  check_unit_lambda(lambda);
  if (lambda <= kSqrt3Half)
    return {2 / std::sqrt(3.0), Regime::Regular, regular_triangle(Geometry::Euclidean, 1), true};
  if (lambda <= kTwoSqrt2Third)
    return {euclid_density_y(lambda) / lambda, Regime::Family,
            family_triangle(Geometry::Euclidean, 0, euclid_density_y(lambda), lambda), true};
  return {3 * std::sqrt(3.0) * lambda / 4, Regime::FamilyMin,
          family_triangle(Geometry::Euclidean, 0, std::sqrt(1.5) * lambda, lambda), true};
}

namespace {

IsoTriangle scaled(IsoTriangle t, double rho) {
  t.half_base *= rho;
  t.half_leg *= rho;
  t.lambda *= rho;
  return t;
}

}  // namespace

BoundResult density_bound_euclidean(double lambda, double rho) {
  if (!(rho > 0)) domain("rho must be positive");
  if (!(lambda <= rho)) domain("lambda <= rho violated");
  BoundResult r = density_bound_euclidean(lambda / rho);
  if (r.extremal_triangle) r.extremal_triangle = scaled(*r.extremal_triangle, rho);
  return r;
}

BoundResult tightness_bound_euclidean(double lambda, double rho) {
  if (!(rho > 0)) domain("rho must be positive");
  if (!(lambda <= rho)) domain("lambda <= rho violated");
  BoundResult r = tightness_bound_euclidean(lambda / rho);
  r.value *= rho;
  if (r.extremal_triangle) r.extremal_triangle = scaled(*r.extremal_triangle, rho);
  return r;
}

namespace {

// Region selection shared by the two spherical bounds.
enum class SphCase { T1, Regular, T2 };

SphCase spherical_case(double lambda, double rho) {
  const double quarter = kPi / 4;
  if (lambda <= std::asin(0.6)) {
    double ys = y_s(Geometry::Spherical, lambda);
    double yb = y_b(lambda);
    if (rho <= std::min(ys, quarter)) return SphCase::T1;
    if (ys < rho && rho <= yb) return SphCase::Regular;
    return SphCase::T2;
  }
  // y_s, y_b undefined: the regular triangle is never admissible
  return rho <= quarter ? SphCase::T1 : SphCase::T2;
}

IsoTriangle spherical_t2(double lambda, double rho) {
  double y = std::max(rho, y_lower(Geometry::Spherical, lambda));
  return family_triangle(Geometry::Spherical, 2, y, lambda);
}

}  // namespace

BoundResult density_bound_spherical(double lambda, double rho) {
  SeparabilityParams{Geometry::Spherical, lambda, rho}.validate();
  const Geometry g = Geometry::Spherical;
  switch (spherical_case(lambda, rho)) {
    case SphCase::T1: {
      double y = x_inverse(g, 1, Branch::S1, rho, lambda);
      IsoTriangle t = family_triangle(g, 1, y, lambda);
      return {density_of(t, rho), Regime::Family, t, false};
    }
    case SphCase::Regular: {
      IsoTriangle t = regular_triangle(g, rho);
      return {density_of(t, rho), Regime::Regular, t, false};
    }
    case SphCase::T2: {
      IsoTriangle t = spherical_t2(lambda, rho);
      return {density_of(t, rho), Regime::Family2, t, false};
    }
  }
  return {};
}

BoundResult tightness_bound_spherical(double lambda, double rho) {
  SeparabilityParams{Geometry::Spherical, lambda, rho}.validate();
  const Geometry g = Geometry::Spherical;
  switch (spherical_case(lambda, rho)) {
    case SphCase::T1: {
      double ym = y_min(g, lambda);
      if (rho <= x1_spherical(ym, lambda)) {
        IsoTriangle t = family_triangle(g, 1, ym, lambda);
        return {family_radius(g, 1, ym, lambda), Regime::FamilyMin, t, false};
      }
      double y = x_inverse(g, 1, Branch::S1, rho, lambda);
      return {family_radius(g, 1, y, lambda), Regime::Family, family_triangle(g, 1, y, lambda),
              false};
    }
    case SphCase::Regular:
      return {regular_circumradius(g, rho), Regime::Regular, regular_triangle(g, rho), false};
    case SphCase::T2: {
      IsoTriangle t = spherical_t2(lambda, rho);
      return {family_radius(g, 2, t.half_base, lambda), Regime::Family2, t, false};
    }
  }
  return {};
}

BoundResult density_bound_hyperbolic(double lambda, double rho) {
  SeparabilityParams{Geometry::Hyperbolic, lambda, rho}.validate();
  const Geometry g = Geometry::Hyperbolic;
  if (lambda > 0 && rho <= y_s(g, lambda)) {
    double y = x_inverse(g, 0, Branch::H1, rho, lambda);
    IsoTriangle t = family_triangle(g, 0, y, lambda);
    return {density_of(t, rho), Regime::Family, t, false};
  }
  IsoTriangle t = regular_triangle(g, rho);
  return {density_of(t, rho), Regime::Regular, t, false};
}

BoundResult tightness_bound_hyperbolic(double lambda, double rho) {
  SeparabilityParams{Geometry::Hyperbolic, lambda, rho}.validate();
  const Geometry g = Geometry::Hyperbolic;
  if (lambda > 0) {
    double ym = y_min(g, lambda);
    if (rho <= x_hyperbolic(ym, lambda))
      return {family_radius(g, 0, ym, lambda), Regime::FamilyMin, family_triangle(g, 0, ym, lambda),
              false};
    if (rho <= y_s(g, lambda)) {
      double y = x_inverse(g, 0, Branch::H1, rho, lambda);
      return {family_radius(g, 0, y, lambda), Regime::Family, family_triangle(g, 0, y, lambda),
              false};
    }
  }
  return {regular_circumradius(g, rho), Regime::Regular, regular_triangle(g, rho), false};
}

BoundResult density_bound(Geometry g, double lambda, double rho) {
  switch (g) {
    case Geometry::Euclidean: return density_bound_euclidean(lambda, rho);
    case Geometry::Spherical: return density_bound_spherical(lambda, rho);
    case Geometry::Hyperbolic: return density_bound_hyperbolic(lambda, rho);
  }
  return {};
}

BoundResult tightness_bound(Geometry g, double lambda, double rho) {
  switch (g) {
    case Geometry::Euclidean: return tightness_bound_euclidean(lambda, rho);
    case Geometry::Spherical: return tightness_bound_spherical(lambda, rho);
    case Geometry::Hyperbolic: return tightness_bound_hyperbolic(lambda, rho);
  }
  return {};
}

long hexagonal_contact_number(long n) { return 3 * n - ceil_sqrt(12 * n - 3); }

long square_contact_number(long n) { return 2 * n - ceil_sqrt(4 * n); }

ContactBounds contact_bounds(long n, double lambda) {
  if (n < 2) domain("contact bounds need n >= 2");
  check_unit_lambda(lambda);
  ContactBounds b;
  if (lambda <= kSqrt3Half) {
    b.lower = hexagonal_contact_number(n);
    b.upper = static_cast<double>(b.lower);
    b.exact = true;
    return b;
  }
  b.lower = square_contact_number(n);
  b.upper = 2.0 * n - std::sqrt(kPi * lambda) * std::sqrt(static_cast<double>(n));
  b.upper_has_unresolved_constant = true;
  return b;
}

}  // namespace lsep
