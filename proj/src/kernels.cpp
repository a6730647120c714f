#include "lsep/kernels.hpp"

#include <algorithm>
#include <limits>

namespace lsep {

namespace {

SweepRow evaluate(Geometry g, Quantity q, double lambda, double rho) {
  SweepRow r{lambda, rho, 0, Regime::Regular, true};
  try {
    BoundResult b = q == Quantity::Density ? density_bound(g, lambda, rho) : tightness_bound(g, lambda, rho);
    r.value = b.value;
    r.regime = b.regime;
  } catch (const Error&) {
    r.ok = false;
    r.value = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace

std::vector<SweepRow> bound_sweep(Geometry g, Quantity q, const std::vector<double>& lambdas,
                                  const std::vector<double>& rhos, Exec exec) {
  const long nl = static_cast<long>(lambdas.size()), nr = static_cast<long>(rhos.size());
  std::vector<SweepRow> rows(nl * nr);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 8) if (par)
  for (long k = 0; k < nl * nr; ++k) rows[k] = evaluate(g, q, lambdas[k / nr], rhos[k % nr]);
  return rows;
}

std::vector<double> cell_densities(const Decomposition& dec, double rho, Exec exec) {
  const long m = static_cast<long>(dec.cells.size());
  std::vector<double> out(m, std::numeric_limits<double>::quiet_NaN());
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (long k = 0; k < m; ++k) {
    double a = cell_area(dec, dec.cells[k]);
    if (a > kDegenerateArea)
      out[k] = sector_area_per_radian(dec.geometry(), rho) * cell_center_angle_sum(dec, dec.cells[k]) / a;
  }
  return out;
}

double min_pairwise_distance(std::span<const Point> pts, Exec exec) {
  const long n = static_cast<long>(pts.size());
  double best = std::numeric_limits<double>::infinity();
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best) if (par)
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

long count_nonempty_circumdisks(const Delaunay& d, double tol, Exec exec) {
  const long m = static_cast<long>(d.cells.size());
  long bad = 0;
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad) if (par)
  for (long k = 0; k < m; ++k)
    if (d.cells[k].circumcenter && !empty_circumdisk(d, d.cells[k], tol)) ++bad;
  return bad;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  if (n == 1) return {a};
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
  return out;
}

}  // namespace lsep
