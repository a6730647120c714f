#include "lsep/separability.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace lsep {

namespace {

constexpr int kLocalActive = 9;
constexpr int kExhaustiveBelow = 16;  // small sets: every center may be active

double signed_distance(const Geodesic& L, const Point& p) {
  double s = signed_offset(L, p);
  switch (L.geometry) {
    case Geometry::Euclidean: return s;
    case Geometry::Spherical: return std::asin(std::clamp(s, -1.0, 1.0));
    case Geometry::Hyperbolic: return std::asinh(s);
  }
  return s;
}

// Continuous max-min objective: positive iff the line puts i and j on
// opposite sides; then equal to the clearance.
double objective(const Geodesic& L, std::span<const Point> c, int i, int j) {
  double di = signed_distance(L, c[i]), dj = signed_distance(L, c[j]);
  double s = di >= dj ? 1.0 : -1.0;
  double v = std::min(s * di, -s * dj);
  for (std::size_t k = 0; k < c.size(); ++k) v = std::min(v, std::abs(signed_distance(L, c[k])));
  return v;
}

std::array<double, 2> params_of(const Geodesic& L) {
  const Vec3& n = L.normal;
  double angle = std::atan2(n.y, n.x);
  switch (L.geometry) {
    case Geometry::Euclidean: return {angle, -n.z};
    case Geometry::Spherical: return {angle, std::asin(std::clamp(n.z, -1.0, 1.0))};
    case Geometry::Hyperbolic: return {angle, std::asinh(n.z)};
  }
  return {angle, 0};
}

// 4-vector orthogonal to three rows (generalized cross product)
std::array<double, 4> null4(const std::array<std::array<double, 4>, 3>& r) {
  auto det3x3 = [&](int skip) {
    double m[3][3];
    for (int a = 0; a < 3; ++a) {
      int col = 0;
      for (int b = 0; b < 4; ++b)
        if (b != skip) m[a][col++] = r[a][b];
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  return {det3x3(0), -det3x3(1), det3x3(2), -det3x3(3)};
}

// Line at equal signed distance from three centers with prescribed sides.
std::optional<Geodesic> equidistant_line(std::array<const Point*, 3> p, std::array<double, 3> sign) {
  const Geometry g = p[0]->geometry;
  std::array<std::array<double, 4>, 3> rows;
  for (int k = 0; k < 3; ++k) {
    Vec3 c = p[k]->coords;
    double s = sign[k];
    if (g == Geometry::Euclidean)
      rows[k] = {s * c.x, s * c.y, -s, -1};
    else if (g == Geometry::Spherical)
      rows[k] = {s * c.x, s * c.y, s * c.z, -1};
    else
      rows[k] = {s * c.x, s * c.y, -s * c.z, -1};
  }
  auto v = null4(rows);
  Vec3 n{v[0], v[1], v[2]};
  double t = v[3];
  double scale;
  if (g == Geometry::Euclidean)
    scale = std::hypot(n.x, n.y);
  else if (g == Geometry::Spherical)
    scale = norm(n);
  else {
    double q = lorentz(n, n);
    if (!(q > 0)) return std::nullopt;
    scale = std::sqrt(q);
  }
  if (!(scale > 1e-300) || !std::isfinite(scale)) return std::nullopt;
  if (t < 0) scale = -scale;
  n = n / scale;
  if (g == Geometry::Euclidean) n.z = -n.z;  // stored as (a, b, -c)
  Geodesic L{g, n};
  return L;
}

struct Simplex2 {
  std::array<std::array<double, 2>, 3> x;
  std::array<double, 3> f;
};

// Nelder-Mead maximization in the (angle, offset) parameters.
template <class F>
std::array<double, 2> nelder_mead(F&& f, std::array<double, 2> x0, std::array<double, 2> step, int iters,
                                  double& best) {
  Simplex2 s;
  s.x = {x0, std::array<double, 2>{x0[0] + step[0], x0[1]}, std::array<double, 2>{x0[0], x0[1] + step[1]}};
  for (int k = 0; k < 3; ++k) s.f[k] = f(s.x[k]);
  for (int it = 0; it < iters; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int a, int b) { return s.f[a] > s.f[b]; });
    auto& hi = s.x[o[0]];
    auto& lo = s.x[o[2]];
    std::array<double, 2> c{(hi[0] + s.x[o[1]][0]) / 2, (hi[1] + s.x[o[1]][1]) / 2};
    auto along = [&](double t) { return std::array<double, 2>{c[0] + t * (lo[0] - c[0]), c[1] + t * (lo[1] - c[1])}; };
    auto xr = along(-1);
    double fr = f(xr);
    if (fr > s.f[o[0]]) {
      auto xe = along(-2);
      double fe = f(xe);
      if (fe > fr) lo = xe, s.f[o[2]] = fe;
      else lo = xr, s.f[o[2]] = fr;
    } else if (fr > s.f[o[1]]) {
      lo = xr, s.f[o[2]] = fr;
    } else {
      auto xc = along(0.5);
      double fc = f(xc);
      if (fc > s.f[o[2]]) {
        lo = xc, s.f[o[2]] = fc;
      } else {
        for (int k : {o[1], o[2]}) {
          s.x[k] = {(s.x[k][0] + hi[0]) / 2, (s.x[k][1] + hi[1]) / 2};
          s.f[k] = f(s.x[k]);
        }
      }
    }
    double span = std::max(std::abs(s.x[0][0] - s.x[1][0]) + std::abs(s.x[0][0] - s.x[2][0]),
                           std::abs(s.x[0][1] - s.x[1][1]) + std::abs(s.x[0][1] - s.x[2][1]));
    if (span < 1e-13) break;
  }
  int b = static_cast<int>(std::max_element(s.f.begin(), s.f.end()) - s.f.begin());
  best = s.f[b];
  return s.x[b];
}

}  // namespace

double separation_clearance(const Geodesic& L, std::span<const Point> centers, int i, int j) {
  double si = signed_offset(L, centers[i]), sj = signed_offset(L, centers[j]);
  if (!((si > 0 && sj < 0) || (si < 0 && sj > 0))) return -1;
  double v = std::numeric_limits<double>::infinity();
  for (const Point& c : centers) v = std::min(v, point_line_distance(c, L));
  return v;
}

PairSeparation best_separating_line(std::span<const Point> centers, int i, int j,
                                    const std::vector<std::vector<int>>& neighbours, double target) {
  const Geometry g = centers[i].geometry;
  const int n = static_cast<int>(centers.size());
  PairSeparation best;
  best.i = i;
  best.j = j;
  auto consider = [&](const Geodesic& L) {
    double c = separation_clearance(L, centers, i, j);
    if (c > best.clearance) {
      best.clearance = c;
      best.line = L;
    }
    return best.clearance >= target - 1e-12;
  };
  // sphere only: both centers at the same distance on one side, the normal
  // along their sum
  auto same_side = [&](const Point& a, const Point& b) {
    Vec3 s = a.coords + b.coords;
    double L = norm(s);
    return L > 1e-12 && consider(Geodesic{g, s / L});
  };
  auto try_line = [&](const Point& a, const Point& b) {
    if (same_point(a, b, 1e-12)) return false;
    if (g == Geometry::Spherical && dot(a.coords, b.coords) < -1 + 1e-12) return false;
    return consider(Geodesic::through(a, b));
  };

  // lines through the midpoints of two edges at one endpoint
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k;
  for (int end : {i, j}) {
    std::vector<int> nb = neighbours.empty() ? all : neighbours[end];
    int other = end == i ? j : i;
    if (std::find(nb.begin(), nb.end(), other) == nb.end()) nb.push_back(other);
    std::vector<Point> mids;
    for (int k : nb)
      // antipodal neighbours have no midpoint; the bisector covers them
      if (k != end && !(g == Geometry::Spherical && dot(centers[end].coords, centers[k].coords) < -1 + 1e-12))
        mids.push_back(midpoint(centers[end], centers[k]));
    for (std::size_t a = 0; a < mids.size(); ++a)
      for (std::size_t b = a + 1; b < mids.size(); ++b)
        if (try_line(mids[a], mids[b])) return best;
  }
  if (consider(Geodesic::bisector(centers[i], centers[j]))) return best;

  // active sets among the centers closest to i or j: bisectors of pairs on
  // opposite sides and lines equidistant from three centers
  {
    std::vector<std::pair<double, int>> near;
    for (int k = 0; k < n; ++k)
      near.push_back({std::min(distance(centers[k], centers[i]), distance(centers[k], centers[j])), k});
    const int m = n <= kExhaustiveBelow ? n : kLocalActive;
    std::partial_sort(near.begin(), near.begin() + m, near.end());
    for (int a = 0; a < m; ++a)
      if (g == Geometry::Spherical && consider(Geodesic{g, centers[near[a].second].coords})) return best;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const Point &pa = centers[near[a].second], &pb = centers[near[b].second];
        if (consider(Geodesic::bisector(pa, pb))) return best;
        if (g == Geometry::Spherical && same_side(pa, pb)) return best;
        for (int c = b + 1; c < m; ++c)
          for (std::array<double, 3> sg : {std::array<double, 3>{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}) {
            auto E = equidistant_line({&pa, &pb, &centers[near[c].second]}, sg);
            if (E && consider(*E)) return best;
          }
      }
  }

  // local search from the best candidate (or the bisector)
  Geodesic start = best.clearance > 0 ? best.line : Geodesic::bisector(centers[i], centers[j]);
  auto f = [&](std::array<double, 2> x) { return objective(Geodesic::from_params(g, x[0], x[1]), centers, i, j); };
  double scale = std::max(1e-3, distance(centers[i], centers[j]) / 4);
  if (g == Geometry::Spherical) scale = std::min(scale, 0.5);
  std::array<double, 2> x = params_of(start);
  double fx = f(x);
  for (int round = 0; round < 4; ++round) {
    double fb;
    auto y = nelder_mead(f, x, {scale, scale}, 400, fb);
    if (fb > fx) x = y, fx = fb;
    scale /= 8;

    // polish: equalize the distances of the nearest centers
    Geodesic L = Geodesic::from_params(g, x[0], x[1]);
    consider(L);
    std::vector<std::pair<double, int>> near;
    for (int k = 0; k < n; ++k) near.push_back({std::abs(signed_distance(L, centers[k])), k});
    std::sort(near.begin(), near.end());
    const int m = std::min<int>(5, n);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        int ka = near[a].second, kb = near[b].second;
        double sa = signed_offset(L, centers[ka]) >= 0 ? 1 : -1;
        double sb = signed_offset(L, centers[kb]) >= 0 ? 1 : -1;
        if (sa != sb) {
          Geodesic B = Geodesic::bisector(centers[ka], centers[kb]);
          if (consider(B)) return best;
        } else if (g == Geometry::Spherical && same_side(centers[ka], centers[kb])) {
          return best;
        }
        for (int c = b + 1; c < m; ++c) {
          int kc = near[c].second;
          double sc = signed_offset(L, centers[kc]) >= 0 ? 1 : -1;
          auto E = equidistant_line({&centers[ka], &centers[kb], &centers[kc]}, {sa, sb, sc});
          if (E && consider(*E)) return best;
        }
      }
    if (best.clearance > fx) {
      x = params_of(best.line);
      fx = best.clearance;
    }
    if (best.clearance >= target - 1e-12) break;
  }
  return best;
}

SeparabilityReport is_lambda_separable(const Packing& p, bool parallel) {
  p.validate();
  const int n = static_cast<int>(p.centers.size());
  std::vector<std::vector<int>> nb;
  if (n >= 3) {
    try {
      Delaunay d = delaunay(p.centers);
      nb.assign(n, {});
      for (const DelaunayCell& c : d.cells)
        for (std::size_t a = 0; a < c.vertices.size(); ++a) {
          int u = c.vertices[a], v = c.vertices[(a + 1) % c.vertices.size()];
          nb[u].push_back(v);
          nb[v].push_back(u);
        }
      for (auto& l : nb) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
      }
    } catch (const Error&) {
      nb.clear();  // collinear: use every center
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  SeparabilityReport r;
  r.witnesses.resize(pairs.size());
  const long m = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long k = 0; k < m; ++k)
    r.witnesses[k] = best_separating_line(p.centers, pairs[k].first, pairs[k].second, nb, p.lambda);

  for (const PairSeparation& w : r.witnesses)
    if (w.clearance < p.lambda - 1e-8) {
      r.separable = false;
      if (!r.failing || w.clearance < r.failing->clearance) r.failing = w;
    }
  return r;
}

}  // namespace lsep
