#include "lsep/packing.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <limits>
#include <map>
#include <string>

#include "lsep/formulas.hpp"

namespace lsep {

void Packing::validate() const {
  if (!(rho > 0)) throw Error(ErrorCode::Domain, "rho must be positive");
  if (geometry == Geometry::Spherical && !(rho < kPi / 2))
    throw Error(ErrorCode::Domain, "spherical rho must be below pi/2");
  if (!(lambda >= 0)) throw Error(ErrorCode::Domain, "lambda must be nonnegative");
  if (!(lambda <= rho)) throw Error(ErrorCode::Domain, "lambda <= rho violated");
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (centers[i].geometry != geometry)
      throw Error(ErrorCode::GeometryMismatch, "center " + std::to_string(i) + " has the wrong geometry");
    if (!centers[i].valid())
      throw Error(ErrorCode::Domain, "center " + std::to_string(i) + " is off the model surface");
  }
}

std::vector<Disk> Packing::disks(double radius) const {
  std::vector<Disk> out;
  out.reserve(centers.size());
  for (const Point& c : centers) out.push_back({c, radius});
  return out;
}

PackingCheck verify_packing(const Packing& p) {
  PackingCheck r;
  const int n = static_cast<int>(p.centers.size());
  r.min_distance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = distance(p.centers[i], p.centers[j]);
      if (d < r.min_distance) {
        r.min_distance = d;
        r.pair = {i, j};
      }
    }
  r.ok = !(r.min_distance < 2 * p.rho - 1e-10);
  return r;
}

namespace {

bool refinable(const Packing& p) { return !(p.geometry == Geometry::Spherical && p.rho > kPi / 4); }

}  // namespace

DensityReport packing_density(const Packing& p) {
  p.validate();
  DensityReport r;
  Delaunay d = delaunay(p.centers);
  r.saturated = saturation_check(d, p.rho);
  const double w = sector_area_per_radian(p.geometry, p.rho);

  double weighted = 0, area = 0;
  auto account = [&](double angle, double a) {
    r.cell_densities.push_back(w * angle / a);
    r.cell_areas.push_back(a);
    weighted += w * angle;
    area += a;
  };
  if (r.saturated && refinable(p)) {
    Decomposition dec = refine(molnar(d), p.rho);
    for (const MolnarCell& c : dec.cells) {
      if (c.on_hull || c.kind == CellKind::Boundary) {
        ++r.boundary_cells;
        continue;
      }
      double a = cell_area(dec, c);
      if (a <= kDegenerateArea) continue;
      account(cell_center_angle_sum(dec, c), a);
    }
  } else {
    for (const DelaunayCell& c : d.cells) {
      if (c.on_hull) {
        ++r.boundary_cells;
        continue;
      }
      auto poly = cell_points(d, c);
      account(polygon_angle_sum(poly), polygon_area(poly));
    }
  }

  if (d.covers_sphere()) {
    r.whole_sphere = true;
    r.value = double(p.centers.size()) * disk_area(p.geometry, p.rho) / (4 * kPi);
  } else {
    if (!(area > 0)) throw Error(ErrorCode::Degenerate, "no interior cells to average over");
    r.value = weighted / area;
  }
  return r;
}

TightnessReport packing_tightness(const Packing& p) {
  p.validate();
  Delaunay d = delaunay(p.centers);
  if (!saturation_check(d, p.rho)) throw Error(ErrorCode::NotSaturated, "covering radius needs a saturated set");
  TightnessReport r;
  r.interior_only = !d.covers_sphere();
  r.value = -1;
  for (int i = 0; i < static_cast<int>(d.cells.size()); ++i) {
    const DelaunayCell& c = d.cells[i];
    if (r.interior_only && c.on_hull) continue;
    if (c.circumradius > r.value) {
      r.value = c.circumradius;
      r.cell = i;
    }
  }
  if (r.cell < 0) throw Error(ErrorCode::Degenerate, "no interior Delaunay cell");
  return r;
}

ContactGraph contact_graph(const Packing& p, double tol) {
  ContactGraph g;
  g.n = static_cast<int>(p.centers.size());
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (std::abs(distance(p.centers[i], p.centers[j]) - 2 * p.rho) <= tol) g.edges.push_back({i, j});
  return g;
}

long contact_number(const Packing& p) { return static_cast<long>(contact_graph(p).edges.size()); }

bool is_triangle_free(const ContactGraph& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = true;
  for (auto [i, j] : g.edges)
    for (int k = 0; k < g.n; ++k)
      if (adj[i][k] && adj[j][k]) return false;
  return true;
}

namespace {

// planar chart in which geodesics are straight: E as is, H Klein, S gnomonic
std::vector<std::array<double, 2>> straight_chart(const std::vector<Point>& pts) {
  std::vector<std::array<double, 2>> out;
  if (pts.empty()) return out;
  const Geometry g = pts[0].geometry;
  if (g == Geometry::Euclidean) {
    for (const Point& p : pts) out.push_back({p.coords.x, p.coords.y});
    return out;
  }
  if (g == Geometry::Hyperbolic) {
    for (const Point& p : pts) out.push_back(p.to_klein());
    return out;
  }
  Vec3 c{0, 0, 0};
  for (const Point& p : pts) c = c + p.coords;
  if (norm(c) < 1e-9) throw Error(ErrorCode::Domain, "spherical contact graph not in an open hemisphere");
  c = c / norm(c);
  Vec3 e1 = std::abs(c.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  e1 = e1 - dot(e1, c) * c;
  e1 = e1 / norm(e1);
  Vec3 e2 = cross(c, e1);
  for (const Point& p : pts) {
    double h = dot(p.coords, c);
    if (!(h > 1e-9)) throw Error(ErrorCode::Domain, "spherical contact graph not in an open hemisphere");
    out.push_back({dot(p.coords, e1) / h, dot(p.coords, e2) / h});
  }
  return out;
}

}  // namespace

long outer_face_incidences(const ContactGraph& g, const std::vector<Point>& centers) {
  if (static_cast<int>(centers.size()) != g.n) throw Error(ErrorCode::Domain, "center count does not match graph");
  const auto xy = straight_chart(centers);
  auto angle = [&](int from, int to) {
    return std::atan2(xy[to][1] - xy[from][1], xy[to][0] - xy[from][0]);
  };
  // neighbours sorted counterclockwise
  std::vector<std::vector<int>> nb(g.n);
  for (auto [i, j] : g.edges) {
    nb[i].push_back(j);
    nb[j].push_back(i);
  }
  for (int v = 0; v < g.n; ++v)
    std::sort(nb[v].begin(), nb[v].end(), [&](int a, int b) { return angle(v, a) < angle(v, b); });

  std::vector<int> comp(g.n, -1);
  long total = 0;
  for (int s0 = 0; s0 < g.n; ++s0) {
    if (comp[s0] >= 0) continue;
    // collect the component, pick its lowest (then leftmost) vertex
    std::vector<int> stack{s0}, members;
    comp[s0] = s0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : nb[v])
        if (comp[w] < 0) comp[w] = s0, stack.push_back(w);
    }
    int s = *std::min_element(members.begin(), members.end(), [&](int a, int b) {
      return xy[a][1] != xy[b][1] ? xy[a][1] < xy[b][1] : xy[a][0] < xy[b][0];
    });
    if (nb[s].empty()) {
      total += 1;
      continue;
    }
    // steepest neighbour puts the outer face on the left of s -> t
    int t = nb[s].back();
    int u = s, v = t;
    long steps = 0;
    do {
      // clockwise successor of u around v: the sharpest left turn
      const auto& around = nb[v];
      auto it = std::find(around.begin(), around.end(), u);
      std::size_t k = static_cast<std::size_t>(it - around.begin());
      int w = around[(k + around.size() - 1) % around.size()];
      u = v;
      v = w;
      ++steps;
      if (steps > 4 * static_cast<long>(g.edges.size()) + 4)
        throw Error(ErrorCode::Degenerate, "outer face walk does not close");
    } while (!(u == s && v == t));
    total += steps;
  }
  return total;
}

long triangle_free_edge_bound(long n, long k) {
  long num = 4 * n - k - 4;  // floor(num / 2) for either sign
  return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

}  // namespace lsep
