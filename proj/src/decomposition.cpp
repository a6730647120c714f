#include "lsep/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "lsep/formulas.hpp"

namespace lsep {

namespace {

using Edge = std::pair<int, int>;

std::set<Edge> hull_set(const Delaunay& d) {
  std::set<Edge> s;
  for (auto [u, v] : d.hull_edges) s.insert({u, v});
  return s;
}

// directed side (u, v) of a cell -> circumcenter id bridging it away / into it
struct BridgeIndex {
  std::map<Edge, int> own;    // (u, v) is the cell's own bridged side
  std::map<Edge, int> notch;  // (u, v) is bridged by the neighbor across it
};

BridgeIndex index_bridges(const std::vector<Bridge>& bridges) {
  BridgeIndex ix;
  for (const Bridge& b : bridges) {
    ix.own[{b.from, b.to}] = b.apex;
    ix.notch[{b.to, b.from}] = b.apex;
  }
  return ix;
}

std::vector<Edge> sides(const DelaunayCell& c) {
  std::vector<Edge> out;
  const auto& vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) out.push_back({vs[i], vs[(i + 1) % vs.size()]});
  return out;
}

// Molnar boundary: own bridged side -> u, o_F; notched side -> u, o_G
std::vector<int> molnar_boundary(const DelaunayCell& c, const BridgeIndex& ix) {
  std::vector<int> out;
  for (Edge e : sides(c)) {
    out.push_back(e.first);
    if (auto it = ix.own.find(e); it != ix.own.end())
      out.push_back(it->second);
    else if (auto jt = ix.notch.find(e); jt != ix.notch.end())
      out.push_back(jt->second);
  }
  return out;
}

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace

const char* to_string(CellKind k) {
  switch (k) {
    case CellKind::MCell: return "molnar";
    case CellKind::Type1: return "type1";
    case CellKind::Type2: return "type2";
    case CellKind::Boundary: return "boundary";
  }
  return "?";
}

std::optional<std::array<int, 2>> separating_side(const Delaunay& d, int cell, double tol) {
  const DelaunayCell& c = d.cells.at(cell);
  if (!c.circumcenter) return std::nullopt;
  std::optional<std::array<int, 2>> best;
  double worst = -tol;
  for (auto [u, v] : sides(c)) {
    double off = signed_offset(Geodesic::through(d.points[u], d.points[v]), *c.circumcenter);
    if (off < worst) {
      worst = off;
      best = std::array<int, 2>{u, v};
    }
  }
  return best;
}

Decomposition molnar(const Delaunay& d) {
  Decomposition dec;
  dec.delaunay = d;
  const int n = dec.point_count();
  dec.vertices = d.points;
  for (const DelaunayCell& c : d.cells) dec.vertices.push_back(c.circumcenter.value_or(origin(d.geometry)));

  const std::set<Edge> hull = hull_set(d);
  for (int f = 0; f < static_cast<int>(d.cells.size()); ++f) {
    auto s = separating_side(d, f);
    if (!s) continue;
    if (hull.count({(*s)[0], (*s)[1]}))
      dec.unbridged_hull_cells.push_back(f);
    else
      dec.bridges.push_back({f, (*s)[0], (*s)[1], n + f});
  }
  const BridgeIndex ix = index_bridges(dec.bridges);
  for (int f = 0; f < static_cast<int>(d.cells.size()); ++f) {
    MolnarCell m;
    m.kind = CellKind::MCell;
    m.boundary = molnar_boundary(d.cells[f], ix);
    m.source_cell = f;
    m.on_hull = d.cells[f].on_hull;
    dec.cells.push_back(std::move(m));
  }
  return dec;
}

Decomposition molnar(std::span<const Point> points) { return molnar(delaunay(points)); }

bool saturation_check(const Delaunay& d, double rho) {
  if (d.geometry == Geometry::Spherical && rho > kPi / 4) return true;
  const double limit = 2 * saturation_radius(d.geometry, rho) + 1e-10;
  bool interior = false;
  for (const DelaunayCell& c : d.cells) {
    if (c.on_hull) continue;
    if (!c.circumcenter || c.circumradius > limit) return false;
    interior = true;
  }
  // a set without interior cells saturates nothing
  return interior;
}

Decomposition refine(const Decomposition& m, double rho) {
  const Delaunay& d = m.delaunay;
  const double R_rho = saturation_radius(d.geometry, rho);
  if (!saturation_check(d, rho))
    throw Error(ErrorCode::NotSaturated, "point set is not 2R_rho-saturated");

  Decomposition out;
  out.delaunay = m.delaunay;
  out.vertices = m.vertices;
  out.bridges = m.bridges;
  out.unbridged_hull_cells = m.unbridged_hull_cells;
  out.rho = rho;
  out.saturation_radius = R_rho;
  const int n = m.point_count();

  const BridgeIndex ix = index_bridges(m.bridges);
  const std::set<int> stuck(m.unbridged_hull_cells.begin(), m.unbridged_hull_cells.end());

  for (int f = 0; f < static_cast<int>(d.cells.size()); ++f) {
    const DelaunayCell& c = d.cells[f];
    const std::vector<Edge> ss = sides(c);
    bool own = false, notched = false;
    for (Edge e : ss) {
      own = own || ix.own.count(e);
      notched = notched || ix.notch.count(e);
    }

    if (!c.circumcenter || stuck.count(f)) {
      MolnarCell b;
      b.kind = CellKind::Boundary;
      b.boundary = molnar_boundary(c, ix);
      b.source_cell = f;
      b.on_hull = c.on_hull;
      out.cells.push_back(std::move(b));
      continue;
    }

    if (c.circumradius <= R_rho + 1e-10 && !own && !notched) {
      // cocircular polygons fan out from the lexicographically smallest vertex
      const auto& vs = c.vertices;
      const std::size_t k = vs.size();
      std::size_t p = 0;
      for (std::size_t i = 1; i < k; ++i)
        if (lex_less(d.points[vs[i]].coords, d.points[vs[p]].coords)) p = i;
      for (std::size_t i = 1; i + 1 < k; ++i) {
        MolnarCell t;
        t.kind = CellKind::Type1;
        t.boundary = {vs[p], vs[(p + i) % k], vs[(p + i + 1) % k]};
        t.source_cell = f;
        t.on_hull = c.on_hull;
        out.cells.push_back(std::move(t));
      }
      continue;
    }

    const int apex = n + f;
    for (Edge e : ss) {
      if (ix.own.count(e)) continue;
      // apex on the side itself: nothing to fan over
      double off = signed_offset(Geodesic::through(d.points[e.first], d.points[e.second]), *c.circumcenter);
      if (std::abs(off) <= 1e-12) continue;
      MolnarCell t;
      t.kind = CellKind::Type2;
      t.source_cell = f;
      t.apex = apex;
      t.base = {e.first, e.second};
      t.on_hull = c.on_hull;
      if (auto it = ix.notch.find(e); it != ix.notch.end()) {
        t.notch = it->second;
        t.boundary = {apex, e.first, it->second, e.second};
      } else {
        t.boundary = {apex, e.first, e.second};
      }
      out.cells.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Point> cell_polygon(const Decomposition& dec, const MolnarCell& c) {
  std::vector<Point> out;
  out.reserve(c.boundary.size());
  for (int id : c.boundary) out.push_back(dec.vertices.at(id));
  return out;
}

double cell_area(const Decomposition& dec, const MolnarCell& c) { return polygon_area(cell_polygon(dec, c)); }

double cell_center_angle_sum(const Decomposition& dec, const MolnarCell& c) {
  const int n = dec.point_count();
  const auto& b = c.boundary;
  const std::size_t k = b.size();
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i] >= n) continue;
    sum += vertex_angle(dec.vertices[b[(i + k - 1) % k]], dec.vertices[b[i]], dec.vertices[b[(i + 1) % k]]);
  }
  return sum;
}

double cell_density(const Decomposition& dec, const MolnarCell& c, double rho) {
  double area = cell_area(dec, c);
  if (!(area > kDegenerateArea)) throw Error(ErrorCode::Degenerate, "cell of zero area");
  return sector_area_per_radian(dec.geometry(), rho) * cell_center_angle_sum(dec, c) / area;
}

double cell_circumradius(const Decomposition& dec, const MolnarCell& c) {
  return dec.delaunay.cells.at(c.source_cell).circumradius;
}

double total_area(const Decomposition& dec) {
  double s = 0;
  for (const MolnarCell& c : dec.cells) s += cell_area(dec, c);
  return s;
}

bool edge_to_edge(const Decomposition& dec) {
  std::map<Edge, int> count;
  for (const MolnarCell& c : dec.cells) {
    const auto& b = c.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) ++count[{b[i], b[(i + 1) % b.size()]}];
  }
  const std::set<Edge> hull = hull_set(dec.delaunay);
  for (auto [e, k] : count) {
    if (k != 1) return false;
    bool twin = count.count({e.second, e.first}) > 0;
    if (hull.count(e) ? twin : !twin) return false;
  }
  return true;
}

namespace {

std::vector<std::array<int, 2>> bridge_segments(const Bridge& b) { return {{b.from, b.apex}, {b.apex, b.to}}; }

}  // namespace

bool bridges_disjoint(const Decomposition& dec) {
  const auto& V = dec.vertices;
  for (std::size_t i = 0; i < dec.bridges.size(); ++i)
    for (std::size_t j = i + 1; j < dec.bridges.size(); ++j)
      for (auto s : bridge_segments(dec.bridges[i]))
        for (auto t : bridge_segments(dec.bridges[j]))
          if (segments_meet(V[s[0]], V[s[1]], V[t[0]], V[t[1]])) return false;
  return true;
}

bool bridges_avoid_sides(const Decomposition& dec) {
  const auto& V = dec.vertices;
  std::set<Edge> bridged;
  for (const Bridge& b : dec.bridges) bridged.insert({std::min(b.from, b.to), std::max(b.from, b.to)});
  std::set<Edge> all;
  for (const DelaunayCell& c : dec.delaunay.cells)
    for (auto [u, v] : sides(c)) all.insert({std::min(u, v), std::max(u, v)});
  for (const Bridge& b : dec.bridges)
    for (auto s : bridge_segments(b))
      for (Edge e : all) {
        if (bridged.count(e)) continue;
        if (segments_meet(V[s[0]], V[s[1]], V[e.first], V[e.second])) return false;
      }
  return true;
}

}  // namespace lsep
