#include "lsep/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace lsep {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// plane coordinates and visibility
struct Projected {
  double x = 0, y = 0;
  bool visible = true;
};

Projected project(const Point& p) {
  const Vec3& c = p.coords;
  switch (p.geometry) {
    case Geometry::Euclidean: return {c.x, c.y, true};
    case Geometry::Spherical: return {c.x, c.y, c.z >= -1e-12};
    case Geometry::Hyperbolic: {
      auto d = p.to_poincare();
      return {d[0], d[1], true};
    }
  }
  return {};
}

// sampled geodesic segment so arcs render curved in S and H
std::vector<Projected> segment(const Point& a, const Point& b) {
  const int steps = a.geometry == Geometry::Euclidean ? 1 : 16;
  std::vector<Projected> out;
  for (int k = 0; k <= steps; ++k) out.push_back(project(interpolate(a, b, double(k) / steps)));
  return out;
}

// point at distance r from p in direction t of a tangent frame at p
Point circle_point(const Point& p, double r, double t) {
  const Vec3 c = p.coords;
  switch (p.geometry) {
    case Geometry::Euclidean: return Point::euclidean(c.x + r * std::cos(t), c.y + r * std::sin(t));
    case Geometry::Spherical: {
      Vec3 w = std::abs(c.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      Vec3 e1 = w - dot(w, c) * c;
      e1 = e1 / norm(e1);
      Vec3 e2 = cross(c, e1);
      return Point::renormalized(p.geometry, std::cos(r) * c + std::sin(r) * (std::cos(t) * e1 + std::sin(t) * e2));
    }
    case Geometry::Hyperbolic: {
      Vec3 w{1, 0, 0};
      Vec3 e1 = w + lorentz(c, w) * c;
      e1 = e1 / std::sqrt(lorentz(e1, e1));
      Vec3 e2 = lorentz_flip(cross(c, e1));
      e2 = e2 / std::sqrt(lorentz(e2, e2));
      return Point::renormalized(p.geometry,
                                 std::cosh(r) * c + std::sinh(r) * (std::cos(t) * e1 + std::sin(t) * e2));
    }
  }
  return p;
}

struct Frame {
  double minx, miny, scale;
  std::string X(double x) const { return num(20 + (x - minx) * scale); }
  std::string Y(double y) const { return num(20 + (maxy - y) * scale); }
  double maxy;
};

}  // namespace

std::string svg_decomposition(const Decomposition& dec, double rho) {
  const Geometry g = dec.geometry();
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const Point& p : dec.delaunay.points) {
    Projected q = project(p);
    minx = std::min(minx, q.x), maxx = std::max(maxx, q.x);
    miny = std::min(miny, q.y), maxy = std::max(maxy, q.y);
  }
  if (g != Geometry::Euclidean) minx = miny = -1, maxx = maxy = 1;
  double pad = 0.05 * std::max(maxx - minx, maxy - miny) + 1e-9;
  minx -= pad, maxx += pad, miny -= pad, maxy += pad;
  const double size = 600;
  Frame f{minx, miny, size / std::max(maxx - minx, maxy - miny), maxy};

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size + 40) << "\" height=\""
    << num(size + 40) << "\">\n";
  if (g != Geometry::Euclidean)
    s << "<circle cx=\"" << f.X(0) << "\" cy=\"" << f.Y(0) << "\" r=\"" << num(f.scale)
      << "\" fill=\"none\" stroke=\"#999\"/>\n";

  auto polyline = [&](const std::vector<Projected>& pts, const char* style) {
    std::string d;
    bool pen = false;
    for (const Projected& q : pts) {
      if (!q.visible) {
        pen = false;
        continue;
      }
      d += (pen ? " L" : " M") + f.X(q.x) + " " + f.Y(q.y);
      pen = true;
    }
    if (!d.empty()) s << "<path d=\"" << d.substr(1) << "\" " << style << "/>\n";
  };

  if (rho > 0) {
    for (const Point& p : dec.delaunay.points) {
      // disk outline as a polygon of boundary points
      std::vector<Projected> ring;
      for (int k = 0; k <= 48; ++k) {
        ring.push_back(project(circle_point(p, rho, 2 * kPi * k / 48)));
      }
      polyline(ring, "fill=\"none\" stroke=\"#4a7\" stroke-width=\"0.8\"");
    }
  }

  std::set<std::pair<int, int>> separating;
  for (const Bridge& b : dec.bridges) separating.insert({std::min(b.from, b.to), std::max(b.from, b.to)});
  std::set<std::pair<int, int>> drawn;
  for (const MolnarCell& c : dec.cells) {
    const auto& v = c.boundary;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int a = v[i], b = v[(i + 1) % v.size()];
      if (!drawn.insert({std::min(a, b), std::max(a, b)}).second) continue;
      polyline(segment(dec.vertices[a], dec.vertices[b]), "fill=\"none\" stroke=\"black\" stroke-width=\"1\"");
    }
  }
  for (auto [a, b] : separating)
    polyline(segment(dec.vertices[a], dec.vertices[b]),
             "fill=\"none\" stroke=\"#c33\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  for (const Point& p : dec.delaunay.points) {
    Projected q = project(p);
    if (q.visible) s << "<circle cx=\"" << f.X(q.x) << "\" cy=\"" << f.Y(q.y) << "\" r=\"2\" fill=\"black\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_curves(const std::vector<Curve>& curves, const std::string& xlabel, const std::string& ylabel) {
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const Curve& c : curves)
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (!std::isfinite(c.y[i])) continue;
      minx = std::min(minx, c.x[i]), maxx = std::max(maxx, c.x[i]);
      miny = std::min(miny, c.y[i]), maxy = std::max(maxy, c.y[i]);
    }
  if (!(maxx > minx)) maxx = minx + 1;
  if (!(maxy > miny)) maxy = miny + 1;
  const double W = 640, H = 480, L = 60, B = 50;
  auto X = [&](double x) { return num(L + (x - minx) / (maxx - minx) * (W - L - 20)); };
  auto Y = [&](double y) { return num(H - B - (y - miny) / (maxy - miny) * (H - B - 20)); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W) << "\" height=\"" << num(H)
    << "\">\n";
  s << "<rect x=\"" << num(L) << "\" y=\"20\" width=\"" << num(W - L - 20) << "\" height=\"" << num(H - B - 20)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << num(W / 2) << "\" y=\"" << num(H - 12) << "\" text-anchor=\"middle\">" << xlabel
    << "</text>\n";
  s << "<text x=\"16\" y=\"" << num(H / 2) << "\" transform=\"rotate(-90 16 " << num(H / 2)
    << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
  for (double t : {0.0, 0.5, 1.0}) {
    double xv = minx + t * (maxx - minx), yv = miny + t * (maxy - miny);
    s << "<text x=\"" << X(xv) << "\" y=\"" << num(H - B + 16) << "\" text-anchor=\"middle\" font-size=\"11\">"
      << num(xv) << "</text>\n";
    s << "<text x=\"" << num(L - 4) << "\" y=\"" << Y(yv) << "\" text-anchor=\"end\" font-size=\"11\">" << num(yv)
      << "</text>\n";
  }
  int row = 0;
  for (const Curve& c : curves) {
    std::string d;
    bool pen = false;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (!std::isfinite(c.y[i])) {
        pen = false;
        continue;
      }
      d += (pen ? " L" : " M") + X(c.x[i]) + " " + Y(c.y[i]);
      pen = true;
    }
    if (!d.empty())
      s << "<path d=\"" << d.substr(1) << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\"/>\n";
    s << "<text x=\"" << num(L + 10) << "\" y=\"" << num(36 + 14 * row++) << "\" fill=\"" << c.color
      << "\" font-size=\"12\">" << c.name << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace lsep
