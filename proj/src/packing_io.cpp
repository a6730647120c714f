#include "lsep/packing_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace lsep {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string coords_of(const Point& p) {
  const Vec3& c = p.coords;
  if (p.geometry == Geometry::Euclidean) return format_number(c.x) + " " + format_number(c.y);
  return format_number(c.x) + " " + format_number(c.y) + " " + format_number(c.z);
}

[[noreturn]] void parse_error(long record, const std::string& what) {
  throw Error(ErrorCode::Parse, "record " + std::to_string(record) + ": " + what);
}

double to_number(const std::string& tok, long record) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) parse_error(record, "bad number '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_error(record, "bad number '" + tok + "'");
  }
}

}  // namespace

void write_packing(std::ostream& out, const Packing& p) {
  out << "geometry " << to_string(p.geometry) << "\n";
  out << "rho " << format_number(p.rho) << "\n";
  out << "lambda " << format_number(p.lambda) << "\n";
  out << "count " << p.centers.size() << "\n";
  for (const Point& c : p.centers) out << coords_of(c) << "\n";
}

Packing read_packing(std::istream& in, bool require_packing) {
  Packing p;
  bool have_g = false, have_rho = false, have_lambda = false;
  long count = -1;
  long record = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    ++record;
    if (count < 0) {
      if (tok.size() != 2) parse_error(record, "expected '<key> <value>' header");
      if (tok[0] == "geometry") {
        try {
          p.geometry = parse_geometry(tok[1]);
        } catch (const Error& e) {
          parse_error(record, e.what());
        }
        have_g = true;
      } else if (tok[0] == "rho") {
        p.rho = to_number(tok[1], record), have_rho = true;
      } else if (tok[0] == "lambda") {
        p.lambda = to_number(tok[1], record), have_lambda = true;
      } else if (tok[0] == "count") {
        double c = to_number(tok[1], record);
        if (!(c >= 0) || c != std::floor(c)) parse_error(record, "count must be a nonnegative integer");
        if (!(have_g && have_rho && have_lambda)) parse_error(record, "count before geometry, rho and lambda");
        count = static_cast<long>(c);
      } else {
        parse_error(record, "unknown header key '" + tok[0] + "'");
      }
      continue;
    }
    const std::size_t want = p.geometry == Geometry::Euclidean ? 2 : 3;
    if (tok.size() != want) parse_error(record, "expected " + std::to_string(want) + " coordinates");
    if (static_cast<long>(p.centers.size()) >= count) parse_error(record, "more centers than count");
    Point c;
    c.geometry = p.geometry;
    c.coords = {to_number(tok[0], record), to_number(tok[1], record), want == 3 ? to_number(tok[2], record) : 1.0};
    if (!c.valid()) parse_error(record, "center off the model surface");
    p.centers.push_back(c);
  }
  if (count < 0) parse_error(record + 1, "missing header");
  if (static_cast<long>(p.centers.size()) != count)
    parse_error(record + 1, "expected " + std::to_string(count) + " centers, got " + std::to_string(p.centers.size()));
  try {
    p.validate();
  } catch (const Error& e) {
    parse_error(4, e.what());
  }
  if (require_packing) {
    const long header = 4;
    for (std::size_t j = 1; j < p.centers.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (distance(p.centers[i], p.centers[j]) < 2 * p.rho - 1e-10)
          parse_error(header + long(j) + 1, "overlaps center " + std::to_string(i));
  }
  return p;
}

Packing load_packing(const std::string& path, bool require_packing) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_packing(in, require_packing);
}

void save_packing(const std::string& path, const Packing& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  write_packing(out, p);
}

void write_decomposition(std::ostream& out, const Decomposition& dec) {
  out << "geometry " << to_string(dec.geometry()) << "\n";
  out << "rho " << format_number(dec.rho) << "\n";
  out << "cells " << dec.cells.size() << "\n";
  for (std::size_t i = 0; i < dec.cells.size(); ++i) {
    const MolnarCell& c = dec.cells[i];
    out << "cell " << i << " " << to_string(c.kind) << " " << c.boundary.size();
    for (int id : c.boundary) out << " " << coords_of(dec.vertices[id]);
    const DelaunayCell& src = dec.delaunay.cells[c.source_cell];
    out << " center ";
    if (src.circumcenter)
      out << coords_of(*src.circumcenter);
    else
      out << "none";
    out << " radius " << format_number(src.circumradius) << "\n";
  }
}

}  // namespace lsep
