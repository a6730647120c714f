// lsep: bounds, sweeps, packing verification, decompositions, generators.
//
// Exit status: 0 pass, 1 property violated, 2 input error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsep/bounds.hpp"
#include "lsep/formulas.hpp"
#include "lsep/generators.hpp"
#include "lsep/kernels.hpp"
#include "lsep/packing_io.hpp"
#include "lsep/separability.hpp"
#include "lsep/svg.hpp"

using namespace lsep;

namespace {

constexpr int kPass = 0, kViolated = 1, kInputError = 2;

std::string N(double v) { return format_number(v); }

// relative output paths go below $LSEP_OUTPUT_DIR when it is set
std::string output_path(const std::string& p) {
  if (p.empty() || p == "-") return p;
  std::filesystem::path path(p);
  if (path.is_relative())
    if (const char* dir = std::getenv("LSEP_OUTPUT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = std::filesystem::path(dir) / path;
    }
  return path.string();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path(out));
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + out);
  f << text;
}

std::string triangle_text(const std::optional<IsoTriangle>& t) {
  if (!t) return "none";
  std::ostringstream s;
  s << (t->regular ? "regular" : "isosceles") << " y=" << N(t->half_base) << " x=" << N(t->half_leg);
  if (t->variant) s << " variant=" << t->variant;
  return s.str();
}

int run_bounds(const std::string& geometry, double lambda, double rho) {
  const Geometry g = parse_geometry(geometry);
  BoundResult d = density_bound(g, lambda, rho);
  BoundResult t = tightness_bound(g, lambda, rho);
  std::cout << "geometry " << to_string(g) << "\n";
  std::cout << "lambda " << N(lambda) << "\nrho " << N(rho) << "\n";
  std::cout << "density " << N(d.value) << " regime " << to_string(d.regime) << " sharp " << d.sharp
            << " triangle " << triangle_text(d.extremal_triangle) << "\n";
  std::cout << "tightness " << N(t.value) << " regime " << to_string(t.regime) << " sharp " << t.sharp
            << " triangle " << triangle_text(t.extremal_triangle) << "\n";
  return kPass;
}

struct SweepOptions {
  std::string geometry = "euclidean";
  std::string quantity = "density";
  double lambda_min = 0, lambda_max = 1;
  int lambda_steps = 101;
  double rho = 1;
  double rho_min = NAN, rho_max = NAN;
  int rho_steps = 1;
  std::string out;
  std::string format = "csv";
};

std::string regions_csv(Geometry g, const std::vector<double>& lambdas, std::vector<Curve>& curves) {
  std::ostringstream s;
  auto safe = [](auto f) {
    try {
      return f();
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (g == Geometry::Spherical) {
    curves = {{"y_s", "#c33", {}, {}}, {"y_b", "#c33", {}, {}}, {"pi/4", "#3a3", {}, {}},
              {"asin(sqrt2 sin lambda)", "#3a3", {}, {}}};
    s << "lambda,y_s,y_b,quarter_pi,asin_sqrt2_sin\n";
    for (double l : lambdas) {
      double a = safe([&] { return y_s(g, l); });
      double b = safe([&] { return y_b(l); });
      double c = kPi / 4;
      double d = safe([&] { return std::sqrt(2.0) * std::sin(l) <= 1 ? std::asin(std::sqrt(2.0) * std::sin(l)) : NAN; });
      s << N(l) << "," << N(a) << "," << N(b) << "," << N(c) << "," << N(d) << "\n";
      double v[4] = {a, b, c, d};
      for (int k = 0; k < 4; ++k) curves[k].x.push_back(l), curves[k].y.push_back(v[k]);
    }
  } else if (g == Geometry::Hyperbolic) {
    curves = {{"lambda", "#cc0", {}, {}}, {"x(y_min)", "#c33", {}, {}}, {"y_s", "#33c", {}, {}},
              {"y_min", "#3a3", {}, {}}, {"asinh(sqrt2 sinh lambda)", "black", {}, {}}};
    s << "lambda,lambda_curve,x_of_y_min,y_s,y_min,asinh_sqrt2_sinh\n";
    for (double l : lambdas) {
      double ym = safe([&] { return y_min(g, l); });
      double xm = safe([&] { return x_hyperbolic(ym, l); });
      double ys = safe([&] { return y_s(g, l); });
      double top = std::asinh(std::sqrt(2.0) * std::sinh(l));
      s << N(l) << "," << N(l) << "," << N(xm) << "," << N(ys) << "," << N(ym) << "," << N(top) << "\n";
      double v[5] = {l, xm, ys, ym, top};
      for (int k = 0; k < 5; ++k) curves[k].x.push_back(l), curves[k].y.push_back(v[k]);
    }
  } else {
    throw Error(ErrorCode::Domain, "regions sweep exists for sphere and hyperbolic geometry");
  }
  return s.str();
}

int run_sweep(const SweepOptions& o) {
  const Geometry g = parse_geometry(o.geometry);
  if (o.lambda_steps < 1 || o.rho_steps < 1) throw Error(ErrorCode::Domain, "steps must be >= 1");
  std::vector<double> lambdas = linspace(o.lambda_min, o.lambda_max, o.lambda_steps);
  if (o.quantity == "regions") {
    std::vector<Curve> curves;
    std::string csv = regions_csv(g, lambdas, curves);
    emit(o.format == "svg" ? svg_curves(curves, "lambda", "y") : csv, o.out);
    return kPass;
  }
  Quantity q;
  if (o.quantity == "density")
    q = Quantity::Density;
  else if (o.quantity == "tightness")
    q = Quantity::Tightness;
  else
    throw Error(ErrorCode::Domain, "quantity must be density, tightness or regions");
  std::vector<double> rhos = std::isnan(o.rho_min) ? std::vector<double>{o.rho}
                                                   : linspace(o.rho_min, std::isnan(o.rho_max) ? o.rho_min : o.rho_max,
                                                              o.rho_steps);
  std::vector<SweepRow> rows = bound_sweep(g, q, lambdas, rhos);
  if (o.format == "svg") {
    std::vector<Curve> curves;
    for (std::size_t r = 0; r < rhos.size(); ++r) {
      Curve c{"rho=" + N(rhos[r]), r % 2 ? "#33c" : "#c33", {}, {}};
      for (std::size_t l = 0; l < lambdas.size(); ++l) {
        const SweepRow& row = rows[l * rhos.size() + r];
        c.x.push_back(row.lambda);
        c.y.push_back(row.ok ? row.value : NAN);
      }
      curves.push_back(std::move(c));
    }
    emit(svg_curves(curves, "lambda", o.quantity), o.out);
    return kPass;
  }
  std::ostringstream s;
  s << "lambda,rho,value,regime\n";
  for (const SweepRow& r : rows)
    s << N(r.lambda) << "," << N(r.rho) << "," << (r.ok ? N(r.value) : std::string("nan")) << ","
      << (r.ok ? to_string(r.regime) : "domain") << "\n";
  emit(s.str(), o.out);
  return kPass;
}

int run_verify(const std::string& path, std::optional<double> lambda) {
  Packing p = load_packing(path);
  if (lambda) {
    p.lambda = *lambda;
    p.validate();
  }
  int status = kPass;
  PackingCheck pc = verify_packing(p);
  std::cout << "centers " << p.centers.size() << "\n";
  if (pc.pair)
    std::cout << "closest_pair " << pc.pair->first << " " << pc.pair->second << " distance " << N(pc.min_distance)
              << "\n";
  std::cout << "packing " << (pc.ok ? "ok" : "violated") << "\n";
  if (!pc.ok) status = kViolated;
  SeparabilityReport sr = is_lambda_separable(p);
  std::cout << "lambda " << N(p.lambda) << "\n";
  if (sr.separable) {
    std::cout << "separable yes\n";
  } else {
    std::cout << "separable no pair " << sr.failing->i << " " << sr.failing->j << " clearance "
              << N(sr.failing->clearance) << "\n";
    status = kViolated;
  }
  return status;
}

int run_decompose(const std::string& path, std::optional<double> rho, const std::string& format,
                  const std::string& out) {
  Packing p = load_packing(path);
  const double r = rho.value_or(p.rho);
  Decomposition dec = molnar(p.centers);
  bool refined = false;
  if (!(p.geometry == Geometry::Spherical && r > kPi / 4) && saturation_check(dec.delaunay, r)) {
    dec = refine(dec, r);
    refined = true;
  }
  if (format == "svg") {
    emit(svg_decomposition(dec, r), out);
  } else {
    std::ostringstream s;
    write_decomposition(s, dec);
    emit(s.str(), out);
  }
  if (!refined) std::cerr << "note: not refined (set not saturated or rho > pi/4 on the sphere)\n";
  return kPass;
}

struct GenerateOptions {
  std::string kind;
  std::string geometry = "euclidean";
  double lambda = 0;
  double rho = 1;
  double region = 6;
  int window = 4;
  int n = 7;
  int k = 3;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateOptions& o) {
  Packing p;
  if (o.kind == "density-lattice")
    p = euclidean_extremal_density_lattice(o.lambda, o.window);
  else if (o.kind == "tightness-config")
    p = euclidean_extremal_tightness_config(o.lambda, o.window);
  else if (o.kind == "square-grid")
    p = square_grid(o.k);
  else if (o.kind == "hexagonal-patch")
    p = hexagonal_patch(o.n, o.lambda);
  else if (o.kind == "platonic")
    p = platonic_caps(o.n, o.lambda);
  else if (o.kind == "random")
    p = random_saturated(parse_geometry(o.geometry), o.rho, o.region, o.seed, o.lambda);
  else if (o.kind == "H16" || o.kind == "H20") {
    SpecialConstants c = special_tiling_constants(o.kind);
    emit("rho " + N(c.rho) + "\nlambda " + N(c.lambda) + "\n", o.out);
    return kPass;
  } else
    throw Error(ErrorCode::Domain, "unknown kind '" + o.kind + "'");
  std::ostringstream s;
  write_packing(s, p);
  emit(s.str(), o.out);
  return kPass;
}

int run_contact(const std::string& path) {
  Packing p = load_packing(path);
  ContactGraph g = contact_graph(p);
  const long n = g.n, edges = static_cast<long>(g.edges.size());
  std::cout << "n " << n << "\ncontacts " << edges << "\n";
  bool tf = is_triangle_free(g);
  std::cout << "triangle_free " << (tf ? "yes" : "no") << "\n";
  int status = kPass;
  if (p.geometry == Geometry::Euclidean) {
    long k = outer_face_incidences(g, p.centers);
    long cap = triangle_free_edge_bound(n, k);
    std::cout << "outer_face_incidences " << k << "\ntriangle_free_edge_bound " << cap << "\n";
    if (tf && edges > cap) status = kViolated;
    if (n >= 2 && p.rho == 1 && p.lambda <= 1) {
      ContactBounds b = contact_bounds(n, p.lambda);
      std::cout << "hexagonal_value " << hexagonal_contact_number(n) << "\n";
      std::cout << "square_value " << square_contact_number(n) << "\n";
      std::cout << "theorem_lower " << b.lower << "\n";
      std::cout << "theorem_upper " << N(b.upper) << (b.upper_has_unresolved_constant ? " + O(1)" : "") << "\n";
      if (p.lambda > std::sqrt(3.0) / 2 && !tf) status = kViolated;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-separable disk packings in E2, S2, H2"};
  app.require_subcommand(1);

  std::string geometry = "euclidean";
  double lambda = 0, rho = 1;
  auto* bounds = app.add_subcommand("bounds", "density and tightness bounds");
  bounds->add_option("--geometry,-g", geometry, "euclidean | sphere | hyperbolic");
  bounds->add_option("--lambda,-l", lambda)->required();
  bounds->add_option("--rho,-r", rho);

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "bound values over a lambda (x rho) grid");
  sweep->add_option("--geometry,-g", so.geometry);
  sweep->add_option("--quantity,-q", so.quantity, "density | tightness | regions");
  sweep->add_option("--lambda-min", so.lambda_min);
  sweep->add_option("--lambda-max", so.lambda_max);
  sweep->add_option("--lambda-steps", so.lambda_steps);
  sweep->add_option("--rho,-r", so.rho);
  sweep->add_option("--rho-min", so.rho_min);
  sweep->add_option("--rho-max", so.rho_max);
  sweep->add_option("--rho-steps", so.rho_steps);
  sweep->add_option("--format,-f", so.format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  sweep->add_option("--out,-o", so.out);

  std::string path;
  std::optional<double> lambda_override;
  auto* verify = app.add_subcommand("verify", "check packing and lambda-separability");
  verify->add_option("path", path)->required();
  verify->add_option("--lambda,-l", lambda_override, "override the file's lambda");

  std::optional<double> rho_override;
  std::string dformat = "records", dout;
  auto* decompose = app.add_subcommand("decompose", "refined Molnar decomposition");
  decompose->add_option("path", path)->required();
  decompose->add_option("--rho,-r", rho_override);
  decompose->add_option("--format,-f", dformat)->check(CLI::IsMember({"records", "svg"}));
  decompose->add_option("--out,-o", dout);

  GenerateOptions go;
  auto* generate = app.add_subcommand("generate", "write a named configuration");
  generate->add_option("kind", go.kind,
                       "density-lattice | tightness-config | square-grid | hexagonal-patch | platonic | random | H16 | H20")
      ->required();
  generate->add_option("--geometry,-g", go.geometry);
  generate->add_option("--lambda,-l", go.lambda);
  generate->add_option("--rho,-r", go.rho);
  generate->add_option("--region", go.region);
  generate->add_option("--window,-w", go.window);
  generate->add_option("--n,-n", go.n);
  generate->add_option("--k,-k", go.k);
  generate->add_option("--seed", go.seed);
  generate->add_option("--out,-o", go.out);

  auto* contact = app.add_subcommand("contact", "contact graph report");
  contact->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*bounds) return run_bounds(geometry, lambda, rho);
    if (*sweep) return run_sweep(so);
    if (*verify) return run_verify(path, lambda_override);
    if (*decompose) return run_decompose(path, rho_override, dformat, dout);
    if (*generate) return run_generate(go);
    if (*contact) return run_contact(path);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
