// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Optional argument: directory holding the separability
// corpus (defaults to the source tree's tests/data).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decomp_checks.hpp"
#include "family_oracle.hpp"
#include "lsep/bounds.hpp"
#include "lsep/decomposition.hpp"
#include "lsep/formulas.hpp"
#include "lsep/generators.hpp"
#include "lsep/kernels.hpp"
#include "lsep/packing.hpp"
#include "lsep/packing_io.hpp"
#include "lsep/separability.hpp"
#include "lsep/triangles.hpp"
#include "oracles.hpp"

using namespace lsep;
using oracle::ld;

namespace {

// Collects failures of one criterion and the worst deviation seen.
struct Tally {
  int checks = 0;
  int failures = 0;
  double worst = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
  // |a - b| <= tol, recording the deviation
  void close(double a, double b, double tol, const std::string& what) {
    double d = std::abs(a - b);
    if (!(d == d)) d = INFINITY;
    worst = std::max(worst, d);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.17g vs %.17g", what.c_str(), a, b);
    expect(d <= tol, buf);
  }
  void rel(double a, double b, double tol, const std::string& what) {
    double d = std::abs(a - b) / std::max(std::abs(b), 1e-300);
    if (!(d == d)) d = INFINITY;
    worst = std::max(worst, d);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.17g vs %.17g", what.c_str(), a, b);
    expect(d <= tol, buf);
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from(const Tally& t, const std::string& extra = "") {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d checks, max deviation %.2e", t.checks, t.worst);
  std::string d = buf;
  if (!extra.empty()) d += ", " + extra;
  if (t.failures) d += "; " + std::to_string(t.failures) + " failed, first: " + t.first;
  return {t.failures == 0, d};
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---- 1 ------------------------------------------------------------------

Outcome euclidean_density() {
  Tally t;
  t.close(density_bound_euclidean(0).value, kPi / std::sqrt(12.0), 1e-15, "bound at 0");
  t.close(density_bound_euclidean(1).value, kPi / 4, 1e-15, "bound at 1");
  for (double l : {0.2, std::sqrt(3.0) / 2, 0.93, 1.0}) {
    Packing p = euclidean_extremal_density_lattice(l, 5);
    t.close(packing_density(p).value, density_bound_euclidean(l).value, 1e-9, "lattice at " + fmt("%g", l));
  }
  return from(t);
}

// ---- 2 ------------------------------------------------------------------

Outcome euclidean_tightness() {
  Tally t;
  const double c1 = std::sqrt(3.0) / 2, c2 = 2 * std::sqrt(2.0) / 3;
  auto b1 = [](double) { return 2 / std::sqrt(3.0); };
  auto b2 = [](double l) { return std::sqrt(2 - 2 * std::sqrt(1 - l * l)) / l; };
  auto b3 = [](double l) { return 3 * std::sqrt(3.0) * l / 4; };
  t.close(b1(c1), b2(c1), 1e-12, "branches 1, 2 at sqrt(3)/2");
  t.close(b2(c2), b3(c2), 1e-12, "branches 2, 3 at 2 sqrt(2)/3");
  for (double c : {c1, c2})
    t.close(tightness_bound_euclidean(std::nextafter(c, 0.0)).value,
            tightness_bound_euclidean(std::nextafter(c, 2.0)).value, 1e-12, "bound across " + fmt("%.6f", c));
  for (double l = 0.005; l < 1; l += 0.005) {
    double want = l <= c1 ? b1(l) : l <= c2 ? b2(l) : b3(l);
    t.close(tightness_bound_euclidean(l).value, want, 1e-12, "bound at " + fmt("%g", l));
  }
  for (double l : {0.5, 0.9, 0.97}) {
    Packing p = euclidean_extremal_tightness_config(l, 5);
    t.close(packing_tightness(p).value, tightness_bound_euclidean(l).value, 1e-9, "config at " + fmt("%g", l));
  }
  return from(t);
}

// ---- 3 ------------------------------------------------------------------

Outcome closed_forms_vs_oracle() {
  Tally t;
  const Geometry S = Geometry::Spherical, H = Geometry::Hyperbolic;
  for (double l : linspace(0.01, 0.78, 50)) {
    ld lo = std::asin(std::tan((ld)l)), hi = std::asin(std::sqrt(2.0L) * std::sin((ld)l));
    ld y = oracle::golden_min([&](ld s) { return oracle::circumradius_sphere(s, oracle::x1_sphere(s, l)); }, lo, hi);
    t.close(y_min(S, l), (double)y, 1e-8, "y_min^s at " + fmt("%g", l));
  }
  for (double l : linspace(0.01, 3, 50)) {
    ld hi = std::asinh(std::sqrt(2.0L) * std::sinh((ld)l));
    ld y = oracle::golden_min([&](ld s) { return oracle::circumradius_hyp(s, oracle::x_hyp(s, l)); },
                              (ld)l * (1 + 1e-12L), hi);
    t.close(y_min(H, l), (double)y, 1e-8, "y_min^h at " + fmt("%g", l));
  }
  // fixed points of x(y) = y
  const double l_switch = std::atan(std::sqrt(0.5));
  for (double l : linspace(0.01, std::asin(0.6) - 0.005, 50)) {
    const ld lo = std::asin(std::tan((ld)l)), top = std::acos(-1.0L) / 2;
    auto g2 = [&](ld s) { return oracle::x2_sphere(s, l) - s; };
    ld peak = oracle::golden_min([&](ld s) { return -g2(s); }, lo, top);
    ld ys = l < l_switch ? oracle::bisect_root([&](ld s) { return oracle::x1_sphere(s, l) - s; }, lo, top)
                         : oracle::bisect_root(g2, lo, peak);
    ld yb = oracle::bisect_root(g2, peak, top);
    t.close(y_s(S, l), (double)ys, 1e-9, "y_s^s at " + fmt("%g", l));
    t.close(y_b(l), (double)yb, 1e-9, "y_b^s at " + fmt("%g", l));
  }
  for (double l : linspace(0.01, 3, 50)) {
    ld y = oracle::bisect_root([&](ld s) { return oracle::x_hyp(s, l) - s; }, (ld)l * (1 + 1e-15L), 60.0L);
    t.close(y_s(H, l), (double)y, 1e-9, "y_s^h at " + fmt("%g", l));
  }
  return from(t);
}

// ---- 4 ------------------------------------------------------------------

Outcome family_equivalence() {
  Tally t;
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> U(0, 1);
  struct Fam {
    Geometry g;
    int v;
    const char* name;
  };
  for (Fam f : {Fam{Geometry::Spherical, 1, "T1s"}, Fam{Geometry::Spherical, 2, "T2s"},
                Fam{Geometry::Hyperbolic, 0, "Th"}, Fam{Geometry::Euclidean, 0, "Te"}}) {
    int done = 0;
    while (done < 200) {
      double l, y;
      if (f.g == Geometry::Spherical) {
        l = 0.01 + 0.76 * U(rng);
        double lo = std::asin(std::tan(l));
        y = lo + (kPi / 2 - lo) * (0.001 + 0.998 * U(rng));
      } else {
        l = 0.01 + 2 * U(rng);
        y = l + 3 * (0.001 + 0.999 * U(rng));
      }
      double c;
      try {
        c = family_circumradius(f.g, f.v, y, l);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NoCircumcircle) continue;  // not a valid pair for the circumradius
        throw;
      }
      ++done;
      Triangle tri = construct(family_triangle(f.g, f.v, y, l));
      std::string at = std::string(f.name) + " at (" + fmt("%.6f", l) + ", " + fmt("%.6f", y) + ")";
      double area = triangle_area(tri);
      double radius = circumcircle(tri).radius;
      double scale = f.g == Geometry::Euclidean ? std::max(1.0, area) : 1.0;
      t.close(family_area(f.g, f.v, y, l) / scale, area / scale, 1e-9, "area " + at);
      double R = f.g == Geometry::Spherical    ? std::atan2(1.0, c)
                 : f.g == Geometry::Hyperbolic ? std::atanh(1 / c)
                                               : c;
      double rscale = f.g == Geometry::Euclidean ? std::max(1.0, radius) : 1.0;
      t.close(R / rscale, radius / rscale, 1e-9, "circumradius " + at);
      if (f.g != Geometry::Euclidean)
        t.close(family_half_area_cosine(f.g, f.v, y, l), std::cos(area / 2), 1e-9, "cos(A/2) " + at);
    }
  }
  return from(t);
}

// ---- 5 ------------------------------------------------------------------

// f sampled on 1000 points of [a, b] must move strictly in direction `dir`
// (+1 up, -1 down); steps smaller than 1e-12 count as noise, not violations.
void monotone(Tally& t, const std::string& what, double a, double b, int dir, const std::function<double(double)>& f) {
  const int n = 1000;
  double prev = f(a);
  for (int k = 1; k < n; ++k) {
    double s = a + (b - a) * k / (n - 1);
    double v = f(s);
    double step = (v - prev) * dir;
    t.worst = std::max(t.worst, step < 0 ? -step : 0.0);
    t.expect(step > 0 || std::abs(v - prev) <= 1e-12, what + " at " + fmt("%.9f", s));
    prev = v;
  }
}

Outcome monotonicity() {
  Tally t;
  const Geometry S = Geometry::Spherical, H = Geometry::Hyperbolic, E = Geometry::Euclidean;
  const double in = 1e-9;  // keep off the open ends
  for (double l : {0.05, 0.2, 0.35, 0.5, 0.65, 0.75}) {
    const double lo = std::asin(std::tan(l)) + in, mid = y_circumcenter(S, l), top = kPi / 2,
                 ym = y_min(S, l);
    const std::string at = " (lambda " + fmt("%g", l) + ")";
    monotone(t, "x1 on S1" + at, lo, mid, -1, [&](double y) { return x1_spherical(y, l); });
    monotone(t, "x1 on S2" + at, mid, top, +1, [&](double y) { return x1_spherical(y, l); });
    monotone(t, "x2 on S1" + at, lo, mid, +1, [&](double y) { return x2_spherical(y, l); });
    monotone(t, "x2 on S2" + at, mid, top, -1, [&](double y) { return x2_spherical(y, l); });
    monotone(t, "area T1 before the break" + at, lo, mid, -1, [&](double y) { return family_area(S, 1, y, l); });
    monotone(t, "area T1 after the break" + at, mid, top, +1, [&](double y) { return family_area(S, 1, y, l); });
    monotone(t, "area T2" + at, lo, top, +1, [&](double y) { return family_area(S, 2, y, l); });
    auto R = [&](int v) {
      return [&, v](double y) { return std::atan2(1.0, family_circumradius(S, v, y, l)); };
    };
    monotone(t, "R1 before y_min" + at, lo, ym, -1, R(1));
    monotone(t, "R1 after y_min" + at, ym, top, +1, R(1));
    monotone(t, "R2" + at, lo, top, +1, R(2));
  }
  monotone(t, "y_s^s", 0, std::asin(0.6), +1, [&](double l) { return y_s(S, l); });
  monotone(t, "y_b^s", 0, std::asin(0.6), -1, [&](double l) { return y_b(l); });
  monotone(t, "y_s^h", 0, 4, +1, [&](double l) { return y_s(H, l); });

  for (double l : {0.05, 0.3, 0.8, 1.5, 2.5}) {
    const double lo = l * (1 + in), mid = y_circumcenter(H, l), ym = y_min(H, l);
    const std::string at = " (lambda " + fmt("%g", l) + ")";
    monotone(t, "x^h on H1" + at, lo, mid, -1, [&](double y) { return x_hyperbolic(y, l); });
    monotone(t, "x^h on H2" + at, mid, mid + 4, +1, [&](double y) { return x_hyperbolic(y, l); });
    monotone(t, "area T^h before the break" + at, lo, mid, -1, [&](double y) { return family_area(H, 0, y, l); });
    monotone(t, "area T^h after the break" + at, mid, mid + 4, +1,
             [&](double y) { return family_area(H, 0, y, l); });
    // R^h exists while coth R > 1; stop just short of where it blows up
    auto has = [&](double y) {
      try {
        family_circumradius(H, 0, y, l);
        return true;
      } catch (const Error&) {
        return false;
      }
    };
    double a = ym, b = ym + 1;
    while (has(b)) b += 1;
    for (int k = 0; k < 100; ++k) (has((a + b) / 2) ? a : b) = (a + b) / 2;
    auto R = [&](double y) { return std::atanh(1 / family_circumradius(H, 0, y, l)); };
    monotone(t, "R^h before y_min" + at, lo, ym, -1, R);
    monotone(t, "R^h after y_min" + at, ym, ym + (a - ym) * 0.999, +1, R);

    const double le = l, mide = std::sqrt(2.0) * le, yme = std::sqrt(1.5) * le;
    monotone(t, "x^e before the break" + at, le * (1 + in), mide, -1, [&](double y) { return x_euclidean(y, le); });
    monotone(t, "x^e after the break" + at, mide, mide + 4, +1, [&](double y) { return x_euclidean(y, le); });
    monotone(t, "R^e before sqrt(3/2) lambda" + at, le * (1 + in), yme, -1,
             [&](double y) { return family_circumradius(E, 0, y, le); });
    monotone(t, "R^e after sqrt(3/2) lambda" + at, yme, yme + 4, +1,
             [&](double y) { return family_circumradius(E, 0, y, le); });
  }

  // two-disk density: decreasing in the legs and in the base
  for (Geometry g : {E, S, H})
    for (double rho : {0.1, 0.3, 0.6}) {
      const std::string at = std::string(" (") + to_string(g) + ", rho " + fmt("%g", rho) + ")";
      for (double yf : {1.0, 1.3, 1.8}) {
        double y = 2 * rho * yf;
        double xtop = g == S ? std::min(4 * rho + 1, kPi / 2 - 0.01) : 6 * rho;
        monotone(t, "two-disk density in x" + at, y / 2 + 1e-3, xtop, -1,
                 [&](double x) { return two_disk_density(g, x, y, rho); });
      }
      for (double x : {1.6 * rho, 2.5 * rho}) {
        double ytop = std::min(2 * x * 0.999, g == S ? kPi - 0.01 : 1e9);
        monotone(t, "two-disk density in y" + at, 2 * rho, ytop, -1,
                 [&](double y) { return two_disk_density(g, x, y, rho); });
      }
    }
  return from(t);
}

// ---- 6 ------------------------------------------------------------------

Outcome decomposition_invariants() {
  Tally t;
  struct Setup {
    Geometry g;
    double rho, region;
  };
  int type2 = 0, bridges = 0;
  for (Setup s : {Setup{Geometry::Euclidean, 1, 8}, Setup{Geometry::Spherical, 0.25, 0},
                  Setup{Geometry::Hyperbolic, 0.5, 2.5}})
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const std::string at = std::string(to_string(s.g)) + " seed " + std::to_string(seed);
      Packing p = random_saturated(s.g, s.rho, s.region, seed);
      Delaunay d = delaunay(p.centers);
      t.expect(saturation_check(d, s.rho), "saturated " + at);
      t.expect(checks::empty_circumdisk_violations(d) == 0, "empty circumdisks " + at);
      Decomposition m = molnar(d);
      bridges += static_cast<int>(m.bridges.size());
      t.expect(checks::bridge_crossings(m) == 0, "bridges disjoint " + at);
      t.expect(checks::bridge_side_contacts(m) == 0, "bridges avoid other sides " + at);
      t.expect(checks::edge_to_edge_violations(m) == 0, "Molnar edge-to-edge " + at);
      Decomposition r = refine(m, s.rho);
      t.expect(checks::edge_to_edge_violations(r) == 0, "refined edge-to-edge " + at);
      t.expect(checks::type1_violations(r) == 0, "type 1 circumradius " + at);
      double ref = checks::reference_area(d);
      t.rel(total_area(r), ref, 1e-8, "area " + at);
      for (const MolnarCell& c : r.cells) type2 += c.kind == CellKind::Type2;
    }
  return from(t, std::to_string(bridges) + " bridges, " + std::to_string(type2) + " type 2 cells");
}

// ---- 7 ------------------------------------------------------------------

Outcome spherical_sharp() {
  Tally t;
  const Geometry S = Geometry::Spherical;
  for (int n : {4, 6, 12}) {
    const double r = platonic_radius(n);
    Packing p = platonic_caps(n);
    const std::string at = "n = " + std::to_string(n);
    t.close(packing_density(p).value, triangle_density(regular_triangle(S, r), r), 1e-9, "density " + at);
    t.close(packing_tightness(p).value, regular_circumradius(S, r), 1e-9, "tightness " + at);
  }
  t.close(packing_density(platonic_caps(6)).value, 3 * (1 - std::sqrt(2.0) / 2), 1e-9, "octahedron");

  SpecialConstants h16 = special_tiling_constants("H16"), h20 = special_tiling_constants("H20");
  auto five = [](double v) { return std::round(v * 1e5) / 1e5; };
  t.close(five(h16.rho), 0.57186, 1e-12, "H16 rho");
  t.close(five(h16.lambda), 0.53644, 1e-12, "H16 lambda");
  t.close(five(h20.rho), 0.55357, 1e-12, "H20 rho");
  t.close(five(h20.lambda), 0.46365, 1e-12, "H20 lambda");
  std::string branches;
  for (auto [c, N, name] : {std::tuple{h16, 16, "H16"}, std::tuple{h20, 20, "H20"}}) {
    // tile with half legs rho and area 4 pi / N; its half base must satisfy
    // the tangency relation x_i(y) = rho on one of the two families
    auto area = [&](ld s) { return (ld)iso_area(iso_triangle(S, (double)s, c.rho)); };
    ld lo = std::asin(std::tan((ld)c.lambda)), hi = 2 * c.rho * 0.999L;
    ld peak = oracle::golden_min([&](ld s) { return -area(s); }, lo, hi);
    ld y = oracle::bisect_root([&](ld s) { return area(s) - 4 * kPi / N; }, lo, peak);
    double d1 = (double)std::fabs(oracle::x1_sphere(y, c.lambda) - c.rho);
    double d2 = (double)std::fabs(oracle::x2_sphere(y, c.lambda) - c.rho);
    t.close(std::min(d1, d2), 0, 1e-4, std::string(name) + " tangency");
    branches += std::string(branches.empty() ? "" : ", ") + name + " on T" + (d1 <= d2 ? "1" : "2");
  }
  return from(t, branches);
}

// ---- 8 ------------------------------------------------------------------

Outcome contact_numbers() {
  Tally t;
  for (int k = 2; k <= 8; ++k)
    t.expect(contact_number(square_grid(k)) == 2L * k * k - 2L * k, "square grid " + std::to_string(k));
  for (int n : {7, 19, 37})
    t.expect(contact_number(hexagonal_patch(n)) == (long)std::floor(3.0 * n - std::sqrt(12.0 * n - 3)),
             "hexagonal patch " + std::to_string(n));

  std::vector<Packing> separable;
  for (int k = 2; k <= 8; ++k) separable.push_back(square_grid(k));
  for (double l : {0.88, 0.93, 1.0}) separable.push_back(euclidean_extremal_density_lattice(l, 3));
  for (double l : {0.9, 0.97, 1.0}) separable.push_back(euclidean_extremal_tightness_config(l, 3));
  int used = 0;
  std::string report;
  for (const Packing& p : separable) {
    t.expect(p.lambda > std::sqrt(3.0) / 2, "lambda above sqrt(3)/2");
    if (!is_lambda_separable(p).separable) {
      t.expect(false, "corpus packing not separable (n = " + std::to_string(p.centers.size()) + ")");
      continue;
    }
    ++used;
    ContactGraph cg = contact_graph(p);
    const long n = static_cast<long>(p.centers.size()), e = static_cast<long>(cg.edges.size());
    t.expect(is_triangle_free(cg), "triangle-free, n = " + std::to_string(n));
    long k = outer_face_incidences(cg, p.centers);
    t.expect(e <= triangle_free_edge_bound(n, k), "2n - k/2 - 2 bound, n = " + std::to_string(n));
    if (p.centers.size() == 64) {
      ContactBounds b = contact_bounds(n, p.lambda);
      report = "8x8 grid: " + std::to_string(e) + " contacts, two-term upper expression " + fmt("%.3f", b.upper);
    }
  }
  return from(t, std::to_string(used) + " separable packings; " + report);
}

// ---- 9 ------------------------------------------------------------------

Outcome flat_limit() {
  Tally t;
  const double eps = 1e-3;
  int regimes[3] = {0, 0, 0};
  for (double r : linspace(0.05, 1.0, 20)) {
    regimes[r <= std::sqrt(3.0) / 2 ? 0 : r <= 2 * std::sqrt(2.0) / 3 ? 1 : 2]++;
    double de = density_bound_euclidean(r).value, te = tightness_bound_euclidean(r).value;
    for (Geometry g : {Geometry::Spherical, Geometry::Hyperbolic}) {
      const std::string at = std::string(to_string(g)) + " at ratio " + fmt("%g", r);
      t.rel(density_bound(g, eps * r, eps).value, de, 1e-4, "density " + at);
      t.rel(tightness_bound(g, eps * r, eps).value / eps, te, 1e-4, "tightness " + at);
    }
  }
  return from(t, "ratios per regime " + std::to_string(regimes[0]) + "/" + std::to_string(regimes[1]) + "/" +
                     std::to_string(regimes[2]));
}

// ---- 10 -----------------------------------------------------------------

Outcome separability_corpus(const std::filesystem::path& dir) {
  Tally t;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir / "separability"))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int yes = 0, no = 0;
  for (const auto& f : files) {
    Packing p = load_packing(f.string());
    if (p.centers.size() > 10) continue;
    double threshold = oracle::separability_threshold(p.centers);
    bool want = threshold >= p.lambda - 1e-8;
    bool got = is_lambda_separable(p).separable;
    (want ? yes : no)++;
    t.expect(got == want, f.filename().string() + ": verifier " + (got ? "separable" : "not separable") +
                              ", oracle threshold " + fmt("%.12g", threshold) + " vs lambda " +
                              fmt("%.12g", p.lambda));
  }
  t.expect(!files.empty(), "empty corpus");
  return from(t, std::to_string(yes) + " separable, " + std::to_string(no) + " not");
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path data = argc > 1 ? argv[1] : LSEP_TEST_DATA;
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds; 0 when none is stated
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "euclidean density endpoints and extremal lattices", 1, euclidean_density},
      {2, "euclidean tightness branches and extremal configurations", 1, euclidean_tightness},
      {3, "closed forms against golden-section and bisection", 10, closed_forms_vs_oracle},
      {4, "triangle families against constructed triangles", 10, family_equivalence},
      {5, "monotonicity suite", 30, monotonicity},
      {6, "decomposition invariants on random saturated sets", 60, decomposition_invariants},
      {7, "spherical sharp instances", 5, spherical_sharp},
      {8, "contact numbers", 0, contact_numbers},
      {9, "flat-limit consistency", 0, flat_limit},
      {10, "separability verifier against the exhaustive oracle", 60, [&] { return separability_corpus(data); }},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs >= c.budget) {
      o.pass = false;
      o.detail += "; over the " + fmt("%g", c.budget) + " s budget";
    }
    failed += !o.pass;
    std::printf("%s %2d %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
