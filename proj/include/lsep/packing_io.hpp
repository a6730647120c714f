#pragma once

// Line-oriented text formats.
//
// Packing:
//   geometry euclidean|spherical|hyperbolic
//   rho <r>
//   lambda <l>
//   count <n>
//   <n center records: "x y" (E) or "x0 x1 x2" (S, H model coordinates)>
// Blank lines and '#' comments are ignored. Numbers are written with 17
// significant digits.
//
// Decomposition: one record per cell
//   cell <index> <kind> <k> <k vertex coordinate tuples> center <tuple|none> radius <R|inf>

#include <iosfwd>
#include <string>

#include "lsep/decomposition.hpp"
#include "lsep/packing.hpp"

namespace lsep {

void write_packing(std::ostream& out, const Packing& p);
/// Throws Parse (with the 1-based record index) on malformed input, on a
/// center off the model surface, on lambda > rho and, if `require_packing`,
/// on the first pair closer than 2 rho - 1e-10.
Packing read_packing(std::istream& in, bool require_packing = false);

Packing load_packing(const std::string& path, bool require_packing = false);
void save_packing(const std::string& path, const Packing& p);

void write_decomposition(std::ostream& out, const Decomposition& dec);

/// %.17g
std::string format_number(double v);

}  // namespace lsep
