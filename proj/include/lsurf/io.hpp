#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lsurf/pseudosphere.hpp"
#include "lsurf/weierstrass.hpp"

namespace lsurf {

inline constexpr int kCsvVersion = 1;

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);
/// Strict full-string parse; throws Error(MalformedInput).
double parse_double(std::string_view text);

// Every CSV starts with a comment line "# lsurf-<kind> v1 s0=.. s1=.. t0=.. t1=.. ns=.. nt=.."
// followed by a column header. Rows are ordered with s as the slow index.

/// Columns u, v, F0, F1, F2, F3.
void write_immersion_csv(std::ostream& out, const Immersion22& F);
Immersion22 read_immersion_csv(std::istream& in);

/// Columns s, t, value_u, value_v.
void write_gridfield_csv(std::ostream& out, const GridField& f);
GridField read_gridfield_csv(std::istream& in);

/// Columns s, t and the entries a, b, c, d of the frame, each as (u, v).
void write_frames_csv(std::ostream& out, const Mat2AField& B);
Mat2AField read_frames_csv(std::istream& in);

/// One real 2x2 curve per file: columns param, a, b, c, d.
void write_curve_csv(std::ostream& out, const CurvePair& c, bool first);

/// Wavefront OBJ of the projection onto three coordinates (0..3), two
/// triangles per grid cell.
void write_obj(std::ostream& out, const Immersion22& F, const std::array<int, 3>& coords);

/// Reads a whole file; throws Error(MalformedInput) if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace lsurf
