#include "lsurf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::string header_line(std::string_view kind, const GridSpec& g) {
  return "# lsurf-" + std::string(kind) + " v" + std::to_string(kCsvVersion) + " s0=" + format_double(g.s0) +
         " s1=" + format_double(g.s1) + " t0=" + format_double(g.t0) + " t1=" + format_double(g.t1) +
         " ns=" + std::to_string(g.ns) + " nt=" + std::to_string(g.nt);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t k = line.find(sep, start);
    out.push_back(line.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text) {
  int x = 0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), x);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) malformed("bad integer '" + std::string(text) + "'");
  return x;
}

GridSpec read_header(std::istream& in, std::string_view kind, std::string_view columns) {
  std::string line;
  if (!std::getline(in, line)) malformed("empty file");
  const auto tokens = split(trim(line), ' ');
  const std::string expected_kind = "lsurf-" + std::string(kind);
  if (tokens.size() != 9 || tokens[0] != "#" || tokens[1] != expected_kind)
    malformed("missing '# " + expected_kind + "' header");
  if (tokens[2] != "v" + std::to_string(kCsvVersion)) malformed("unsupported CSV version " + std::string(tokens[2]));
  GridSpec g;
  for (std::size_t k = 3; k < tokens.size(); ++k) {
    const auto kv = split(tokens[k], '=');
    if (kv.size() != 2) malformed("bad header field '" + std::string(tokens[k]) + "'");
    if (kv[0] == "s0") g.s0 = parse_double(kv[1]);
    else if (kv[0] == "s1") g.s1 = parse_double(kv[1]);
    else if (kv[0] == "t0") g.t0 = parse_double(kv[1]);
    else if (kv[0] == "t1") g.t1 = parse_double(kv[1]);
    else if (kv[0] == "ns") g.ns = parse_int(kv[1]);
    else if (kv[0] == "nt") g.nt = parse_int(kv[1]);
    else malformed("unknown header field '" + std::string(kv[0]) + "'");
  }
  try {
    g.validate();
  } catch (const Error& e) {
    malformed(std::string("header grid is invalid: ") + e.what());
  }
  if (!std::getline(in, line) || trim(line) != columns) malformed("expected column header '" + std::string(columns) + "'");
  return g;
}

// Reads exactly spec.size() data rows of `width` numbers each.
std::vector<std::vector<double>> read_rows(std::istream& in, const GridSpec& g, std::size_t width) {
  std::vector<std::vector<double>> rows;
  rows.reserve(g.size());
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (rows.size() == g.size()) malformed("more data rows than the header grid holds");
    const auto cells = split(t, ',');
    if (cells.size() != width)
      malformed("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(cells.size()) + " fields, expected " +
                std::to_string(width));
    std::vector<double> row;
    row.reserve(width);
    for (const auto c : cells) row.push_back(parse_double(trim(c)));
    rows.push_back(std::move(row));
  }
  if (rows.size() != g.size())
    malformed("file has " + std::to_string(rows.size()) + " data rows, header grid needs " + std::to_string(g.size()));
  return rows;
}

void check_coordinate(double got, double want, const char* name, std::size_t row) {
  if (std::fabs(got - want) > 1e-9 * std::max(1.0, std::fabs(want)))
    malformed(std::string(name) + " in row " + std::to_string(row + 1) + " does not match the header grid");
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

double parse_double(std::string_view text) {
  double x = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), x);
  if (text.empty() || r.ec != std::errc{} || r.ptr != text.data() + text.size())
    malformed("bad number '" + std::string(text) + "'");
  return x;
}

void write_immersion_csv(std::ostream& out, const Immersion22& F) {
  const GridSpec& g = F.spec();
  out << header_line("immersion", g) << "\nu,v,F0,F1,F2,F3\n";
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Vec22& x = F.points(i, j);
      out << format_double(g.u(i, j)) << ',' << format_double(g.v(i, j)) << ',' << format_double(x.x0) << ','
          << format_double(x.x1) << ',' << format_double(x.x2) << ',' << format_double(x.x3) << '\n';
    }
}

Immersion22 read_immersion_csv(std::istream& in) {
  const GridSpec g = read_header(in, "immersion", "u,v,F0,F1,F2,F3");
  const auto rows = read_rows(in, g, 6);
  Immersion22 F{VecField(g), Vec22{}};
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const std::size_t k = F.points.index(i, j);
      const auto& r = rows[k];
      check_coordinate(r[0], g.u(i, j), "u", k);
      check_coordinate(r[1], g.v(i, j), "v", k);
      F.points(i, j) = {r[2], r[3], r[4], r[5]};
    }
  F.basepoint = F.points(0, 0);
  return F;
}

void write_gridfield_csv(std::ostream& out, const GridField& f) {
  const GridSpec& g = f.spec;
  out << header_line("gridfield", g) << "\ns,t,value_u,value_v\n";
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j)
      out << format_double(g.s(i)) << ',' << format_double(g.t(j)) << ',' << format_double(f(i, j).u) << ','
          << format_double(f(i, j).v) << '\n';
}

GridField read_gridfield_csv(std::istream& in) {
  const GridSpec g = read_header(in, "gridfield", "s,t,value_u,value_v");
  const auto rows = read_rows(in, g, 4);
  GridField f(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const std::size_t k = f.index(i, j);
      check_coordinate(rows[k][0], g.s(i), "s", k);
      check_coordinate(rows[k][1], g.t(j), "t", k);
      f(i, j) = {rows[k][2], rows[k][3]};
    }
  return f;
}

void write_frames_csv(std::ostream& out, const Mat2AField& B) {
  const GridSpec& g = B.spec;
  out << header_line("frames", g) << "\ns,t,a_u,a_v,b_u,b_v,c_u,c_v,d_u,d_v\n";
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Mat2A& m = B(i, j);
      out << format_double(g.s(i)) << ',' << format_double(g.t(j));
      for (const LorentzNum* e : {&m.a, &m.b, &m.c, &m.d}) out << ',' << format_double(e->u) << ',' << format_double(e->v);
      out << '\n';
    }
}

Mat2AField read_frames_csv(std::istream& in) {
  const GridSpec g = read_header(in, "frames", "s,t,a_u,a_v,b_u,b_v,c_u,c_v,d_u,d_v");
  const auto rows = read_rows(in, g, 10);
  Mat2AField B(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const std::size_t k = B.index(i, j);
      const auto& r = rows[k];
      check_coordinate(r[0], g.s(i), "s", k);
      check_coordinate(r[1], g.t(j), "t", k);
      B(i, j) = {{r[2], r[3]}, {r[4], r[5]}, {r[6], r[7]}, {r[8], r[9]}};
    }
  return B;
}

void write_curve_csv(std::ostream& out, const CurvePair& c, bool first) {
  const GridSpec& g = c.spec;
  out << header_line(first ? "curve-s" : "curve-t", g) << '\n' << (first ? "s" : "t") << ",a,b,c,d\n";
  const auto& curve = first ? c.B1 : c.B2;
  for (std::size_t k = 0; k < curve.size(); ++k) {
    const double x = first ? g.s(static_cast<int>(k)) : g.t(static_cast<int>(k));
    const Mat2R& m = curve[k];
    out << format_double(x) << ',' << format_double(m.a) << ',' << format_double(m.b) << ',' << format_double(m.c)
        << ',' << format_double(m.d) << '\n';
  }
}

void write_obj(std::ostream& out, const Immersion22& F, const std::array<int, 3>& coords) {
  for (int c : coords)
    if (c < 0 || c > 3) throw Error(ErrorCode::InvalidArgument, "mesh coordinates must be in 0..3");
  const GridSpec& g = F.spec();
  out << "# lsurf mesh: coordinates x" << coords[0] << " x" << coords[1] << " x" << coords[2] << ", " << g.ns << "x"
      << g.nt << " grid\n";
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Vec22& x = F.points(i, j);
      out << "v " << format_double(x[static_cast<std::size_t>(coords[0])]) << ' '
          << format_double(x[static_cast<std::size_t>(coords[1])]) << ' '
          << format_double(x[static_cast<std::size_t>(coords[2])]) << '\n';
    }
  auto id = [&](int i, int j) { return i * g.nt + j + 1; };
  for (int i = 0; i + 1 < g.ns; ++i)
    for (int j = 0; j + 1 < g.nt; ++j) {
      out << "f " << id(i, j) << ' ' << id(i + 1, j) << ' ' << id(i + 1, j + 1) << '\n';
      out << "f " << id(i, j) << ' ' << id(i + 1, j + 1) << ' ' << id(i, j + 1) << '\n';
    }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace lsurf
