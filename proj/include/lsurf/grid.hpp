#pragma once

#include <cstddef>
#include <vector>

#include "lsurf/lorentz.hpp"

namespace lsurf {

/// Uniform rectangle in the null (characteristic) coordinates (s, t), where
/// u + sigma*v = e+ s + e- t, i.e. u = (s + t)/2 and v = (s - t)/2.
struct GridSpec {
  double s0 = 0.0, s1 = 1.0;
  double t0 = 0.0, t1 = 1.0;
  int ns = 3, nt = 3;

  double hs() const { return (s1 - s0) / (ns - 1); }
  double ht() const { return (t1 - t0) / (nt - 1); }
  double h() const;

  double s(int i) const { return s0 + i * hs(); }
  double t(int j) const { return t0 + j * ht(); }
  double u(int i, int j) const { return 0.5 * (s(i) + t(j)); }
  double v(int i, int j) const { return 0.5 * (s(i) - t(j)); }
  /// The conformal parameter a = u + sigma*v at a node.
  LorentzNum a(int i, int j) const { return from_split(s(i), t(j)); }

  std::size_t size() const { return static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt); }

  /// Throws GridTooSmall unless ns, nt >= 3 and the rectangle is non-empty.
  void validate() const;

  /// Dyadic refinement: each cell split into 2^levels per axis.
  GridSpec refined(int levels) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Node-centred samples over a GridSpec, row-major with s as the slow index.
template <class T>
struct Grid {
  GridSpec spec;
  std::vector<T> values;

  Grid() = default;
  explicit Grid(const GridSpec& g, const T& fill = T{}) : spec(g), values(g.size(), fill) {}

  T& operator()(int i, int j) { return values[index(i, j)]; }
  const T& operator()(int i, int j) const { return values[index(i, j)]; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.nt) + static_cast<std::size_t>(j);
  }
};

using GridField = Grid<LorentzNum>;
using ScalarField = Grid<double>;

template <class Fn>
GridField sample(const GridSpec& spec, Fn&& fn) {
  GridField f(spec);
  for (int i = 0; i < spec.ns; ++i)
    for (int j = 0; j < spec.nt; ++j) f(i, j) = fn(spec.a(i, j));
  return f;
}

// Second-order central differences; second-order one-sided stencils on the
// first and last node of each line.

template <class T>
T diff_s(const Grid<T>& f, int i, int j) {
  const int n = f.spec.ns;
  const double h = f.spec.hs();
  if (i == 0) return (f(0, j) * -3.0 + f(1, j) * 4.0 - f(2, j)) * (0.5 / h);
  if (i == n - 1) return (f(n - 1, j) * 3.0 - f(n - 2, j) * 4.0 + f(n - 3, j)) * (0.5 / h);
  return (f(i + 1, j) - f(i - 1, j)) * (0.5 / h);
}

template <class T>
T diff_t(const Grid<T>& f, int i, int j) {
  const int n = f.spec.nt;
  const double h = f.spec.ht();
  if (j == 0) return (f(i, 0) * -3.0 + f(i, 1) * 4.0 - f(i, 2)) * (0.5 / h);
  if (j == n - 1) return (f(i, n - 1) * 3.0 - f(i, n - 2) * 4.0 + f(i, n - 3)) * (0.5 / h);
  return (f(i, j + 1) - f(i, j - 1)) * (0.5 / h);
}

template <class T>
Grid<T> diff_s(const Grid<T>& f) {
  Grid<T> out(f.spec);
  for (int i = 0; i < f.spec.ns; ++i)
    for (int j = 0; j < f.spec.nt; ++j) out(i, j) = diff_s(f, i, j);
  return out;
}

template <class T>
Grid<T> diff_t(const Grid<T>& f) {
  Grid<T> out(f.spec);
  for (int i = 0; i < f.spec.ns; ++i)
    for (int j = 0; j < f.spec.nt; ++j) out(i, j) = diff_t(f, i, j);
  return out;
}

/// Width of the boundary ring excluded from interior max-norm statistics.
int interior_margin(const GridSpec& spec);

/// Trapezoidal primitive of a sampled closed 1-form P ds + Q dt along the
/// staircase path: first along t = t0 in s, then along each s = const in t.
/// Starts from `origin` at node (0, 0).
template <class T>
Grid<T> integrate_s_then_t(const Grid<T>& ds_coeff, const Grid<T>& dt_coeff, const T& origin) {
  const GridSpec& g = ds_coeff.spec;
  Grid<T> out(g);
  out(0, 0) = origin;
  const double hs = g.hs();
  const double ht = g.ht();
  for (int i = 1; i < g.ns; ++i)
    out(i, 0) = out(i - 1, 0) + (ds_coeff(i - 1, 0) + ds_coeff(i, 0)) * (0.5 * hs);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 1; j < g.nt; ++j)
      out(i, j) = out(i, j - 1) + (dt_coeff(i, j - 1) + dt_coeff(i, j)) * (0.5 * ht);
  return out;
}

/// The transposed staircase: first along s = s0 in t, then along rows in s.
template <class T>
Grid<T> integrate_t_then_s(const Grid<T>& ds_coeff, const Grid<T>& dt_coeff, const T& origin) {
  const GridSpec& g = ds_coeff.spec;
  Grid<T> out(g);
  out(0, 0) = origin;
  const double hs = g.hs();
  const double ht = g.ht();
  for (int j = 1; j < g.nt; ++j)
    out(0, j) = out(0, j - 1) + (dt_coeff(0, j - 1) + dt_coeff(0, j)) * (0.5 * ht);
  for (int j = 0; j < g.nt; ++j)
    for (int i = 1; i < g.ns; ++i)
      out(i, j) = out(i - 1, j) + (ds_coeff(i - 1, j) + ds_coeff(i, j)) * (0.5 * hs);
  return out;
}

}  // namespace lsurf
