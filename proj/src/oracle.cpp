#include "lsurf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

Vec22 second_diff_s(const VecField& f, int i, int j) {
  const int n = f.spec.ns;
  const double h2 = f.spec.hs() * f.spec.hs();
  if (n < 4 || (i > 0 && i < n - 1)) {
    const int c = std::clamp(i, 1, n - 2);
    return (f(c + 1, j) - f(c, j) * 2.0 + f(c - 1, j)) * (1.0 / h2);
  }
  if (i == 0) return (f(0, j) * 2.0 - f(1, j) * 5.0 + f(2, j) * 4.0 - f(3, j)) * (1.0 / h2);
  return (f(n - 1, j) * 2.0 - f(n - 2, j) * 5.0 + f(n - 3, j) * 4.0 - f(n - 4, j)) * (1.0 / h2);
}

Vec22 second_diff_t(const VecField& f, int i, int j) {
  const int n = f.spec.nt;
  const double h2 = f.spec.ht() * f.spec.ht();
  if (n < 4 || (j > 0 && j < n - 1)) {
    const int c = std::clamp(j, 1, n - 2);
    return (f(i, c + 1) - f(i, c) * 2.0 + f(i, c - 1)) * (1.0 / h2);
  }
  if (j == 0) return (f(i, 0) * 2.0 - f(i, 1) * 5.0 + f(i, 2) * 4.0 - f(i, 3)) * (1.0 / h2);
  return (f(i, n - 1) * 2.0 - f(i, n - 2) * 5.0 + f(i, n - 3) * 4.0 - f(i, n - 4)) * (1.0 / h2);
}

double euclid2(const Vec22& x) { return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3; }

// Tangent plane at one node, with the projector onto its orthogonal complement.
struct Plane {
  Vec22 Ts, Tt;
  double gss, gst, gtt, det;

  Vec22 normal_part(const Vec22& X) const {
    const double c1 = scalar(X, Ts), c2 = scalar(X, Tt);
    const double alpha = (gtt * c1 - gst * c2) / det;
    const double beta = (-gst * c1 + gss * c2) / det;
    return X - Ts * alpha - Tt * beta;
  }
};

bool degenerate(double det, double gss, double gst, double gtt) {
  const double scale = gss * gss + 2.0 * gst * gst + gtt * gtt;
  return !(std::fabs(det) > 1e-12 * scale) || scale == 0.0;
}

std::string node(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

Plane plane_at(const Jets& J, int i, int j) {
  Plane p{J.Fs(i, j), J.Ft(i, j), 0, 0, 0, 0};
  p.gss = scalar(p.Ts, p.Ts);
  p.gst = scalar(p.Ts, p.Tt);
  p.gtt = scalar(p.Tt, p.Tt);
  p.det = p.gss * p.gtt - p.gst * p.gst;
  if (degenerate(p.det, p.gss, p.gst, p.gtt))
    throw Error(ErrorCode::DegenerateTangent, "tangent plane is degenerate at node " + node(i, j));
  return p;
}

Vec22 basis(int k) {
  Vec22 e;
  e[static_cast<std::size_t>(k)] = 1.0;
  return e;
}

// Picks the candidate whose normalized square has the requested sign and the
// largest magnitude; the first candidate wins whenever it is clearly usable.
std::optional<Vec22> pick(const std::vector<Vec22>& cands, double sign, bool prefer_first) {
  std::optional<Vec22> best;
  double best_ratio = 1e-8;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const double e2 = euclid2(cands[k]);
    if (e2 == 0.0) continue;
    const double ratio = sign * scalar(cands[k], cands[k]) / e2;
    if (k == 0 && prefer_first && ratio > 0.1) return cands[0];
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = cands[k];
    }
  }
  return best;
}

// Orients a vector so that its largest Euclidean component is positive.
Vec22 canonical_sign(const Vec22& v) {
  std::size_t k = 0;
  for (std::size_t m = 1; m < 4; ++m)
    if (std::fabs(v[m]) > std::fabs(v[k])) k = m;
  return v[k] < 0.0 ? -v : v;
}

struct Normals {
  Vec22 n0, n1;
};

Normals normals_at(const Plane& p, const Normals* prev, int i, int j) {
  std::vector<Vec22> cands;
  if (prev) cands.push_back(p.normal_part(prev->n0));
  for (int k = 0; k < 4; ++k) cands.push_back(p.normal_part(basis(k)));
  const auto w = pick(cands, -1.0, prev != nullptr);
  if (!w) throw Error(ErrorCode::NullNormalDirection, "normal plane has no timelike direction at node " + node(i, j));
  Vec22 n0 = *w * (1.0 / std::sqrt(-scalar(*w, *w)));

  cands.clear();
  auto orth = [&](const Vec22& z) { return z + n0 * scalar(z, n0); };
  if (prev) cands.push_back(orth(p.normal_part(prev->n1)));
  for (int k = 0; k < 4; ++k) cands.push_back(orth(p.normal_part(basis(k))));
  const auto z = pick(cands, 1.0, prev != nullptr);
  if (!z) throw Error(ErrorCode::NullNormalDirection, "normal plane has no spacelike direction at node " + node(i, j));
  Vec22 n1 = *z * (1.0 / std::sqrt(scalar(*z, *z)));

  if (prev) {
    if (scalar(n0, prev->n0) > 0.0) n0 = -n0;
    if (scalar(n1, prev->n1) < 0.0) n1 = -n1;
  } else {
    n0 = canonical_sign(n0);
    n1 = canonical_sign(n1);
  }
  return {n0, n1};
}

template <class Fn>
void for_interior(const GridSpec& g, Fn&& fn) {
  const int m = interior_margin(g);
  for (int i = m; i < g.ns - m; ++i)
    for (int j = m; j < g.nt - m; ++j) fn(i, j);
}

}  // namespace

Jets jets(const Immersion22& F) {
  const GridSpec& g = F.spec();
  g.validate();
  Jets J{VecField(g), VecField(g), VecField(g), VecField(g), VecField(g)};
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      J.Fs(i, j) = diff_s(F.points, i, j);
      J.Ft(i, j) = diff_t(F.points, i, j);
      J.Fss(i, j) = second_diff_s(F.points, i, j);
      J.Ftt(i, j) = second_diff_t(F.points, i, j);
    }
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) J.Fst(i, j) = diff_t(J.Fs, i, j);
  return J;
}

FirstForm first_form(const Immersion22& F) {
  const Jets J = jets(F);
  const GridSpec& g = F.spec();
  FirstForm r{ScalarField(g), ScalarField(g), ScalarField(g), ScalarField(g), ScalarField(g), ScalarField(g)};
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double a = scalar(J.Fs.values[k], J.Fs.values[k]);
    const double b = scalar(J.Fs.values[k], J.Ft.values[k]);
    const double c = scalar(J.Ft.values[k], J.Ft.values[k]);
    r.a.values[k] = a;
    r.b.values[k] = b;
    r.c.values[k] = c;
    r.E.values[k] = a + 2.0 * b + c;
    r.F.values[k] = a - c;
    r.G.values[k] = a - 2.0 * b + c;
  }
  return r;
}

NormalFrame normal_frame(const Immersion22& F) {
  const Jets J = jets(F);
  const GridSpec& g = F.spec();
  NormalFrame out{VecField(g), VecField(g)};
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      std::optional<Normals> prev;
      if (j > 0) prev = Normals{out.n0(i, j - 1), out.n1(i, j - 1)};
      else if (i > 0) prev = Normals{out.n0(i - 1, 0), out.n1(i - 1, 0)};
      const Normals n = normals_at(plane_at(J, i, j), prev ? &*prev : nullptr, i, j);
      out.n0(i, j) = n.n0;
      out.n1(i, j) = n.n1;
    }
  return out;
}

FundamentalForms fundamental_forms(const Immersion22& F) {
  const Jets J = jets(F);
  const GridSpec& g = F.spec();
  FundamentalForms r{first_form(F), normal_frame(F), {}, {}, {}};
  for (std::size_t k = 0; k < 2; ++k) {
    r.e[k] = ScalarField(g);
    r.f[k] = ScalarField(g);
    r.g[k] = ScalarField(g);
    const VecField& n = k == 0 ? r.normals.n0 : r.normals.n1;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      const double ss = scalar(J.Fss.values[idx], n.values[idx]);
      const double st = scalar(J.Fst.values[idx], n.values[idx]);
      const double tt = scalar(J.Ftt.values[idx], n.values[idx]);
      r.e[k].values[idx] = ss + 2.0 * st + tt;
      r.f[k].values[idx] = ss - tt;
      r.g[k].values[idx] = ss - 2.0 * st + tt;
    }
  }
  return r;
}

VecField mean_curvature_vector(const Immersion22& F) {
  const Jets J = jets(F);
  const GridSpec& g = F.spec();
  VecField H(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Plane p = plane_at(J, i, j);
      const double inv_ss = p.gtt / p.det, inv_st = -p.gst / p.det, inv_tt = p.gss / p.det;
      H(i, j) = (p.normal_part(J.Fss(i, j)) * inv_ss + p.normal_part(J.Fst(i, j)) * (2.0 * inv_st) +
                 p.normal_part(J.Ftt(i, j)) * inv_tt) *
                0.5;
    }
  return H;
}

ScalarField gauss_curvature(const Immersion22& F) {
  const Jets J = jets(F);
  const GridSpec& g = F.spec();
  ScalarField K(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Vec22 &Fs = J.Fs(i, j), &Ft = J.Ft(i, j), &Fss = J.Fss(i, j), &Fst = J.Fst(i, j), &Ftt = J.Ftt(i, j);
      const double a = scalar(Fs, Fs), b = scalar(Fs, Ft), c = scalar(Ft, Ft);
      const double det = a * c - b * b;
      if (degenerate(det, a, b, c))
        throw Error(ErrorCode::DegenerateMetric, "first fundamental form is singular at node " + node(i, j));
      const double a_s = 2.0 * scalar(Fss, Fs), a_t = 2.0 * scalar(Fst, Fs);
      const double b_s = scalar(Fss, Ft) + scalar(Fs, Fst), b_t = scalar(Fst, Ft) + scalar(Fs, Ftt);
      const double c_s = 2.0 * scalar(Fst, Ft), c_t = 2.0 * scalar(Ftt, Ft);
      // -1/2 a_tt + b_st - 1/2 c_ss expressed through second derivatives of F.
      const double x = scalar(Fss, Ftt) - scalar(Fst, Fst);

      const double m1 = x * (a * c - b * b) - 0.5 * a_s * ((b_t - 0.5 * c_s) * c - b * 0.5 * c_t) +
                        (b_s - 0.5 * a_t) * ((b_t - 0.5 * c_s) * b - a * 0.5 * c_t);
      const double m2 = -0.5 * a_t * (0.5 * a_t * c - b * 0.5 * c_s) + 0.5 * c_s * (0.5 * a_t * b - a * 0.5 * c_s);
      K(i, j) = (m1 - m2) / (det * det);
    }
  return K;
}

double conformality_defect(const Immersion22& F) {
  const FirstForm f = first_form(F);
  double d = 0.0;
  for_interior(F.spec(), [&](int i, int j) {
    d = std::max({d, std::fabs(f.E(i, j) + f.G(i, j)), std::fabs(f.F(i, j))});
  });
  return d;
}

double null_coordinate_defect(const Immersion22& F) {
  const FirstForm f = first_form(F);
  double d = 0.0;
  for_interior(F.spec(), [&](int i, int j) { d = std::max({d, std::fabs(f.a(i, j)), std::fabs(f.c(i, j))}); });
  return d;
}

double frame_orthonormality_defect(const Immersion22& F) {
  const FirstForm f = first_form(F);
  const NormalFrame n = normal_frame(F);
  const Jets J = jets(F);
  double d = 0.0;
  constexpr double target[4] = {-1.0, 1.0, -1.0, 1.0};
  for_interior(F.spec(), [&](int i, int j) {
    const double l = std::sqrt(std::fabs(f.E(i, j)));
    const Vec22 v[4] = {n.n0(i, j), n.n1(i, j), (J.Fs(i, j) + J.Ft(i, j)) * (1.0 / l),
                        (J.Fs(i, j) - J.Ft(i, j)) * (1.0 / l)};
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const double want = p == q ? target[p] : 0.0;
        d = std::max(d, std::fabs(scalar(v[p], v[q]) - want));
      }
  });
  return d;
}

FieldStats interior_stats(const ScalarField& f) {
  FieldStats s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0.0, 0.0};
  double sum = 0.0;
  std::size_t n = 0;
  for_interior(f.spec, [&](int i, int j) {
    const double x = f(i, j);
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
    s.max_abs = std::max(s.max_abs, std::fabs(x));
    sum += x;
    ++n;
  });
  s.mean = n ? sum / static_cast<double>(n) : 0.0;
  return s;
}

double interior_max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double d = 0.0;
  for_interior(a.spec, [&](int i, int j) { d = std::max(d, std::fabs(a(i, j) - b(i, j))); });
  return d;
}

CurvatureReport curvature_report(const Immersion22& F) {
  CurvatureReport r;
  r.mean_vector = mean_curvature_vector(F);
  r.H_sqnorm = ScalarField(F.spec());
  for (std::size_t k = 0; k < r.H_sqnorm.values.size(); ++k)
    r.H_sqnorm.values[k] = scalar(r.mean_vector.values[k], r.mean_vector.values[k]);
  r.gauss_K = gauss_curvature(F);
  r.conformal_defect = conformality_defect(F);
  r.null_defect = null_coordinate_defect(F);
  r.H_stats = interior_stats(r.H_sqnorm);
  r.K_stats = interior_stats(r.gauss_K);
  for_interior(F.spec(), [&](int i, int j) {
    r.mean_vector_max = std::max(r.mean_vector_max, std::sqrt(euclid2(r.mean_vector(i, j))));
  });
  return r;
}

}  // namespace lsurf
