#include "lsurf/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

// Quaternion units 1, I, J, K as indices 0..3.
constexpr BasisProduct kQuat[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

// Power of the complex unit i carried by each basis element.
constexpr int kEvenIPow[4] = {0, 1, 0, 1};  // 1, iI, J, iK
constexpr int kOddIPow[4] = {1, 0, 1, 0};   // i1, I, iJ, K

constexpr BasisTable make_table(const int (&lhs)[4], const int (&rhs)[4], const int (&out)[4]) {
  BasisTable t{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const BasisProduct q = kQuat[j][k];
      int ipow = lhs[j] + rhs[k];
      int sign = q.sign;
      if (ipow == 2) {
        sign = -sign;
        ipow = 0;
      }
      // Each quaternion unit appears once per basis; the i-power must agree.
      if (ipow != out[q.index]) throw "basis product leaves the target space";
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = {sign, q.index};
    }
  return t;
}

constexpr BasisTable kH0H0 = make_table(kEvenIPow, kEvenIPow, kEvenIPow);
constexpr BasisTable kH0H1 = make_table(kEvenIPow, kOddIPow, kOddIPow);
constexpr BasisTable kH1H0 = make_table(kOddIPow, kEvenIPow, kOddIPow);
constexpr BasisTable kH1H1 = make_table(kOddIPow, kOddIPow, kEvenIPow);

static_assert(kH0H0[1][1].sign == 1 && kH0H0[1][1].index == 0, "(iI)^2 = 1");
static_assert(kH0H0[2][2].sign == -1 && kH0H0[2][2].index == 0, "J^2 = -1");
static_assert(kH0H0[1][2].sign == 1 && kH0H0[1][2].index == 3, "(iI)J = iK");
static_assert(kH1H1[0][0].sign == -1 && kH1H1[0][0].index == 0, "(i1)^2 = -1");

template <class Out, class L, class R>
Out multiply(const BasisTable& t, const L& a, const R& b) {
  Out r{};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) {
      const BasisProduct e = t[j][k];
      r[static_cast<std::size_t>(e.index)] += (a[j] * b[k]) * static_cast<double>(e.sign);
    }
  return r;
}

using Coeffs = std::array<LorentzNum, 4>;

}  // namespace

const BasisTable& table_h0_h0() { return kH0H0; }
const BasisTable& table_h0_h1() { return kH0H1; }
const BasisTable& table_h1_h0() { return kH1H0; }
const BasisTable& table_h1_h1() { return kH1H1; }

H0Elem operator+(const H0Elem& a, const H0Elem& b) {
  H0Elem r;
  for (std::size_t k = 0; k < 4; ++k) r.p[k] = a.p[k] + b.p[k];
  return r;
}
H0Elem operator-(const H0Elem& a, const H0Elem& b) {
  H0Elem r;
  for (std::size_t k = 0; k < 4; ++k) r.p[k] = a.p[k] - b.p[k];
  return r;
}
H0Elem operator-(const H0Elem& a) {
  H0Elem r;
  for (std::size_t k = 0; k < 4; ++k) r.p[k] = -a.p[k];
  return r;
}
H0Elem operator*(const LorentzNum& k, const H0Elem& a) {
  H0Elem r;
  for (std::size_t j = 0; j < 4; ++j) r.p[j] = k * a.p[j];
  return r;
}
H1Elem operator+(const H1Elem& a, const H1Elem& b) {
  H1Elem r;
  for (std::size_t k = 0; k < 4; ++k) r.q[k] = a.q[k] + b.q[k];
  return r;
}
H1Elem operator-(const H1Elem& a, const H1Elem& b) {
  H1Elem r;
  for (std::size_t k = 0; k < 4; ++k) r.q[k] = a.q[k] - b.q[k];
  return r;
}
H1Elem operator*(const LorentzNum& k, const H1Elem& a) {
  H1Elem r;
  for (std::size_t j = 0; j < 4; ++j) r.q[j] = k * a.q[j];
  return r;
}

H0Elem operator*(const H0Elem& a, const H0Elem& b) { return {multiply<Coeffs>(kH0H0, a.p, b.p)}; }
H1Elem operator*(const H0Elem& a, const H1Elem& b) { return {multiply<Coeffs>(kH0H1, a.p, b.q)}; }
H1Elem operator*(const H1Elem& a, const H0Elem& b) { return {multiply<Coeffs>(kH1H0, a.q, b.p)}; }
H0Elem operator*(const H1Elem& a, const H1Elem& b) { return {multiply<Coeffs>(kH1H1, a.q, b.q)}; }

H0Elem conj(const H0Elem& a) { return {{a.p[0], -a.p[1], -a.p[2], -a.p[3]}}; }
H1Elem conj(const H1Elem& a) { return {{a.q[0], -a.q[1], -a.q[2], -a.q[3]}}; }
H0Elem hat(const H0Elem& a) { return {{hat(a.p[0]), hat(a.p[1]), hat(a.p[2]), hat(a.p[3])}}; }
H1Elem hat(const H1Elem& a) { return {{hat(a.q[0]), hat(a.q[1]), hat(a.q[2]), hat(a.q[3])}}; }

H0Elem h0_basis(int k) {
  H0Elem e;
  e.p[static_cast<std::size_t>(k)] = LorentzNum{1.0};
  return e;
}

H1Elem h1_basis(int k) {
  H1Elem e;
  e.q[static_cast<std::size_t>(k)] = LorentzNum{1.0};
  return e;
}

H1Elem gamma(const Vec22& x) { return {{LorentzNum{0.0, x.x0}, LorentzNum{x.x1}, LorentzNum{x.x2}, LorentzNum{x.x3}}}; }

CliffordSquare clifford_square(const Vec22& x) {
  const H1Elem g = gamma(x);
  const H1Elem gh = hat(g);
  return {g * gh, gh * g};
}

Vec22 vec_of(const H1Elem& q) { return {q.q[0].v, q.q[1].u, q.q[2].u, q.q[3].u}; }

LorentzNum bilinear_H(const H0Elem& a, const H0Elem& b) {
  return a.p[0] * b.p[0] - a.p[1] * b.p[1] + a.p[2] * b.p[2] - a.p[3] * b.p[3];
}

LorentzNum bilinear_H(const H1Elem& a, const H1Elem& b) {
  return -(a.q[0] * b.q[0]) + a.q[1] * b.q[1] - a.q[2] * b.q[2] + a.q[3] * b.q[3];
}

Mat4 Mat4::identity() {
  Mat4 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k][k] = 1.0;
  return r;
}

Vec22 Mat4::operator*(const Vec22& x) const {
  Vec22 y;
  for (std::size_t r = 0; r < 4; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < 4; ++c) acc += m[r][c] * x[c];
    y[r] = acc;
  }
  return y;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += m[r][k] * o.m[k][c];
      out.m[r][c] = acc;
    }
  return out;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double e = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) e = std::max(e, std::fabs(a.m[r][c] - b.m[r][c]));
  return e;
}

Mat4 spin_to_so(const H0Elem& p, double tol) {
  const LorentzNum n = bilinear_H(p, p);
  if (std::fabs(n.u - 1.0) > tol || std::fabs(n.v) > tol)
    throw Error(ErrorCode::NotUnitSpinor, "H(p,p) = " + std::to_string(n.u) + " + sigma*" + std::to_string(n.v) +
                                              " is not 1");
  const H0Elem p_inv = hat(conj(p));
  Mat4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    Vec22 e;
    e[k] = 1.0;
    const Vec22 col = vec_of(p * gamma(e) * p_inv);
    for (std::size_t r = 0; r < 4; ++r) out.m[r][k] = col[r];
  }
  return out;
}

Mat2R operator*(const Mat2R& x, const Mat2R& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
Mat2R operator+(const Mat2R& x, const Mat2R& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2R operator*(double k, const Mat2R& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }
double max_abs_diff(const Mat2R& x, const Mat2R& y) {
  return std::max({std::fabs(x.a - y.a), std::fabs(x.b - y.b), std::fabs(x.c - y.c), std::fabs(x.d - y.d)});
}

Mat2A operator*(const Mat2A& x, const Mat2A& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
Mat2A operator+(const Mat2A& x, const Mat2A& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2A operator-(const Mat2A& x, const Mat2A& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2A operator*(const LorentzNum& k, const Mat2A& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }
Mat2A operator*(const Mat2A& x, double k) { return LorentzNum{k} * x; }

Mat2A inverse(const Mat2A& m) {
  const LorentzNum r = inverse(m.det());
  return {r * m.d, -(r * m.b), -(r * m.c), r * m.a};
}

double max_abs_diff(const Mat2A& x, const Mat2A& y) {
  return std::max({split_abs(x.a - y.a), split_abs(x.b - y.b), split_abs(x.c - y.c), split_abs(x.d - y.d)});
}

bool is_hermitian(const Mat2A& m, double tol) { return max_abs_diff(m, m.star()) <= tol; }

Mat2Split to_split(const Mat2A& m) {
  const SplitRep a = to_split(m.a), b = to_split(m.b), c = to_split(m.c), d = to_split(m.d);
  return {{a.plus, b.plus, c.plus, d.plus}, {a.minus, b.minus, c.minus, d.minus}};
}

Mat2A from_split(const Mat2R& plus, const Mat2R& minus) {
  return {from_split(plus.a, minus.a), from_split(plus.b, minus.b), from_split(plus.c, minus.c),
          from_split(plus.d, minus.d)};
}

Mat2A A0(const H0Elem& x) {
  const auto& p = x.p;
  return {p[0] - kSigma * p[1], p[2] - kSigma * p[3], -p[2] - kSigma * p[3], p[0] + kSigma * p[1]};
}

Mat2A A1(const H1Elem& x) {
  const auto& q = x.q;
  return {-q[1] - kSigma * q[0], -q[3] - kSigma * q[2], -q[3] + kSigma * q[2], q[1] - kSigma * q[0]};
}

Mat2A vec_to_herm(const Vec22& x) {
  return {LorentzNum{-x.x0 - x.x1}, LorentzNum{-x.x3, -x.x2}, LorentzNum{-x.x3, x.x2}, LorentzNum{x.x1 - x.x0}};
}

Vec22 herm_to_vec(const Mat2A& m, double tol) {
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian over A");
  return {-0.5 * (m.a.u + m.d.u), 0.5 * (m.d.u - m.a.u), -m.b.v, -m.b.u};
}

Mat2R herm_to_real(const Mat2A& m, double tol) {
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian over A");
  return to_split(m).plus;
}

Mat2A real_to_herm(const Mat2R& c) { return from_split(c, c.transpose()); }

}  // namespace lsurf
