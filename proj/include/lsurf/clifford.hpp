#pragma once

#include <array>
#include <cstddef>

#include "lsurf/lorentz.hpp"

namespace lsurf {

/// Point or vector of R^{2,2} with metric -dx0^2 + dx1^2 - dx2^2 + dx3^2.
struct Vec22 {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  double& operator[](std::size_t k) { return k == 0 ? x0 : k == 1 ? x1 : k == 2 ? x2 : x3; }
  double operator[](std::size_t k) const { return k == 0 ? x0 : k == 1 ? x1 : k == 2 ? x2 : x3; }

  Vec22& operator+=(const Vec22& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  Vec22& operator-=(const Vec22& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  Vec22& operator*=(double k) {
    x0 *= k;
    x1 *= k;
    x2 *= k;
    x3 *= k;
    return *this;
  }

  friend bool operator==(const Vec22&, const Vec22&) = default;
};

inline Vec22 operator+(Vec22 a, const Vec22& b) { return a += b; }
inline Vec22 operator-(Vec22 a, const Vec22& b) { return a -= b; }
inline Vec22 operator-(const Vec22& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
inline Vec22 operator*(Vec22 a, double k) { return a *= k; }
inline Vec22 operator*(double k, Vec22 a) { return a *= k; }

/// The (2,2) scalar product.
inline double scalar(const Vec22& a, const Vec22& b) {
  return -a.x0 * b.x0 + a.x1 * b.x1 - a.x2 * b.x2 + a.x3 * b.x3;
}

/// Even part: coefficients over the basis (1, iI, J, iK).
struct H0Elem {
  std::array<LorentzNum, 4> p{};
  friend bool operator==(const H0Elem&, const H0Elem&) = default;
};

/// Odd part: coefficients over the basis (i1, I, iJ, K).
struct H1Elem {
  std::array<LorentzNum, 4> q{};
  friend bool operator==(const H1Elem&, const H1Elem&) = default;
};

H0Elem operator+(const H0Elem& a, const H0Elem& b);
H0Elem operator-(const H0Elem& a, const H0Elem& b);
H0Elem operator-(const H0Elem& a);
H0Elem operator*(const LorentzNum& k, const H0Elem& a);
H1Elem operator+(const H1Elem& a, const H1Elem& b);
H1Elem operator-(const H1Elem& a, const H1Elem& b);
H1Elem operator*(const LorentzNum& k, const H1Elem& a);

H0Elem operator*(const H0Elem& a, const H0Elem& b);
H1Elem operator*(const H0Elem& a, const H1Elem& b);
H1Elem operator*(const H1Elem& a, const H0Elem& b);
H0Elem operator*(const H1Elem& a, const H1Elem& b);

/// Quaternionic conjugation (I, J, K -> -I, -J, -K); leaves i and A alone.
H0Elem conj(const H0Elem& a);
H1Elem conj(const H1Elem& a);
/// hat applied to every A-coefficient.
H0Elem hat(const H0Elem& a);
H1Elem hat(const H1Elem& a);

/// Unit of the even algebra and the basis elements by index.
H0Elem h0_basis(int k);
H1Elem h1_basis(int k);

/// Multiplication tables of the fixed bases, generated from the quaternion
/// and i relations. Entry [j][k] describes basis_j * basis_k = sign * basis_index.
struct BasisProduct {
  int sign;
  int index;
};
using BasisTable = std::array<std::array<BasisProduct, 4>, 4>;
const BasisTable& table_h0_h0();
const BasisTable& table_h0_h1();
const BasisTable& table_h1_h0();
const BasisTable& table_h1_h1();

/// Clifford map x -> sigma*i*x0*1 + x1*I + i*x2*J + x3*K.
H1Elem gamma(const Vec22& x);

/// Diagonal blocks (gamma(x) hat(gamma(x)), hat(gamma(x)) gamma(x)) of the
/// square of the odd block matrix ((0, gamma), (hat gamma, 0)).
struct CliffordSquare {
  H0Elem upper;
  H0Elem lower;
};
CliffordSquare clifford_square(const Vec22& x);

/// Reads x back from an element of the form -hat(conj(q)) = q.
Vec22 vec_of(const H1Elem& q);

/// H(p, p') = p0p0' - p1p1' + p2p2' - p3p3' on the even part.
LorentzNum bilinear_H(const H0Elem& a, const H0Elem& b);
/// H(q, q') = -q0q0' + q1q1' - q2q2' + q3q3' on the odd part.
LorentzNum bilinear_H(const H1Elem& a, const H1Elem& b);

/// Real 4x4 matrix acting on Vec22 coordinates; m[row][col].
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  static Mat4 identity();
  Vec22 operator*(const Vec22& x) const;
  Mat4 operator*(const Mat4& o) const;
};

double max_abs_diff(const Mat4& a, const Mat4& b);

/// Double cover Spin(2,2) -> SO(2,2): x -> p gamma(x) hat(conj(p)).
/// Throws NotUnitSpinor unless H(p, p) = 1 within `tol`.
Mat4 spin_to_so(const H0Elem& p, double tol = 1e-10);

/// Real 2x2 matrix ((a, b), (c, d)).
struct Mat2R {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }
  Mat2R transpose() const { return {a, c, b, d}; }
  friend bool operator==(const Mat2R&, const Mat2R&) = default;
};

Mat2R operator*(const Mat2R& x, const Mat2R& y);
Mat2R operator+(const Mat2R& x, const Mat2R& y);
Mat2R operator*(double k, const Mat2R& x);
double max_abs_diff(const Mat2R& x, const Mat2R& y);

/// 2x2 matrix over A.
struct Mat2A {
  LorentzNum a{1.0}, b{}, c{}, d{1.0};

  static Mat2A identity() { return {}; }
  static Mat2A zero() { return {LorentzNum{}, LorentzNum{}, LorentzNum{}, LorentzNum{}}; }

  LorentzNum det() const { return a * d - b * c; }
  /// Conjugate transpose with hat on the entries.
  Mat2A star() const { return {hat(a), hat(c), hat(b), hat(d)}; }
  friend bool operator==(const Mat2A&, const Mat2A&) = default;
};

Mat2A operator*(const Mat2A& x, const Mat2A& y);
Mat2A operator+(const Mat2A& x, const Mat2A& y);
Mat2A operator-(const Mat2A& x, const Mat2A& y);
Mat2A operator*(const LorentzNum& k, const Mat2A& x);
Mat2A operator*(const Mat2A& x, double k);
double max_abs_diff(const Mat2A& x, const Mat2A& y);

/// Throws NullDivisor when det(m) lies on the null cone.
Mat2A inverse(const Mat2A& m);

bool is_hermitian(const Mat2A& m, double tol = 1e-12);

/// M = e+ M_plus + e- M_minus with real 2x2 parts.
struct Mat2Split {
  Mat2R plus;
  Mat2R minus;
};
Mat2Split to_split(const Mat2A& m);
Mat2A from_split(const Mat2R& plus, const Mat2R& minus);

/// Even-part isomorphism onto M_2(A).
Mat2A A0(const H0Elem& p);
/// Odd-part linear isomorphism onto M_2(A).
Mat2A A1(const H1Elem& q);

/// R^{2,2} -> Herm_2(A), with det(vec_to_herm(x)) = -<x, x>.
Mat2A vec_to_herm(const Vec22& x);
/// Inverse of vec_to_herm; throws NotHermitian.
Vec22 herm_to_vec(const Mat2A& m, double tol = 1e-9);

/// Herm_2(A) matrices are e+ C + e- C^t; these convert to and from C.
Mat2R herm_to_real(const Mat2A& m, double tol = 1e-9);
Mat2A real_to_herm(const Mat2R& c);

}  // namespace lsurf
