#pragma once

#include <cmath>
#include <optional>

namespace lsurf {

/// Split-complex (Lorentz) number u + sigma*v with sigma^2 = 1.
struct LorentzNum {
  double u = 0.0;
  double v = 0.0;

  constexpr LorentzNum() = default;
  constexpr LorentzNum(double re) : u(re) {}  // NOLINT: real numbers embed in A
  constexpr LorentzNum(double re, double im) : u(re), v(im) {}

  constexpr LorentzNum& operator+=(const LorentzNum& o) {
    u += o.u;
    v += o.v;
    return *this;
  }
  constexpr LorentzNum& operator-=(const LorentzNum& o) {
    u -= o.u;
    v -= o.v;
    return *this;
  }
  constexpr LorentzNum& operator*=(double k) {
    u *= k;
    v *= k;
    return *this;
  }
  constexpr LorentzNum& operator/=(double k) {
    u /= k;
    v /= k;
    return *this;
  }

  friend constexpr bool operator==(const LorentzNum&, const LorentzNum&) = default;
};

inline constexpr LorentzNum kSigma{0.0, 1.0};
/// Orthogonal idempotents (1 +- sigma)/2.
inline constexpr LorentzNum kEPlus{0.5, 0.5};
inline constexpr LorentzNum kEMinus{0.5, -0.5};

constexpr LorentzNum operator+(LorentzNum a, const LorentzNum& b) { return a += b; }
constexpr LorentzNum operator-(LorentzNum a, const LorentzNum& b) { return a -= b; }
constexpr LorentzNum operator-(const LorentzNum& a) { return {-a.u, -a.v}; }
constexpr LorentzNum operator*(LorentzNum a, double k) { return a *= k; }
constexpr LorentzNum operator*(double k, LorentzNum a) { return a *= k; }
constexpr LorentzNum operator/(LorentzNum a, double k) { return a /= k; }

constexpr LorentzNum operator*(const LorentzNum& a, const LorentzNum& b) {
  return {a.u * b.u + a.v * b.v, a.u * b.v + a.v * b.u};
}

constexpr LorentzNum mul(const LorentzNum& a, const LorentzNum& b) { return a * b; }

constexpr LorentzNum hat(const LorentzNum& a) { return {a.u, -a.v}; }

/// a * hat(a) = u^2 - v^2; indefinite, zero on the null cone.
constexpr double sqnorm(const LorentzNum& a) { return a.u * a.u - a.v * a.v; }

constexpr double re(const LorentzNum& a) { return a.u; }
constexpr double im(const LorentzNum& a) { return a.v; }

/// Coefficients in the idempotent basis: a = plus*e+ + minus*e-.
struct SplitRep {
  double plus = 0.0;
  double minus = 0.0;

  friend constexpr bool operator==(const SplitRep&, const SplitRep&) = default;
};

constexpr SplitRep to_split(const LorentzNum& a) { return {a.u + a.v, a.u - a.v}; }
constexpr LorentzNum from_split(const SplitRep& s) {
  return {0.5 * (s.plus + s.minus), 0.5 * (s.plus - s.minus)};
}
constexpr LorentzNum from_split(double plus, double minus) { return from_split(SplitRep{plus, minus}); }

/// Largest absolute split component; the sup-norm used for all residuals.
inline double split_abs(const LorentzNum& a) {
  const SplitRep s = to_split(a);
  return std::fmax(std::fabs(s.plus), std::fabs(s.minus));
}

/// Empty when a lies on the null cone (|u| == |v|).
std::optional<LorentzNum> try_inverse(const LorentzNum& a);

/// Throws Error(NullDivisor) on the null cone.
LorentzNum inverse(const LorentzNum& a);

LorentzNum operator/(const LorentzNum& a, const LorentzNum& b);

struct Hyperbolic {
  LorentzNum cosh;
  LorentzNum sinh;
};

/// A-valued cosh/sinh, evaluated componentwise in the split representation.
Hyperbolic hyperbolic(const LorentzNum& a);

/// Applies a real function to each split component.
template <class Fn>
LorentzNum apply_split(const LorentzNum& a, Fn&& fn) {
  const SplitRep s = to_split(a);
  return from_split(fn(s.plus), fn(s.minus));
}

LorentzNum pow(const LorentzNum& a, int n);

}  // namespace lsurf
