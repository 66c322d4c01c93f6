#include "lsurf/lorentz.hpp"

#include <cmath>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

std::optional<LorentzNum> try_inverse(const LorentzNum& a) {
  const double n = sqnorm(a);
  if (n == 0.0) return std::nullopt;
  return hat(a) / n;
}

LorentzNum inverse(const LorentzNum& a) {
  if (auto r = try_inverse(a)) return *r;
  throw Error(ErrorCode::NullDivisor,
              "element " + std::to_string(a.u) + " + sigma*" + std::to_string(a.v) +
                  " lies on the null cone");
}

LorentzNum operator/(const LorentzNum& a, const LorentzNum& b) { return a * inverse(b); }

Hyperbolic hyperbolic(const LorentzNum& a) {
  return {apply_split(a, [](double x) { return std::cosh(x); }),
          apply_split(a, [](double x) { return std::sinh(x); })};
}

LorentzNum pow(const LorentzNum& a, int n) {
  if (n < 0) return pow(inverse(a), -n);
  LorentzNum result{1.0};
  LorentzNum base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

}  // namespace lsurf
