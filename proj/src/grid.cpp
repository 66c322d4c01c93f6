#include "lsurf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

double GridSpec::h() const { return std::max(std::fabs(hs()), std::fabs(ht())); }

void GridSpec::validate() const {
  if (ns < 3 || nt < 3)
    throw Error(ErrorCode::GridTooSmall,
                "grid needs at least 3 samples per axis, got " + std::to_string(ns) + "x" + std::to_string(nt));
  if (!(s1 > s0) || !(t1 > t0) || !std::isfinite(s0) || !std::isfinite(s1) || !std::isfinite(t0) ||
      !std::isfinite(t1))
    throw Error(ErrorCode::InvalidArgument, "grid rectangle must satisfy s0 < s1 and t0 < t1");
}

GridSpec GridSpec::refined(int levels) const {
  GridSpec out = *this;
  for (int k = 0; k < levels; ++k) {
    out.ns = 2 * (out.ns - 1) + 1;
    out.nt = 2 * (out.nt - 1) + 1;
  }
  return out;
}

int interior_margin(const GridSpec& spec) {
  const int smallest = std::min(spec.ns, spec.nt);
  return std::clamp((smallest - 1) / 2, 0, 2);
}

}  // namespace lsurf
