#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "idemsplit/dyadic.hpp"

namespace idemsplit {

// Piecewise-linear homeomorphism of [0,1] with dyadic breakpoints and
// power-of-two slopes, kept in canonical form: breakpoints strictly
// increasing in both coordinates, no interior breakpoint where the slope
// does not change. Canonical form makes functional equality a plain
// structural comparison.
class PLMap {
 public:
  using Breakpoint = std::pair<Dyadic, Dyadic>;

  // The identity map, breakpoints (0,0), (1,1).
  static PLMap identity();

  // The n-th basic map: generator(0) has breakpoints
  // (0,0), (1/2,1/4), (3/4,1/2), (1,1); generator(n) for n >= 1 is the
  // identity on [0, 1-2^-n] and an affine copy of generator(0) squeezed
  // onto [1-2^-n, 1].
  static PLMap generator(std::uint32_t n);

  // Validates (endpoints fixed, strictly monotone, power-of-two slopes),
  // prunes redundant breakpoints. Throws std::invalid_argument.
  static PLMap from_breakpoints(std::vector<Breakpoint> pts);

  const std::vector<Breakpoint>& breakpoints() const { return pts_; }

  bool operator==(const PLMap& rhs) const = default;

 private:
  PLMap() = default;
  std::vector<Breakpoint> pts_;
};

// Exact image of t under m; throws std::domain_error unless 0 <= t <= 1.
Dyadic eval_at(const PLMap& m, const Dyadic& t);

// Exact composite outer . inner (inner applied first).
PLMap compose(const PLMap& outer, const PLMap& inner);

// The inverse homeomorphism; swaps breakpoint coordinates.
PLMap invert_pl(const PLMap& m);

// Functional equality; by canonicity, structural equality of breakpoints.
bool equal_pl(const PLMap& lhs, const PLMap& rhs);

}  // namespace idemsplit
