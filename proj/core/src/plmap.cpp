#include "idemsplit/plmap.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace idemsplit {

namespace {

// Slope of the segment from a to b as a power-of-two exponent, or nullopt
// if the ratio dy/dx is not a power of two. Requires b > a in both
// coordinates.
std::optional<std::int64_t> slope_exponent(const PLMap::Breakpoint& a,
                                           const PLMap::Breakpoint& b) {
  Dyadic dx = b.first - a.first;
  Dyadic dy = b.second - a.second;
  if (dx.signum() <= 0 || dy.signum() <= 0) return std::nullopt;
  // dy/dx = (ny / 2^ey) / (nx / 2^ex) = (oy/ox) * 2^(ty - tx + ex - ey)
  // with n = o * 2^t, o odd. Power of two iff the odd parts agree.
  const BigInt& ny = dy.numerator();
  const BigInt& nx = dx.numerator();
  std::size_t ty = ny.trailing_zero_bits();
  std::size_t tx = nx.trailing_zero_bits();
  if ((ny >> ty) != (nx >> tx)) return std::nullopt;
  return static_cast<std::int64_t>(ty) - static_cast<std::int64_t>(tx) +
         static_cast<std::int64_t>(dx.exponent()) -
         static_cast<std::int64_t>(dy.exponent());
}

bool collinear(const PLMap::Breakpoint& a, const PLMap::Breakpoint& b,
               const PLMap::Breakpoint& c) {
  // slope(a,b) == slope(b,c) by cross multiplication, exact.
  return (b.second - a.second) * (c.first - b.first) ==
         (c.second - b.second) * (b.first - a.first);
}

}  // namespace

PLMap PLMap::identity() {
  PLMap m;
  m.pts_ = {{Dyadic::from_int(0), Dyadic::from_int(0)},
            {Dyadic::from_int(1), Dyadic::from_int(1)}};
  return m;
}

PLMap PLMap::generator(std::uint32_t n) {
  PLMap m;
  if (n == 0) {
    m.pts_ = {{Dyadic::from_int(0), Dyadic::from_int(0)},
              {Dyadic(1, 1), Dyadic(1, 2)},
              {Dyadic(3, 2), Dyadic(1, 1)},
              {Dyadic::from_int(1), Dyadic::from_int(1)}};
    return m;
  }
  auto one_minus = [](std::uint32_t e) {  // 1 - 2^-e as a dyadic
    return Dyadic((BigInt(1) << e) - BigInt(1), e);
  };
  m.pts_ = {{Dyadic::from_int(0), Dyadic::from_int(0)},
            {one_minus(n), one_minus(n)},
            {one_minus(n + 1), one_minus(n) + Dyadic(1, n + 2)},
            {one_minus(n) + Dyadic(3, n + 2), one_minus(n + 1)},
            {Dyadic::from_int(1), Dyadic::from_int(1)}};
  return m;
}

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> pts) {
  if (pts.size() < 2) throw std::invalid_argument("PLMap: need at least two breakpoints");
  const Dyadic zero = Dyadic::from_int(0);
  const Dyadic one = Dyadic::from_int(1);
  if (pts.front().first != zero || pts.front().second != zero ||
      pts.back().first != one || pts.back().second != one) {
    throw std::invalid_argument("PLMap: endpoints must be (0,0) and (1,1)");
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!slope_exponent(pts[i], pts[i + 1]).has_value()) {
      throw std::invalid_argument(
          "PLMap: breakpoints must be strictly increasing with power-of-two slopes");
    }
  }
  // Prune interior points where the slope does not change.
  std::vector<Breakpoint> pruned;
  pruned.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (!collinear(pruned.back(), pts[i], pts[i + 1])) pruned.push_back(pts[i]);
  }
  pruned.push_back(pts.back());
  PLMap m;
  m.pts_ = std::move(pruned);
  return m;
}

Dyadic eval_at(const PLMap& m, const Dyadic& t) {
  const auto& pts = m.breakpoints();
  if (t < pts.front().first || t > pts.back().first) {
    throw std::domain_error("eval_at: argument outside [0,1]");
  }
  // Last breakpoint with input <= t.
  std::size_t lo = 0, hi = pts.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (pts[mid].first <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (t == pts[hi].first) return pts[hi].second;
  auto mexp = slope_exponent(pts[lo], pts[hi]);
  return pts[lo].second + (t - pts[lo].first).times_pow2(*mexp);
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
  // Slope changes of the composite happen where inner changes slope or
  // where inner's value crosses a breakpoint input of outer.
  PLMap inner_inv = invert_pl(inner);
  std::vector<Dyadic> xs;
  for (const auto& bp : inner.breakpoints()) xs.push_back(bp.first);
  for (const auto& bp : outer.breakpoints()) xs.push_back(eval_at(inner_inv, bp.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.emplace_back(x, eval_at(outer, eval_at(inner, x)));
  return PLMap::from_breakpoints(std::move(pts));
}

PLMap invert_pl(const PLMap& m) {
  std::vector<PLMap::Breakpoint> pts;
  pts.reserve(m.breakpoints().size());
  for (const auto& bp : m.breakpoints()) pts.emplace_back(bp.second, bp.first);
  return PLMap::from_breakpoints(std::move(pts));
}

bool equal_pl(const PLMap& lhs, const PLMap& rhs) { return lhs == rhs; }

}  // namespace idemsplit
