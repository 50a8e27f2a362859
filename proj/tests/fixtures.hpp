#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <halving/halving.hpp>

namespace fixtures {

using halving::Point;
using halving::PointSet;

inline PointSet convex_quad() { return PointSet({{0, 0}, {10, 0}, {10, 10}, {0, 10}}); }

// Ids 0..2 are the triangle, 3 is the interior point.
inline PointSet triangle_with_center() { return PointSet({{0, 0}, {10, 0}, {5, 10}, {5, 4}}); }

inline PointSet two_points() { return PointSet({{0, 0}, {1, 1}}); }

inline halving::PointSet random_set(std::size_t n, std::uint64_t seed) {
  halving::GeneratorSpec spec;
  spec.n = n;
  spec.seed = seed;
  return halving::generate(spec);
}

inline halving::PointSet convex_set(std::size_t n, std::uint64_t seed) {
  halving::GeneratorSpec spec;
  spec.kind = halving::GeneratorKind::convex_position;
  spec.n = n;
  spec.seed = seed;
  return halving::generate(spec);
}

/// Hull vertices in counterclockwise order via gift wrapping on exact
/// orientation tests. Independent of the library's monotone-chain check.
inline std::vector<halving::VertexId> gift_wrap_hull(const PointSet& ps) {
  using halving::VertexId;
  const auto n = static_cast<VertexId>(ps.size());
  VertexId start = 0;
  for (VertexId i = 1; i < n; ++i) {
    if (ps[i] < ps[start]) start = i;
  }
  std::vector<VertexId> hull;
  VertexId cur = start;
  do {
    hull.push_back(cur);
    VertexId cand = cur == 0 ? 1 : 0;
    for (VertexId r = 0; r < n; ++r) {
      if (r == cur) continue;
      if (halving::orientation_sign(ps[cur], ps[cand], ps[r]) < 0) cand = r;
    }
    cur = cand;
  } while (cur != start && hull.size() <= n);
  return hull;
}

inline std::set<halving::Edge> hull_edges(const PointSet& ps) {
  const auto hull = gift_wrap_hull(ps);
  std::set<halving::Edge> out;
  for (std::size_t i = 0; i < hull.size(); ++i) out.emplace(hull[i], hull[(i + 1) % hull.size()]);
  return out;
}

inline std::set<halving::Edge> edge_set(const halving::HalvingGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Root of f in [lo, hi] by bisection in 50-digit arithmetic; f(lo), f(hi)
/// must differ in sign.
template <class F>
BigFloat bisect(F f, BigFloat lo, BigFloat hi, int iterations = 400) {
  const bool lo_negative = f(lo) < 0;
  for (int i = 0; i < iterations; ++i) {
    const BigFloat mid = (lo + hi) / 2;
    if ((f(mid) < 0) == lo_negative) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

/// Positive root of the bound cubic, coefficients rebuilt from their rule in
/// 50-digit arithmetic rather than taken from the library.
inline BigFloat bound_root_oracle(std::uint64_t n, bool paper_literal) {
  const BigFloat nn = BigFloat(n) * n;
  const BigFloat b = paper_literal ? BigFloat(2) / nn : BigFloat(1) / (2 * nn);
  const BigFloat d = paper_literal ? -(nn - 3 * BigFloat(n)) / 8 : -(nn - BigFloat(n)) / 8;
  auto f = [&](const BigFloat& m) { return m * m * m / (64 * nn) + b * m * m + d; };
  BigFloat hi = 1;
  while (f(hi) < 0) hi *= 2;
  return bisect(f, BigFloat(0), hi);
}

}  // namespace fixtures
