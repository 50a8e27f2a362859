#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace halving {

using Coord = std::int64_t;
using VertexId = std::uint32_t;

/// Default half-width of the coordinate box used by generators. Predicates on
/// points inside it run entirely in 64-bit arithmetic.
inline constexpr Coord kDefaultCoordinateCap = 1'000'000;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

/// Ordered point sequence; a point's id is its index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](VertexId id) const { return points_[id]; }
  std::span<const Point> points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

enum class Orientation : int { CW = -1, COLLINEAR = 0, CCW = 1 };

inline Orientation operator-(Orientation o) { return static_cast<Orientation>(-static_cast<int>(o)); }

namespace detail {

inline constexpr Coord kInt64PathLimit = (Coord{1} << 30) - 1;
inline constexpr Coord kInt128PathLimit = Coord{1} << 62;

inline Coord magnitude(const Point& p) {
  // |INT64_MIN| is not representable; any such point takes the slow path anyway.
  auto abs_or_max = [](Coord v) { return v == INT64_MIN ? INT64_MAX : (v < 0 ? -v : v); };
  return std::max(abs_or_max(p.x), abs_or_max(p.y));
}

template <class T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

inline int det_sign_int64(const Point& p, const Point& q, const Point& r) {
  const Coord v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign_of(v);
}

inline int det_sign_int128(const Point& p, const Point& q, const Point& r) {
  using wide = __int128;
  const wide v = wide(q.x - p.x) * wide(r.y - p.y) - wide(q.y - p.y) * wide(r.x - p.x);
  return sign_of(v);
}

inline int det_sign_bigint(const Point& p, const Point& q, const Point& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int v = (cpp_int(q.x) - p.x) * (cpp_int(r.y) - p.y) - (cpp_int(q.y) - p.y) * (cpp_int(r.x) - p.x);
  return v.sign();
}

}  // namespace detail

/// Sign of det(q - p, r - p). Exact for every int64 input: the 64-bit path
/// covers |coord| < 2^30, __int128 covers |coord| <= 2^62, and anything wider
/// falls back to arbitrary precision.
inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Coord mag = std::max({detail::magnitude(p), detail::magnitude(q), detail::magnitude(r)});
  int s;
  if (mag <= detail::kInt64PathLimit) {
    s = detail::det_sign_int64(p, q, r);
  } else if (mag <= detail::kInt128PathLimit) {
    s = detail::det_sign_int128(p, q, r);
  } else {
    s = detail::det_sign_bigint(p, q, r);
  }
  return static_cast<Orientation>(s);
}

inline int orientation_sign(const Point& p, const Point& q, const Point& r) {
  return static_cast<int>(orientation(p, q, r));
}

/// True iff the open segments ab and cd meet in exactly one point. Segments
/// sharing an endpoint never cross.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const int o1 = orientation_sign(a, b, c);
  const int o2 = orientation_sign(a, b, d);
  const int o3 = orientation_sign(c, d, a);
  const int o4 = orientation_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

struct GeneralPositionViolation {
  enum class Kind { duplicate, collinear };
  Kind kind = Kind::duplicate;
  // Ascending ids; ids[2] is unused for duplicates.
  VertexId ids[3] = {0, 0, 0};

  friend bool operator==(const GeneralPositionViolation& a, const GeneralPositionViolation& b) {
    return a.kind == b.kind && std::equal(std::begin(a.ids), std::end(a.ids), std::begin(b.ids));
  }
};

inline std::ostream& operator<<(std::ostream& os, const GeneralPositionViolation& v) {
  if (v.kind == GeneralPositionViolation::Kind::duplicate) {
    return os << "duplicate " << v.ids[0] << ',' << v.ids[1];
  }
  return os << "collinear " << v.ids[0] << ',' << v.ids[1] << ',' << v.ids[2];
}

namespace detail {

/// Strict weak order on the directions from `pivot`, taken modulo pi. Each
/// direction is folded into the half-turn [0, pi) before comparing.
struct ProjectiveDirectionLess {
  const Point* pivot;

  bool upper(const Point& a) const { return a.y > pivot->y || (a.y == pivot->y && a.x > pivot->x); }

  bool operator()(const Point& a, const Point& b) const {
    const int fold = (upper(a) ? 1 : -1) * (upper(b) ? 1 : -1);
    return fold * orientation_sign(*pivot, a, b) > 0;
  }
};

}  // namespace detail

/// Reports the lexicographically first duplicate pair, or failing that the
/// lexicographically first collinear triple. O(n^2 log n).
inline std::optional<GeneralPositionViolation> check_general_position(const PointSet& ps) {
  const auto n = static_cast<VertexId>(ps.size());
  {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return ps[a] < ps[b]; });
    std::optional<GeneralPositionViolation> best;
    for (std::size_t k = 0; k < order.size();) {
      std::size_t end = k + 1;
      while (end < order.size() && ps[order[end]] == ps[order[k]]) ++end;
      if (end - k >= 2) {
        // stable sort keeps ids ascending within an equal run
        GeneralPositionViolation v{GeneralPositionViolation::Kind::duplicate, {order[k], order[k + 1], 0}};
        if (!best || std::pair(v.ids[0], v.ids[1]) < std::pair(best->ids[0], best->ids[1])) best = v;
      }
      k = end;
    }
    if (best) return best;
  }

  std::vector<VertexId> others;
  for (VertexId i = 0; i < n; ++i) {
    others.clear();
    for (VertexId j = i + 1; j < n; ++j) others.push_back(j);
    const detail::ProjectiveDirectionLess less{&ps[i]};
    std::sort(others.begin(), others.end(), [&](VertexId a, VertexId b) {
      if (less(ps[a], ps[b])) return true;
      if (less(ps[b], ps[a])) return false;
      return a < b;
    });
    std::optional<std::pair<VertexId, VertexId>> first;
    for (std::size_t k = 0; k + 1 < others.size(); ++k) {
      if (orientation_sign(ps[i], ps[others[k]], ps[others[k + 1]]) != 0) continue;
      const std::pair cand(others[k], others[k + 1]);
      if (!first || cand < *first) first = cand;
    }
    if (first) {
      return GeneralPositionViolation{GeneralPositionViolation::Kind::collinear, {i, first->first, first->second}};
    }
  }
  return std::nullopt;
}

}  // namespace halving
