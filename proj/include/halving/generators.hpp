#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"
#include "io.hpp"

namespace halving {

enum class GeneratorKind { random_square, convex_position, dense_grid, from_file };

/// Positive rational, used for the density parameter gamma.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "3", "3/2" or "1.25" into an exact positive rational.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw Error(ErrorCode::invalid_argument, "not a positive rational: '" + text + "'"); };
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 15) fail();
    return std::stoll(s);
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    r = {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    r = {(whole.empty() ? 0 : parse_int(whole)) * scale + parse_int(frac), scale};
  } else {
    r = {parse_int(text), 1};
  }
  if (r.num <= 0 || r.den <= 0) fail();
  return r;
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_square;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Coord bbox = kDefaultCoordinateCap;
  Rational gamma{4, 1};
  std::string path;  // from_file only
};

inline std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::random_square: return "random";
    case GeneratorKind::convex_position: return "convex";
    case GeneratorKind::dense_grid: return "dense";
    case GeneratorKind::from_file: return "file";
  }
  return "unknown";
}

/// Deterministic across standard libraries: std::mt19937_64 is fully specified,
/// and bounded draws use plain rejection instead of the implementation-defined
/// std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v % range);
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline void validate(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::from_file) return;
  if (spec.n < 2 || spec.n % 2 != 0) {
    throw Error(ErrorCode::odd_n, "n must be even and >= 2, got " + std::to_string(spec.n));
  }
  if (spec.bbox < static_cast<Coord>(spec.n)) {
    throw Error(ErrorCode::invalid_argument, "bbox must be >= n");
  }
  if (spec.bbox > (Coord{1} << 61)) throw Error(ErrorCode::invalid_argument, "bbox too large");
  if (spec.gamma.num <= 0 || spec.gamma.den <= 0) throw Error(ErrorCode::invalid_argument, "gamma must be positive");
}

inline std::size_t redraw_budget(std::size_t n) { return 100 * n; }

/// Highest id taking part in a violation; redrawing it keeps earlier points stable.
inline VertexId offender(const GeneralPositionViolation& v) {
  return v.kind == GeneralPositionViolation::Kind::duplicate ? v.ids[1] : v.ids[2];
}

/// Ids of points that are not strict vertices of the convex hull.
inline std::vector<VertexId> non_hull_vertices(const PointSet& ps) {
  const auto n = static_cast<VertexId>(ps.size());
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return ps[a] < ps[b]; });
  std::vector<VertexId> hull(2 * n);
  std::size_t k = 0;
  for (VertexId id : order) {
    while (k >= 2 && orientation_sign(ps[hull[k - 2]], ps[hull[k - 1]], ps[id]) <= 0) --k;
    hull[k++] = id;
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    const VertexId id = order[i];
    while (k >= lower && orientation_sign(ps[hull[k - 2]], ps[hull[k - 1]], ps[id]) <= 0) --k;
    hull[k++] = id;
  }
  std::vector<bool> on_hull(n, false);
  for (std::size_t i = 0; i + 1 < k; ++i) on_hull[hull[i]] = true;
  std::vector<VertexId> out;
  for (VertexId i = 0; i < n; ++i) {
    if (!on_hull[i]) out.push_back(i);
  }
  return out;
}

inline PointSet generate_random_square(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Point> pts(spec.n);
  auto draw = [&] { return Point{rng.uniform_int(-spec.bbox, spec.bbox), rng.uniform_int(-spec.bbox, spec.bbox)}; };
  for (auto& p : pts) p = draw();
  for (std::size_t redraws = 0;; ++redraws) {
    const auto violation = check_general_position(PointSet(pts));
    if (!violation) break;
    if (redraws == redraw_budget(spec.n)) {
      throw Error(ErrorCode::rejection_budget_exhausted, "bbox too small for n=" + std::to_string(spec.n));
    }
    pts[offender(*violation)] = draw();
  }
  return PointSet(std::move(pts));
}

inline PointSet generate_convex(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const double radius = static_cast<double>(spec.bbox);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(spec.n);
  std::vector<Point> pts(spec.n);
  auto place = [&](std::size_t i) {
    const double angle = step * (static_cast<double>(i) + 0.5 * rng.unit());
    pts[i] = Point{std::llround(radius * std::cos(angle)), std::llround(radius * std::sin(angle))};
  };
  for (std::size_t i = 0; i < spec.n; ++i) place(i);
  for (std::size_t redraws = 0;;) {
    const auto bad = non_hull_vertices(PointSet(pts));
    if (bad.empty()) break;
    for (VertexId id : bad) {
      if (redraws++ == redraw_budget(spec.n)) {
        throw Error(ErrorCode::rejection_budget_exhausted,
                    "cannot place n=" + std::to_string(spec.n) + " convex points in bbox");
      }
      place(id);
    }
  }
  return PointSet(std::move(pts));
}

inline bool distance_ratio_within(const PointSet& ps, const Rational& gamma) {
  using boost::multiprecision::cpp_int;
  cpp_int dmin = -1, dmax = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const cpp_int dx = cpp_int(ps[j].x) - ps[i].x, dy = cpp_int(ps[j].y) - ps[i].y;
      const cpp_int d2 = dx * dx + dy * dy;
      if (dmin < 0 || d2 < dmin) dmin = d2;
      if (d2 > dmax) dmax = d2;
    }
  }
  if (dmin <= 0) return ps.size() < 2;
  // max/min <= gamma * sqrt(n)  <=>  max^2 * den^2 <= num^2 * n * min^2
  return dmax * gamma.den * gamma.den <= cpp_int(gamma.num) * gamma.num * ps.size() * dmin;
}

inline PointSet generate_dense(const GeneratorSpec& spec) {
  const auto side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(spec.n)) - 1e-9));
  const double target = spec.gamma.to_double() * std::sqrt(static_cast<double>(spec.n));
  // Cells of width `cell`; each point moves at most `jitter` from its cell centre.
  // Pick the largest jitter fraction whose worst-case ratio still meets gamma.
  double fraction = 0.25;
  auto worst_ratio = [&](double f) {
    return (std::sqrt(2.0) * (static_cast<double>(side - 1) + 2.0 * f)) / (1.0 - 2.0 * std::sqrt(2.0) * f);
  };
  while (fraction > 1e-4 && worst_ratio(fraction) > target) fraction /= 2;
  if (worst_ratio(fraction) > target) {
    throw Error(ErrorCode::invalid_argument, "gamma too small for a perturbed grid of n=" + std::to_string(spec.n));
  }
  const std::int64_t cell = std::max<std::int64_t>(1, 2 * spec.bbox / side);
  const auto jitter = static_cast<std::int64_t>(fraction * static_cast<double>(cell));
  if (jitter < 1) throw Error(ErrorCode::invalid_argument, "bbox too small for dense grid");

  Rng rng(spec.seed);
  std::vector<std::int64_t> cells(static_cast<std::size_t>(side * side));
  std::iota(cells.begin(), cells.end(), 0);
  for (std::size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  }
  cells.resize(spec.n);
  std::sort(cells.begin(), cells.end());

  std::vector<Point> pts(spec.n);
  auto place = [&](std::size_t i) {
    const std::int64_t row = cells[i] / side, col = cells[i] % side;
    const std::int64_t cx = -spec.bbox + col * cell + cell / 2, cy = -spec.bbox + row * cell + cell / 2;
    pts[i] = Point{cx + rng.uniform_int(-jitter, jitter), cy + rng.uniform_int(-jitter, jitter)};
  };
  for (std::size_t i = 0; i < spec.n; ++i) place(i);
  for (std::size_t redraws = 0;; ++redraws) {
    const PointSet candidate(pts);
    const auto violation = check_general_position(candidate);
    if (!violation && distance_ratio_within(candidate, spec.gamma)) break;
    if (redraws == redraw_budget(spec.n)) {
      throw Error(ErrorCode::rejection_budget_exhausted, "dense grid did not reach general position");
    }
    place(violation ? offender(*violation) : static_cast<VertexId>(rng.uniform_int(0, spec.n - 1)));
  }
  return PointSet(std::move(pts));
}

}  // namespace detail

/// Builds a point set in general position. Identical specs give identical sets.
inline PointSet generate(const GeneratorSpec& spec) {
  detail::validate(spec);
  switch (spec.kind) {
    case GeneratorKind::random_square: return detail::generate_random_square(spec);
    case GeneratorKind::convex_position: return detail::generate_convex(spec);
    case GeneratorKind::dense_grid: return detail::generate_dense(spec);
    case GeneratorKind::from_file: return read_pointset(spec.path);
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator kind");
}

}  // namespace halving
