#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace halving {

// Point-set text format:
//   line 1      n
//   lines 2..   "x y"  (decimal integers, one space, LF endings)

inline void write_pointset(std::ostream& os, const PointSet& ps) {
  os << ps.size() << '\n';
  for (const Point& p : ps) os << p.x << ' ' << p.y << '\n';
}

inline void write_pointset(const std::string& path, const PointSet& ps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "' for writing");
  write_pointset(out, ps);
  if (!out.flush()) throw Error(ErrorCode::invalid_argument, "write to '" + path + "' failed");
}

namespace detail {

[[noreturn]] inline void malformed(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::malformed_file, "line " + std::to_string(line) + ": " + reason);
}

template <class Int>
bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  if (text.front() == '+') return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

/// Parses the point-set format and rejects sets that are not in general position.
inline PointSet read_pointset(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(is, line)) detail::malformed(1, "empty file, expected point count");
  ++lineno;
  std::size_t n = 0;
  if (!detail::parse_integer(std::string_view(line), n)) detail::malformed(lineno, "expected point count, got '" + line + "'");

  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    if (!std::getline(is, line)) {
      detail::malformed(lineno + 1, std::to_string(n) + " points declared, " + std::to_string(pts.size()) + " provided");
    }
    ++lineno;
    const auto space = line.find(' ');
    Point p;
    if (space == std::string::npos || !detail::parse_integer(std::string_view(line).substr(0, space), p.x) ||
        !detail::parse_integer(std::string_view(line).substr(space + 1), p.y)) {
      detail::malformed(lineno, "expected \"x y\", got '" + line + "'");
    }
    pts.push_back(p);
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty()) detail::malformed(lineno, "more than " + std::to_string(n) + " points provided");
  }

  PointSet ps(std::move(pts));
  if (auto v = check_general_position(ps)) {
    std::ostringstream msg;
    msg << *v;
    throw Error(ErrorCode::general_position_violation, msg.str());
  }
  return ps;
}

inline PointSet read_pointset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_file, "cannot open '" + path + "'");
  return read_pointset(in);
}

}  // namespace halving
