#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace halving {

/// Unordered vertex pair stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool shares_endpoint(const Edge& o) const { return u == o.u || u == o.v || v == o.u || v == o.v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Geometric graph on the ids of a point set. Edges are kept sorted and
/// unique; adjacency lists are sorted ascending.
class HalvingGraph {
 public:
  HalvingGraph() = default;

  HalvingGraph(std::size_t vertex_count, std::vector<Edge> edges)
      : edges_(std::move(edges)), adjacency_(vertex_count) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      if (e.v >= vertex_count || e.u == e.v) throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  bool contains(VertexId a, VertexId b) const {
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  friend bool operator==(const HalvingGraph& a, const HalvingGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Vertex count per degree (degree 0 included when present), maximum degree
/// alpha and the second moment M = sum_i i^2 n_i.
struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;
  std::size_t alpha = 0;
  std::uint64_t M = 0;
};

inline DegreeHistogram degree_histogram(const HalvingGraph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++h.counts[g.degree(v)];
  for (const auto& [degree, count] : h.counts) {
    h.alpha = std::max(h.alpha, degree);
    h.M += static_cast<std::uint64_t>(degree) * degree * count;
  }
  return h;
}

namespace detail {

inline void require_general_position(const PointSet& ps) {
  if (auto v = check_general_position(ps)) {
    std::ostringstream msg;
    msg << *v;
    throw Error(ErrorCode::general_position_violation, msg.str());
  }
}

inline void require_halving_input(const PointSet& ps) {
  if (ps.size() < 2 || ps.size() % 2 != 0) {
    throw Error(ErrorCode::odd_n, "halving edges need even n >= 2, got n=" + std::to_string(ps.size()));
  }
  require_general_position(ps);
}

inline void require_k_range(const PointSet& ps, std::size_t k) {
  if (k < 1 || k + 1 > ps.size()) {
    throw Error(ErrorCode::k_out_of_range, "k=" + std::to_string(k) + " outside [1, n-1] for n=" + std::to_string(ps.size()));
  }
}

/// Number of points strictly left of the directed line a->b.
inline std::size_t count_left(const PointSet& ps, VertexId a, VertexId b) {
  std::size_t left = 0;
  for (VertexId r = 0; r < ps.size(); ++r) {
    if (r != a && r != b && orientation_sign(ps[a], ps[b], ps[r]) > 0) ++left;
  }
  return left;
}

/// Pairs whose line leaves exactly `below` points on one side (either side).
inline HalvingGraph level_edges_bruteforce(const PointSet& ps, std::size_t below) {
  const auto n = static_cast<VertexId>(ps.size());
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const std::size_t left = count_left(ps, a, b);
      if (left == below || n - 2 - left == below) edges.emplace_back(a, b);
    }
  }
  return HalvingGraph(n, std::move(edges));
}

/// Per-pivot angular sweep: sort the other points by direction around the
/// pivot, then slide a half-turn window to get every left count in O(n).
inline HalvingGraph level_edges_rotational(const PointSet& ps, std::size_t below) {
  const auto n = static_cast<VertexId>(ps.size());
  std::vector<Edge> edges;
  std::vector<VertexId> around;
  around.reserve(n);
  for (VertexId pivot = 0; pivot < n; ++pivot) {
    const Point& p = ps[pivot];
    around.clear();
    for (VertexId q = 0; q < n; ++q) {
      if (q != pivot) around.push_back(q);
    }
    auto lower_half = [&](const Point& a) { return a.y < p.y || (a.y == p.y && a.x < p.x); };
    std::sort(around.begin(), around.end(), [&](VertexId a, VertexId b) {
      const bool ha = lower_half(ps[a]), hb = lower_half(ps[b]);
      if (ha != hb) return hb;
      return orientation_sign(p, ps[a], ps[b]) > 0;
    });

    const std::size_t k = around.size();
    std::size_t j = 0;
    for (std::size_t i = 0; i < k; ++i) {
      j = std::max(j, i + 1);
      while (j < i + k && orientation_sign(p, ps[around[i]], ps[around[j % k]]) > 0) ++j;
      const std::size_t left = j - i - 1;
      const VertexId q = around[i];
      if (pivot < q && (left == below || n - 2 - left == below)) edges.emplace_back(pivot, q);
    }
  }
  return HalvingGraph(n, std::move(edges));
}

}  // namespace detail

/// O(n^3) reference enumeration: every pair with (n-2)/2 points strictly on
/// each side of its line.
inline HalvingGraph halving_edges_bruteforce(const PointSet& ps) {
  detail::require_halving_input(ps);
  return detail::level_edges_bruteforce(ps, (ps.size() - 2) / 2);
}

/// O(n^2 log n) enumeration by angular sweep around each pivot.
inline HalvingGraph halving_edges_rotational(const PointSet& ps) {
  detail::require_halving_input(ps);
  return detail::level_edges_rotational(ps, (ps.size() - 2) / 2);
}

/// k-edges: k-1 points on one side of the line, n-k-1 on the other, in either
/// orientation. Each pair is reported once, so k and n-k give the same graph.
inline HalvingGraph k_edges(const PointSet& ps, std::size_t k) {
  detail::require_k_range(ps, k);
  detail::require_general_position(ps);
  return detail::level_edges_rotational(ps, k - 1);
}

inline HalvingGraph k_edges_bruteforce(const PointSet& ps, std::size_t k) {
  detail::require_k_range(ps, k);
  detail::require_general_position(ps);
  return detail::level_edges_bruteforce(ps, k - 1);
}

/// Exact halving test for one pair, independent of any enumerated graph.
inline bool is_halving_pair(const PointSet& ps, VertexId a, VertexId b) {
  return 2 * detail::count_left(ps, a, b) + 2 == ps.size();
}

// Graph dump: "m", then m lines "i j" with i < j in lexicographic order.

inline void write_graph_dump(std::ostream& os, const HalvingGraph& g) {
  os << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline HalvingGraph read_graph_dump(std::istream& is, std::size_t vertex_count) {
  std::size_t m = 0;
  if (!(is >> m)) throw Error(ErrorCode::malformed_file, "line 1: expected edge count");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    VertexId a, b;
    if (!(is >> a >> b) || a >= b) {
      throw Error(ErrorCode::malformed_file, "line " + std::to_string(i + 2) + ": expected \"i j\" with i < j");
    }
    edges.emplace_back(a, b);
  }
  return HalvingGraph(vertex_count, std::move(edges));
}

}  // namespace halving
