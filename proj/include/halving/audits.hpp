#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossings.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "halving_graph.hpp"

namespace halving {

// ---------------------------------------------------------------------------
// Crossing/degree identity:  cr(G) + sum_v C((d_v+1)/2, 2) = C(n/2, 2)
// ---------------------------------------------------------------------------

struct IdentityReport {
  std::uint64_t cr = 0;
  std::uint64_t degree_term = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

inline std::uint64_t choose2(std::uint64_t t) { return t < 2 ? 0 : t * (t - 1) / 2; }

/// Throws even_degree_found when some degree is even: the binomial is then not
/// integral, which points at a broken enumerator rather than a false identity.
inline IdentityReport verify_identity(const PointSet& ps, const HalvingGraph& g, const CrossingReport& crossings) {
  if (ps.size() < 2 || ps.size() % 2 != 0) throw Error(ErrorCode::odd_n, "identity needs even n");
  if (g.vertex_count() != ps.size()) throw Error(ErrorCode::invalid_argument, "graph does not match point set");
  IdentityReport r;
  r.cr = crossings.cr;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    if (d % 2 == 0) {
      throw Error(ErrorCode::even_degree_found, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
    r.degree_term += choose2((d + 1) / 2);
  }
  r.lhs = r.cr + r.degree_term;
  r.rhs = choose2(ps.size() / 2);
  r.holds = r.lhs == r.rhs;
  return r;
}

// ---------------------------------------------------------------------------
// Degree audits. The square sum and max-degree bound are theorems; the two
// claims about the counts n_i are report-only.
// ---------------------------------------------------------------------------

struct LemmaAuditReport {
  // sum_v d_v^2 == sum_i i^2 n_i
  bool degree_square_sum = false;
  std::uint64_t sum_degree_squares = 0;
  std::uint64_t histogram_M = 0;

  // "n_i is odd", checked for every degree i that occurs
  bool odd_counts = false;
  std::vector<std::size_t> odd_count_violations;

  // "n_i <= n_j for all i >= j", checked over occurring degrees
  bool monotone_counts = false;
  std::vector<std::pair<std::size_t, std::size_t>> monotone_count_violations;

  // alpha >= 2m/n
  bool max_degree_bound = false;

  std::string fingerprint;
};

inline LemmaAuditReport audit_lemmas(const HalvingGraph& g, const DegreeHistogram& h, std::string fingerprint = {}) {
  LemmaAuditReport r;
  r.fingerprint = std::move(fingerprint);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    r.sum_degree_squares += d * d;
  }
  for (const auto& [i, ni] : h.counts) r.histogram_M += static_cast<std::uint64_t>(i) * i * ni;
  r.degree_square_sum = r.sum_degree_squares == r.histogram_M;

  for (const auto& [i, ni] : h.counts) {
    if (ni > 0 && ni % 2 == 0) r.odd_count_violations.push_back(i);
  }
  r.odd_counts = r.odd_count_violations.empty();

  for (auto hi = h.counts.begin(); hi != h.counts.end(); ++hi) {
    for (auto lo = h.counts.begin(); lo != hi; ++lo) {
      if (hi->second > lo->second) r.monotone_count_violations.emplace_back(hi->first, lo->first);
    }
  }
  r.monotone_counts = r.monotone_count_violations.empty();

  r.max_degree_bound = static_cast<std::uint64_t>(h.alpha) * g.vertex_count() >= 2 * static_cast<std::uint64_t>(g.m());
  return r;
}

// ---------------------------------------------------------------------------
// Lovasz rotation lemma
// ---------------------------------------------------------------------------

enum class Rotation { ccw, cw };

inline std::string_view to_string(Rotation r) { return r == Rotation::ccw ? "ccw" : "cw"; }

struct RotationCounterexample {
  Edge edge;
  VertexId pivot = 0;
  Rotation direction = Rotation::ccw;
  VertexId first_point = 0;
  std::string reason;
};

struct RotationCheckReport {
  bool pass = true;
  std::uint64_t checks = 0;  // (edge, pivot, direction) triples
  std::vector<RotationCounterexample> counterexamples;
  // How often the very next point met by the rotating line (before any
  // halving test) already forms a halving edge. Informational only.
  std::uint64_t nearest_hit_halving = 0;
};

/// Outcome of rotating a halving line about its pivot until it halves again.
struct RotationStep {
  VertexId partner = 0;
  bool met_by_backward_ray = true;  // false would contradict antipodality
  bool nearest_hit_halving = false;
};

/// Points around one pivot in order of direction modulo pi, so that a line
/// through the pivot meets them one at a time as it rotates.
class PivotRotation {
 public:
  PivotRotation(const PointSet& ps, VertexId pivot) : ps_(&ps), pivot_(pivot), position_(ps.size()) {
    for (VertexId q = 0; q < ps.size(); ++q) {
      if (q != pivot) order_.push_back(q);
    }
    const detail::ProjectiveDirectionLess less{&ps[pivot]};
    std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return less(ps[a], ps[b]); });
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
  }

  /// Starts from the halving line through pivot and q and follows the exact
  /// side counts event by event. The side the forward ray sweeps into starts
  /// with h points and the other with h + 1 (q has just dropped behind).
  RotationStep next_halving(VertexId q, Rotation dir) const {
    const PointSet& ps = *ps_;
    const Point& p = ps[pivot_];
    const std::size_t h = (ps.size() - 2) / 2, k = order_.size();
    const int ahead_sign = dir == Rotation::ccw ? 1 : -1;
    std::size_t ahead = h, behind = h + 1;
    RotationStep out{q, true, false};
    for (std::size_t step = 1; step <= k; ++step) {
      const std::size_t idx = dir == Rotation::ccw ? (position_[q] + step) % k : (position_[q] + k - step) % k;
      const VertexId r = order_[idx];
      const bool forward = r != q && orientation_sign(p, ps[q], ps[r]) == ahead_sign;
      bool halving_now;
      if (forward) {
        halving_now = ahead == h + 1;
        --ahead, ++behind;
      } else {
        halving_now = behind == h + 1;
        --behind, ++ahead;
      }
      if (step == 1) out.nearest_hit_halving = halving_now;
      if (halving_now) {
        out.partner = r;
        out.met_by_backward_ray = !forward;
        break;
      }
    }
    return out;
  }

 private:
  const PointSet* ps_;
  VertexId pivot_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
};

/// Rotates the line of every halving edge about each endpoint, both ways. The
/// first line through the pivot that halves the set again must come from a
/// point met by the backward ray (antipodality), must pass an independent
/// halving count, and must be an edge of g.
inline RotationCheckReport lovasz_rotation_check(const PointSet& ps, const HalvingGraph& g) {
  RotationCheckReport report;
  const auto n = static_cast<VertexId>(ps.size());
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::odd_n, "rotation check needs even n");
  if (g.vertex_count() != n) throw Error(ErrorCode::invalid_argument, "graph does not match point set");

  for (VertexId pivot = 0; pivot < n; ++pivot) {
    if (g.degree(pivot) == 0) continue;
    const PivotRotation rotation(ps, pivot);
    for (VertexId q : g.neighbors(pivot)) {
      for (Rotation dir : {Rotation::ccw, Rotation::cw}) {
        ++report.checks;
        std::string reason;
        VertexId partner = q;
        if (!is_halving_pair(ps, pivot, q)) {
          reason = "edge fails the halving count";
        } else {
          const RotationStep step = rotation.next_halving(q, dir);
          partner = step.partner;
          if (step.nearest_hit_halving) ++report.nearest_hit_halving;
          if (!step.met_by_backward_ray) reason = "first halving line met on the forward ray";
          else if (!is_halving_pair(ps, pivot, partner)) reason = "partner fails the halving count";
          else if (!g.contains(pivot, partner)) reason = "partner edge missing from graph";
        }
        if (!reason.empty()) {
          report.pass = false;
          report.counterexamples.push_back({Edge(pivot, q), pivot, dir, partner, std::move(reason)});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Convex chains
// ---------------------------------------------------------------------------

struct ConvexChain {
  std::vector<std::size_t> edges;     // indices into g.edges(), left to right
  std::vector<VertexId> vertices;     // edges.size() + 1 vertices, left to right
};

struct ConvexChainDecomposition {
  std::vector<ConvexChain> chains;
  std::size_t chain_count = 0;
  // Proper crossings between chains a < b, only pairs with at least one.
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> pair_crossings;
  std::uint64_t max_pair_crossings = 0;
  std::uint64_t self_crossings = 0;
  // Vertices where left and right edges do not alternate in slope order.
  std::uint64_t alternation_violations = 0;
  bool partition = false;  // every edge in exactly one chain
  bool convex = false;     // every chain turns left at every inner vertex
};

/// Orients edges left to right and joins each incoming edge at a vertex to
/// the outgoing edge that follows it in slope order, which is where its
/// supporting line lands when rotated counterclockwise about the vertex.
/// Left-to-right uses lexicographic (x, y) order: the exact equivalent of the
/// integer shear x' = K x + y for K larger than the y spread.
inline ConvexChainDecomposition convex_chain_decompose(const PointSet& ps, const HalvingGraph& g) {
  ConvexChainDecomposition out;
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  auto left_of = [&](const Edge& e) { return ps[e.u] < ps[e.v] ? e.u : e.v; };
  auto right_of = [&](const Edge& e) { return ps[e.u] < ps[e.v] ? e.v : e.u; };

  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(m, none), prev(m, none);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& inc = incident[v];
    if (inc.empty()) continue;
    const Point& c = ps[v];
    auto other = [&](std::size_t e) { return edges[e].u == v ? edges[e].v : edges[e].u; };
    auto is_right = [&](std::size_t e) { return c < ps[other(e)]; };
    // Slope order of left-to-right directions: reflect left neighbours through v.
    std::sort(inc.begin(), inc.end(), [&](std::size_t a, std::size_t b) {
      const int flip = (is_right(a) ? 1 : -1) * (is_right(b) ? 1 : -1);
      return flip * orientation_sign(c, ps[other(a)], ps[other(b)]) > 0;
    });
    for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
      if (is_right(inc[i]) == is_right(inc[i + 1])) ++out.alternation_violations;
      if (!is_right(inc[i]) && is_right(inc[i + 1])) {
        next[inc[i]] = inc[i + 1];
        prev[inc[i + 1]] = inc[i];
      }
    }
  }
  std::vector<std::size_t> chain_of(m, none);
  std::vector<std::size_t> seen(m, 0);
  for (std::size_t start = 0; start < m; ++start) {
    if (prev[start] != none) continue;
    ConvexChain chain;
    chain.vertices.push_back(left_of(edges[start]));
    for (std::size_t e = start; e != none; e = next[e]) {
      chain.edges.push_back(e);
      chain.vertices.push_back(right_of(edges[e]));
      ++seen[e];
      chain_of[e] = out.chains.size();
    }
    out.chains.push_back(std::move(chain));
  }
  out.chain_count = out.chains.size();
  out.partition = std::all_of(seen.begin(), seen.end(), [](std::size_t s) { return s == 1; });

  out.convex = true;
  for (const auto& chain : out.chains) {
    for (std::size_t i = 1; i + 1 < chain.vertices.size(); ++i) {
      if (orientation_sign(ps[chain.vertices[i - 1]], ps[chain.vertices[i]], ps[chain.vertices[i + 1]]) <= 0) {
        out.convex = false;
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edges[i].shares_endpoint(edges[j])) continue;
      if (!segments_cross(ps[edges[i].u], ps[edges[i].v], ps[edges[j].u], ps[edges[j].v])) continue;
      const std::size_t a = chain_of[i], b = chain_of[j];
      if (a == none || b == none) continue;
      if (a == b) {
        ++out.self_crossings;
        continue;
      }
      const auto count = ++out.pair_crossings[std::minmax(a, b)];
      out.max_pair_crossings = std::max(out.max_pair_crossings, count);
    }
  }
  return out;
}

}  // namespace halving
