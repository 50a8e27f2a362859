#pragma once

#include <cstdint>

#include "geometry.hpp"
#include "halving_graph.hpp"

namespace halving {

struct CrossingReport {
  std::uint64_t cr = 0;
  std::uint64_t pairs_tested = 0;
};

/// Counts unordered edge pairs whose open segments properly cross. Pairs that
/// share an endpoint are skipped before any predicate call.
inline CrossingReport crossing_number(const PointSet& ps, const HalvingGraph& g) {
  CrossingReport report;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_endpoint(edges[j])) continue;
      ++report.pairs_tested;
      if (segments_cross(ps[edges[i].u], ps[edges[i].v], ps[edges[j].u], ps[edges[j].v])) ++report.cr;
    }
  }
  return report;
}

}  // namespace halving
