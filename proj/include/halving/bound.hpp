#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "audits.hpp"
#include "cardano.hpp"
#include "crossings.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "halving_graph.hpp"

namespace halving {

/// Coefficient rules for the cubic P(m) <= 0 obtained by combining the
/// crossing/degree identity, M >= alpha^2 >= 4m^2/n^2 and cr >= m^3/(64 n^2).
///
///   paper_literal:  m^3/(64n^2) + 2m^2/n^2     - (n^2 - 3n)/8
///   corrected:      m^3/(64n^2) + m^2/(2n^2)   - (n^2 - n)/8
///
/// paper_literal keeps the printed algebra, which expands C((d+1)/2, 2) as
/// (d^2-1)/2; corrected uses (d^2-1)/8. Both carry a negative constant term:
/// printed with a plus sign the inequality has no positive solution.
enum class BoundPreset { paper_literal, corrected };

inline std::string_view to_string(BoundPreset preset) {
  return preset == BoundPreset::paper_literal ? "paper-literal" : "corrected";
}

inline CubicPolynomial build_cubic(std::uint64_t n, BoundPreset preset) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::invalid_n, "bound needs even n >= 4, got " + std::to_string(n));
  const Real nn = static_cast<Real>(n) * static_cast<Real>(n);
  CubicPolynomial P;
  P.a = 1 / (64 * nn);
  P.c = 0;
  if (preset == BoundPreset::paper_literal) {
    P.b = 2 / nn;
    P.d = -(nn - 3 * static_cast<Real>(n)) / 8;
  } else {
    P.b = 1 / (2 * nn);
    P.d = -(nn - static_cast<Real>(n)) / 8;
  }
  return P;
}

/// Positive root of build_cubic(n, preset) from the closed form, polished by
/// two Newton steps (a step is kept only if it lowers the residual).
inline Real halving_upper_bound(std::uint64_t n, BoundPreset preset) {
  const CubicPolynomial P = build_cubic(n, preset);
  const auto root = largest_positive_root(P);
  if (!root) throw Error(ErrorCode::invalid_n, "bound cubic has no positive root for n=" + std::to_string(n));
  Real x = *root;
  for (int step = 0; step < 2; ++step) {
    const Real slope = (3 * P.a * x + 2 * P.b) * x + P.c;
    if (slope == 0) break;
    const Real candidate = x - P(x) / slope;
    if (std::fabs(P(candidate)) >= std::fabs(P(x))) break;
    x = candidate;
  }
  return x;
}

inline Real n_four_thirds(std::uint64_t n) { return std::pow(static_cast<Real>(n), Real{4} / 3); }

struct ProbeRow {
  std::uint64_t n = 0;
  BoundPreset preset = BoundPreset::corrected;
  Real m_star = 0;
  Real ratio = 0;  // m_star / n^(4/3)
};

inline std::vector<ProbeRow> asymptotic_probe(const std::vector<std::uint64_t>& n_values, BoundPreset preset) {
  std::vector<ProbeRow> rows;
  rows.reserve(n_values.size());
  for (std::uint64_t n : n_values) {
    const Real m_star = halving_upper_bound(n, preset);
    rows.push_back({n, preset, m_star, m_star / n_four_thirds(n)});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Measurement chain on a concrete point set
// ---------------------------------------------------------------------------

enum class Enumerator { bruteforce, rotational };

inline std::string_view to_string(Enumerator e) { return e == Enumerator::bruteforce ? "bruteforce" : "rotational"; }

struct Measurement {
  std::size_t n = 0;
  HalvingGraph graph;
  DegreeHistogram histogram;
  CrossingReport crossings;
  IdentityReport identity;
};

inline Measurement measure(const PointSet& ps, Enumerator method = Enumerator::rotational) {
  Measurement out;
  out.n = ps.size();
  out.graph = method == Enumerator::bruteforce ? halving_edges_bruteforce(ps) : halving_edges_rotational(ps);
  out.histogram = degree_histogram(out.graph);
  out.crossings = crossing_number(ps, out.graph);
  out.identity = verify_identity(ps, out.graph, out.crossings);
  return out;
}

struct BoundReport {
  std::uint64_t n = 0;
  BoundPreset preset = BoundPreset::corrected;
  CubicPolynomial cubic;
  Real m_star = 0;
  Real ratio = 0;
  std::uint64_t measured_m = 0;
  std::uint64_t measured_cr = 0;
  std::uint64_t M = 0;
  std::uint64_t alpha = 0;
  bool identity_holds = false;
  bool dominance = false;                  // measured_m <= m_star
  bool crossing_lemma_applicable = false;  // measured_m >= 4n
  bool M_at_least_alpha_squared = false;
  bool alpha_squared_at_least_average = false;  // alpha^2 >= 4 m^2 / n^2
  bool cr_matches_degree_form = false;          // cr == (n^2 - n - M) / 8
};

inline BoundReport bound_report(const Measurement& meas, BoundPreset preset) {
  BoundReport r;
  r.n = meas.n;
  r.preset = preset;
  r.cubic = build_cubic(meas.n, preset);
  r.m_star = halving_upper_bound(meas.n, preset);
  r.ratio = r.m_star / n_four_thirds(meas.n);
  r.measured_m = meas.graph.m();
  r.measured_cr = meas.crossings.cr;
  r.M = meas.histogram.M;
  r.alpha = meas.histogram.alpha;
  r.identity_holds = meas.identity.holds;
  r.dominance = static_cast<Real>(r.measured_m) <= r.m_star;
  r.crossing_lemma_applicable = r.measured_m >= 4 * r.n;
  r.M_at_least_alpha_squared = r.M >= r.alpha * r.alpha;
  r.alpha_squared_at_least_average = r.alpha * r.alpha * r.n * r.n >= 4 * r.measured_m * r.measured_m;
  const std::uint64_t nn = r.n * r.n;
  r.cr_matches_degree_form = nn >= r.n + r.M && (nn - r.n - r.M) % 8 == 0 && (nn - r.n - r.M) / 8 == r.measured_cr;
  return r;
}

inline BoundReport bound_report(const PointSet& ps, BoundPreset preset, Enumerator method = Enumerator::rotational) {
  return bound_report(measure(ps, method), preset);
}

}  // namespace halving
