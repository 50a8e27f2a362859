#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "audits.hpp"
#include "bound.hpp"
#include "generators.hpp"
#include "halving_graph.hpp"

namespace halving {

inline constexpr int kReportSchemaVersion = 1;

/// Where an analysed point set came from, echoed into every report.
struct InstanceSource {
  std::string kind = "file";  // random | convex | dense | file
  std::string path;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::optional<Coord> bbox;
  std::optional<std::string> gamma;
};

struct AnalysisReport {
  InstanceSource source;
  Enumerator method = Enumerator::rotational;
  Measurement measurement;
  LemmaAuditReport lemmas;
  RotationCheckReport rotation;
  ConvexChainDecomposition chains;
  std::vector<BoundReport> bounds;
  std::optional<bool> oracle_equivalence;
  bool corrected_dominance = false;
  std::vector<std::string> failures;  // hard assertions that did not hold

  bool ok() const { return failures.empty(); }
};

inline std::string format_real(Real x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

inline std::string fingerprint(const InstanceSource& src) {
  std::string out = src.kind + ":n=" + std::to_string(src.n);
  if (src.seed) out += ":seed=" + std::to_string(*src.seed);
  if (!src.path.empty()) out += ":path=" + src.path;
  return out;
}

/// Runs enumeration, crossings, identity, lemma, rotation and chain audits and
/// the bound chain for each preset. Dominance is a hard assertion for the
/// corrected preset only; it is always evaluated, even if not requested.
inline AnalysisReport analyze(const PointSet& ps, InstanceSource source, const std::vector<BoundPreset>& presets,
                              Enumerator method = Enumerator::rotational, bool check_oracle = false) {
  AnalysisReport rep;
  source.n = ps.size();
  rep.source = std::move(source);
  rep.method = method;
  rep.measurement = measure(ps, method);
  const Measurement& meas = rep.measurement;
  if (check_oracle) {
    const HalvingGraph other =
        method == Enumerator::bruteforce ? halving_edges_rotational(ps) : halving_edges_bruteforce(ps);
    rep.oracle_equivalence = other == meas.graph;
  }
  rep.lemmas = audit_lemmas(meas.graph, meas.histogram, fingerprint(rep.source));
  rep.rotation = lovasz_rotation_check(ps, meas.graph);
  rep.chains = convex_chain_decompose(ps, meas.graph);
  const bool have_bounds = ps.size() >= 4;
  if (have_bounds) {
    for (BoundPreset preset : presets) rep.bounds.push_back(bound_report(meas, preset));
    rep.corrected_dominance = bound_report(meas, BoundPreset::corrected).dominance;
  } else {
    rep.corrected_dominance = true;  // the bound needs n >= 4; nothing to dominate
  }

  auto require = [&](bool cond, const char* what) {
    if (!cond) rep.failures.emplace_back(what);
  };
  require(meas.identity.holds, "identity");
  require(rep.rotation.pass, "rotation");
  require(rep.corrected_dominance, "dominance");
  require(!rep.oracle_equivalence || *rep.oracle_equivalence, "oracle-equivalence");
  require(rep.lemmas.degree_square_sum, "degree_square_sum");
  require(rep.lemmas.max_degree_bound, "max_degree_bound");
  require(rep.chains.partition && rep.chains.convex, "chain-decomposition");
  require(rep.chains.chain_count <= ps.size(), "chain-count");
  const std::uint64_t m = meas.graph.m(), alpha = meas.histogram.alpha, n = ps.size();
  require(meas.histogram.M >= alpha * alpha && alpha * alpha * n * n >= 4 * m * m, "chain-inequality");
  return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const BoundReport& b) {
  nlohmann::ordered_json j;
  j["preset"] = std::string(to_string(b.preset));
  j["cubic"] = {{"a", static_cast<double>(b.cubic.a)},
                {"b", static_cast<double>(b.cubic.b)},
                {"c", static_cast<double>(b.cubic.c)},
                {"d", static_cast<double>(b.cubic.d)}};
  j["m_star"] = static_cast<double>(b.m_star);
  j["ratio"] = static_cast<double>(b.ratio);
  j["dominance"] = b.dominance;
  j["crossing_lemma_applicable"] = b.crossing_lemma_applicable;
  j["M_ge_alpha_squared"] = b.M_at_least_alpha_squared;
  j["alpha_squared_ge_4m2_over_n2"] = b.alpha_squared_at_least_average;
  j["cr_equals_n2_minus_n_minus_M_over_8"] = b.cr_matches_degree_form;
  j["constant_term_sign"] = "negated relative to the printed inequality so that a positive root exists";
  return j;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& rep) {
  using nlohmann::ordered_json;
  const Measurement& meas = rep.measurement;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;

  ordered_json src;
  src["kind"] = rep.source.kind;
  src["n"] = rep.source.n;
  src["seed"] = rep.source.seed ? ordered_json(*rep.source.seed) : ordered_json(nullptr);
  if (!rep.source.path.empty()) src["path"] = rep.source.path;
  if (rep.source.bbox) src["bbox"] = *rep.source.bbox;
  if (rep.source.gamma) src["gamma"] = *rep.source.gamma;
  j["input"] = src;
  j["method"] = std::string(to_string(rep.method));

  j["m"] = meas.graph.m();
  ordered_json hist = ordered_json::array();
  for (const auto& [i, ni] : meas.histogram.counts) hist.push_back({i, ni});
  j["degree_histogram"] = hist;
  j["alpha"] = meas.histogram.alpha;
  j["M"] = meas.histogram.M;
  j["cr"] = meas.crossings.cr;
  j["crossing_pairs_tested"] = meas.crossings.pairs_tested;
  j["identity"] = {{"cr", meas.identity.cr},
                   {"degree_term", meas.identity.degree_term},
                   {"lhs", meas.identity.lhs},
                   {"rhs", meas.identity.rhs},
                   {"holds", meas.identity.holds}};

  ordered_json lem;
  lem["fingerprint"] = rep.lemmas.fingerprint;
  lem["degree_square_sum"] = {{"pass", rep.lemmas.degree_square_sum},
                    {"sum_degree_squares", rep.lemmas.sum_degree_squares},
                    {"sum_i2_ni", rep.lemmas.histogram_M}};
  lem["odd_counts"] = {{"pass", rep.lemmas.odd_counts},
                        {"report_only", true},
                        {"violating_degrees", rep.lemmas.odd_count_violations}};
  ordered_json mono = ordered_json::array();
  for (const auto& [i, jj] : rep.lemmas.monotone_count_violations) mono.push_back({i, jj});
  lem["monotone_counts"] = {{"pass", rep.lemmas.monotone_counts}, {"report_only", true}, {"violating_pairs", mono}};
  lem["max_degree_bound"] = {{"pass", rep.lemmas.max_degree_bound}};
  j["lemmas"] = lem;

  ordered_json rot;
  rot["name"] = "Lovasz rotation lemma";
  rot["pass"] = rep.rotation.pass;
  rot["checks"] = rep.rotation.checks;
  rot["nearest_hit_halving"] = rep.rotation.nearest_hit_halving;
  ordered_json cex = ordered_json::array();
  for (const auto& c : rep.rotation.counterexamples) {
    cex.push_back({{"edge", {c.edge.u, c.edge.v}},
                   {"pivot", c.pivot},
                   {"direction", std::string(to_string(c.direction))},
                   {"first_point", c.first_point},
                   {"reason", c.reason}});
  }
  rot["counterexamples"] = cex;
  j["rotation"] = rot;

  j["chains"] = {{"count", rep.chains.chain_count},
                 {"max_pair_crossings", rep.chains.max_pair_crossings},
                 {"self_crossings", rep.chains.self_crossings},
                 {"alternation_violations", rep.chains.alternation_violations},
                 {"partition", rep.chains.partition},
                 {"convex", rep.chains.convex}};

  ordered_json bounds = ordered_json::array();
  for (const auto& b : rep.bounds) bounds.push_back(to_json(b));
  j["bounds"] = bounds;
  j["oracle_equivalence"] = rep.oracle_equivalence ? ordered_json(*rep.oracle_equivalence) : ordered_json(nullptr);
  j["verdict"] = {{"ok", rep.ok()}, {"failures", rep.failures}};
  return j;
}

// ---------------------------------------------------------------------------
// CSV (sweep / probe / analyze --format csv)
// ---------------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "n,preset,m_star,ratio,measured_m,measured_cr,M,alpha,identity_holds,dominance,seed,error";

struct CsvRow {
  std::uint64_t n = 0;
  std::string preset;
  std::optional<Real> m_star;
  std::optional<Real> ratio;
  std::optional<BoundReport> measured;  // measurement columns filled from here
  std::optional<std::uint64_t> seed;
  std::string error;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string to_csv(const CsvRow& row) {
  std::string out = std::to_string(row.n) + ',' + row.preset + ',';
  out += (row.m_star ? format_real(*row.m_star) : "") + ',';
  out += (row.ratio ? format_real(*row.ratio) : "") + ',';
  if (row.measured) {
    const BoundReport& b = *row.measured;
    out += std::to_string(b.measured_m) + ',' + std::to_string(b.measured_cr) + ',' + std::to_string(b.M) + ',' +
           std::to_string(b.alpha) + ',' + (b.identity_holds ? "true" : "false") + ',' +
           (b.dominance ? "true" : "false") + ',';
  } else {
    out += ",,,,,,";
  }
  out += (row.seed ? std::to_string(*row.seed) : "") + ',' + csv_escape(row.error);
  return out;
}

inline CsvRow csv_row(const BoundReport& b, std::optional<std::uint64_t> seed) {
  return {b.n, std::string(to_string(b.preset)), b.m_star, b.ratio, b, seed, {}};
}

inline CsvRow csv_row(const ProbeRow& p) {
  return {p.n, std::string(to_string(p.preset)), p.m_star, p.ratio, std::nullopt, std::nullopt, {}};
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

inline void write_text(std::ostream& os, const AnalysisReport& rep) {
  const Measurement& meas = rep.measurement;
  auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "input       " << fingerprint(rep.source) << '\n';
  os << "method      " << to_string(rep.method) << '\n';
  os << "m           " << meas.graph.m() << '\n';
  os << "degrees    ";
  for (const auto& [i, ni] : meas.histogram.counts) os << ' ' << i << ':' << ni;
  os << '\n';
  os << "alpha       " << meas.histogram.alpha << '\n';
  os << "M           " << meas.histogram.M << '\n';
  os << "cr          " << meas.crossings.cr << '\n';
  os << "identity    " << meas.identity.lhs << " = " << meas.identity.rhs << "  " << yes(meas.identity.holds) << '\n';
  os << "deg sum     " << yes(rep.lemmas.degree_square_sum) << '\n';
  os << "deg counts  odd " << (rep.lemmas.odd_counts ? "pass" : "violated") << ", monotone "
     << (rep.lemmas.monotone_counts ? "pass" : "violated") << "  (report only)\n";
  for (std::size_t i : rep.lemmas.odd_count_violations) {
    os << "            n_" << i << " = " << meas.histogram.counts.at(i) << " is even\n";
  }
  for (const auto& [i, j] : rep.lemmas.monotone_count_violations) {
    os << "            n_" << i << " > n_" << j << '\n';
  }
  os << "max degree  " << yes(rep.lemmas.max_degree_bound) << '\n';
  os << "rotation    " << yes(rep.rotation.pass) << " (" << rep.rotation.checks << " checks)\n";
  for (const auto& c : rep.rotation.counterexamples) {
    os << "            edge " << c.edge.u << '-' << c.edge.v << " pivot " << c.pivot << ' ' << to_string(c.direction)
       << " -> " << c.first_point << ": " << c.reason << '\n';
  }
  os << "chains      " << rep.chains.chain_count << " chains, max pair crossings " << rep.chains.max_pair_crossings
     << ", partition " << yes(rep.chains.partition) << ", convex " << yes(rep.chains.convex) << '\n';
  if (rep.oracle_equivalence) os << "oracle      " << yes(*rep.oracle_equivalence) << '\n';
  for (const auto& b : rep.bounds) {
    os << "bound       " << to_string(b.preset) << ": m* = " << format_real(b.m_star, 12)
       << ", m*/n^(4/3) = " << format_real(b.ratio, 12) << ", dominance " << (b.dominance ? "holds" : "fails")
       << (b.crossing_lemma_applicable ? "" : " (m < 4n: crossing lemma not applicable)") << '\n';
  }
  if (!rep.bounds.empty()) os << "note        constant term of the bound cubic is negated relative to the printed inequality\n";
  os << "verdict     " << (rep.ok() ? "ok" : "FAILED");
  for (const auto& f : rep.failures) os << ' ' << f;
  os << '\n';
}

}  // namespace halving
