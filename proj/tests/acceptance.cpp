// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <halving/halving.hpp>
#include <halving/report.hpp>

#include "fixtures.hpp"

using namespace halving;

namespace {

struct Instance {
  std::string label;
  PointSet ps;
};

/// 100 seeds of random sets for n = 4..40 and of convex sets for n = 4..20.
std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 4; n <= 40; n += 2) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      out.push_back({"random n=" + std::to_string(n) + " seed=" + std::to_string(seed), fixtures::random_set(n, seed)});
    }
  }
  for (std::size_t n = 4; n <= 20; n += 2) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      out.push_back({"convex n=" + std::to_string(n) + " seed=" + std::to_string(seed), fixtures::convex_set(n, seed)});
    }
  }
  return out;
}

/// Everything the corpus criteria need, computed once per instance.
struct Evaluated {
  const Instance* inst;
  Measurement brute;
  HalvingGraph rotational;
  RotationCheckReport rotation;
  LemmaAuditReport lemmas;
  ConvexChainDecomposition chains;
  BoundReport corrected;
  BoundReport literal;
};

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  /// Records a failure; only the first few are echoed.
  void fail(const std::string& what) {
    if (failures_++ < 3) detail_ << "\n    " << what;
  }
  void note(const std::string& text) { note_ = text; }

  bool report() const {
    std::printf("[%s] %2d  %s", failures_ == 0 ? "PASS" : "FAIL", id_, title_.c_str());
    if (!note_.empty()) std::printf("  (%s)", note_.c_str());
    if (failures_ > 0) std::printf("  %zu failure(s):%s", failures_, detail_.str().c_str());
    std::printf("\n");
    return failures_ == 0;
  }

 private:
  int id_;
  std::string title_;
  std::string note_;
  std::size_t failures_ = 0;
  std::ostringstream detail_;
};

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(long double x, int digits = 10) { return format_real(x, digits); }

}  // namespace

int main() {
  const auto instances = corpus();
  std::vector<Evaluated> evals;
  evals.reserve(instances.size());
  const double corpus_time = seconds([&] {
    for (const Instance& inst : instances) {
      Evaluated e{&inst, measure(inst.ps, Enumerator::bruteforce), halving_edges_rotational(inst.ps), {}, {}, {}, {}, {}};
      e.rotation = lovasz_rotation_check(inst.ps, e.brute.graph);
      e.lemmas = audit_lemmas(e.brute.graph, e.brute.histogram);
      e.chains = convex_chain_decompose(inst.ps, e.brute.graph);
      e.corrected = bound_report(e.brute, BoundPreset::corrected);
      e.literal = bound_report(e.brute, BoundPreset::paper_literal);
      evals.push_back(std::move(e));
    }
  });
  const std::string corpus_note = std::to_string(evals.size()) + " instances";
  bool all = true;

  {
    Criterion c(1, "identity cr + sum C((d+1)/2, 2) = C(n/2, 2) holds exactly on the corpus");
    for (const auto& e : evals) {
      const auto& id = e.brute.identity;
      if (!id.holds || id.lhs != id.rhs || id.rhs != choose2(e.inst->ps.size() / 2)) {
        c.fail(e.inst->label + ": lhs " + std::to_string(id.lhs) + " rhs " + std::to_string(id.rhs));
      }
    }
    c.note(corpus_note + ", corpus evaluated in " + fmt(corpus_time, 3) + " s");
    all &= c.report();
  }
  {
    Criterion c(2, "rotational enumeration equals brute force on the corpus");
    for (const auto& e : evals) {
      if (!(e.rotational == e.brute.graph)) c.fail(e.inst->label);
    }
    c.note(corpus_note);
    all &= c.report();
  }
  {
    Criterion c(3, "convex position n = 4..12: m = n/2 and cr = C(n/2, 2)");
    std::size_t checked = 0;
    for (std::size_t n = 4; n <= 12; n += 2) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PointSet ps = fixtures::convex_set(n, seed);
        const Measurement m = measure(ps, Enumerator::bruteforce);
        ++checked;
        if (m.graph.m() != n / 2 || m.crossings.cr != choose2(n / 2)) {
          c.fail("n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": m " + std::to_string(m.graph.m()) +
                 " cr " + std::to_string(m.crossings.cr));
        }
      }
    }
    c.note(std::to_string(checked) + " sets");
    all &= c.report();
  }
  {
    Criterion c(4, "every halving-graph degree is odd on the corpus");
    for (const auto& e : evals) {
      for (VertexId v = 0; v < e.brute.graph.vertex_count(); ++v) {
        if (e.brute.graph.degree(v) % 2 == 0) c.fail(e.inst->label + ": vertex " + std::to_string(v));
      }
    }
    c.note(corpus_note);
    all &= c.report();
  }
  {
    Criterion c(5, "rotation check passes for every halving edge, both pivots, both directions");
    std::uint64_t checks = 0;
    for (const auto& e : evals) {
      checks += e.rotation.checks;
      if (e.rotation.checks != 4 * e.brute.graph.m()) c.fail(e.inst->label + ": check count");
      for (const auto& cex : e.rotation.counterexamples) {
        c.fail(e.inst->label + ": edge " + std::to_string(cex.edge.u) + "-" + std::to_string(cex.edge.v) + " " +
               cex.reason);
      }
    }
    c.note(std::to_string(checks) + " rotations");
    all &= c.report();
  }
  {
    Criterion c(6, "degree square sum and max-degree bound hold; odd-count log contains the quadrilateral");
    for (const auto& e : evals) {
      if (!e.lemmas.degree_square_sum) c.fail(e.inst->label + ": square sum");
      if (!e.lemmas.max_degree_bound) c.fail(e.inst->label + ": alpha < 2m/n");
    }
    const Measurement quad = measure(fixtures::convex_quad());
    const LemmaAuditReport q = audit_lemmas(quad.graph, quad.histogram, "convex quadrilateral");
    const bool logged = q.odd_count_violations == std::vector<std::size_t>{1} && quad.histogram.counts.at(1) == 4;
    if (!logged) c.fail("convex quadrilateral: n_1 = 4 not logged");
    std::size_t corpus_violations = 0;
    for (const auto& e : evals) corpus_violations += e.lemmas.odd_count_violations.empty() ? 0 : 1;
    c.note("odd-count claim violated on " + std::to_string(corpus_violations) + " corpus instances, report only");
    all &= c.report();
  }
  {
    Criterion c(7, "chains partition the edges, each convex, count <= n, pairwise crossings <= 2");
    std::uint64_t worst = 0;
    for (const auto& e : evals) {
      const auto& ch = e.chains;
      worst = std::max(worst, ch.max_pair_crossings);
      if (!ch.partition) c.fail(e.inst->label + ": not a partition");
      if (!ch.convex) c.fail(e.inst->label + ": non-convex chain");
      if (ch.chain_count > e.inst->ps.size()) c.fail(e.inst->label + ": too many chains");
      if (ch.max_pair_crossings > 2) {
        c.fail(e.inst->label + ": chain pair crosses " + std::to_string(ch.max_pair_crossings) + " times");
      }
    }
    c.note("max pair crossings seen " + std::to_string(worst));
    all &= c.report();
  }
  {
    Criterion c(8, "cubic solver: constructed roots to 1e-9, residual bound, casus irreducibilis vs bisection");
    std::mt19937_64 rng(20240801);
    // Roots on a 1/64 grid in [-100, 100] keep the expanded coefficients exact.
    auto grid_root = [&] { return static_cast<Real>(static_cast<std::int64_t>(rng() % 12801) - 6400) / 64; };
    const Real leading[] = {1, 2, -0.5L, 4, -1};
    Real worst_rel = 0;
    for (int i = 0; i < 1000; ++i) {
      const Real a = leading[i % 5];
      std::vector<Real> want;
      CubicPolynomial P;
      if (i % 4 == 3) {
        // one real root r and a complex pair s +- t i
        const Real r = grid_root(), s = grid_root();
        Real t = grid_root();
        if (t == 0) t = 1;
        const Real b2 = -2 * s, c2 = s * s + t * t;
        P = {a, a * (b2 - r), a * (c2 - r * b2), -a * r * c2};
        want = {r};
      } else {
        Real r[3];
        do {
          for (Real& x : r) x = grid_root();
        } while (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]);
        P = {a, -a * (r[0] + r[1] + r[2]), a * (r[0] * r[1] + r[1] * r[2] + r[0] * r[2]), -a * r[0] * r[1] * r[2]};
        want = {r[0], r[1], r[2]};
      }
      std::sort(want.begin(), want.end());
      const CubicRoots got = solve_cubic(P);
      if (got.real_roots.size() != want.size()) {
        c.fail("case " + std::to_string(i) + ": " + std::to_string(got.real_roots.size()) + " roots");
        continue;
      }
      for (std::size_t k = 0; k < want.size(); ++k) {
        const Real rel = std::fabs(got.real_roots[k] - want[k]) / std::max(std::fabs(want[k]), Real{1});
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-9L) c.fail("case " + std::to_string(i) + ": root " + fmt(want[k]) + " got " + fmt(got.real_roots[k]));
        if (std::fabs(P(got.real_roots[k])) > residual_tolerance(P, got.real_roots[k])) {
          c.fail("case " + std::to_string(i) + ": residual at " + fmt(got.real_roots[k]));
        }
      }
    }
    const CubicPolynomial casus{1, 0, -3, 1};
    const CubicRoots got = solve_cubic(casus);
    if (got.discriminant_class != DiscriminantClass::three_real_distinct || got.real_roots.size() != 3) {
      c.fail("x^3 - 3x + 1: wrong class");
    } else {
      auto f = [](const fixtures::BigFloat& x) { return x * x * x - 3 * x + 1; };
      const fixtures::BigFloat brackets[3][2] = {{-2, -1}, {0, 1}, {1, 2}};
      for (int k = 0; k < 3; ++k) {
        const Real oracle = fixtures::bisect(f, brackets[k][0], brackets[k][1]).convert_to<Real>();
        if (std::fabs(got.real_roots[k] - oracle) > 1e-12L) c.fail("x^3 - 3x + 1: root " + fmt(oracle, 18));
      }
    }
    c.note("1000 cubics, worst relative error " + fmt(worst_rel, 3));
    all &= c.report();
  }
  {
    Criterion c(9, "m*(n)/n^(4/3) in [1.97, 2.00] at n = 1e3 and within 1e-2 of 2 at n = 1e6, both presets");
    std::string seen;
    for (BoundPreset preset : {BoundPreset::paper_literal, BoundPreset::corrected}) {
      for (std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{1000000}}) {
        const Real m_star = halving_upper_bound(n, preset);
        const Real ratio = m_star / n_four_thirds(n);
        const Real oracle = fixtures::bound_root_oracle(n, preset == BoundPreset::paper_literal).convert_to<Real>();
        const std::string tag = std::string(to_string(preset)) + " n=" + std::to_string(n);
        if (std::fabs(m_star - oracle) > 1e-12L * oracle) c.fail(tag + ": closed form disagrees with bisection");
        const bool in_range = n == 1000 ? (ratio >= 1.97L && ratio <= 2.0L) : std::fabs(ratio - 2) <= 1e-2L;
        if (!in_range) c.fail(tag + ": ratio " + fmt(ratio));
        seen += (seen.empty() ? "" : ", ") + tag + " " + fmt(ratio, 6);
      }
    }
    c.note(seen);
    all &= c.report();
  }
  {
    Criterion c(10, "measured m <= m*(n) and M >= alpha^2 >= 4m^2/n^2 on the corpus");
    std::size_t literal_misses = 0;
    for (const auto& e : evals) {
      const BoundReport& b = e.corrected;
      if (!b.dominance) c.fail(e.inst->label + ": m " + std::to_string(b.measured_m) + " > m* " + fmt(b.m_star));
      if (!b.M_at_least_alpha_squared || !b.alpha_squared_at_least_average) c.fail(e.inst->label + ": chain");
      if (!b.cr_matches_degree_form) c.fail(e.inst->label + ": cr != (n^2 - n - M)/8");
      literal_misses += e.literal.dominance ? 0 : 1;
    }
    c.note("corrected preset; paper-literal root falls below measured m on " + std::to_string(literal_misses) +
           " instances");
    all &= c.report();
  }
  {
    Criterion c(11, "full analyze: brute force n = 400 and rotational n = 2000 each under 10 s");
    const std::vector<BoundPreset> both{BoundPreset::paper_literal, BoundPreset::corrected};
    std::string timing;
    for (auto [n, method] : {std::pair{std::size_t{400}, Enumerator::bruteforce},
                             std::pair{std::size_t{2000}, Enumerator::rotational}}) {
      const PointSet ps = fixtures::random_set(n, 1);
      InstanceSource src;
      src.kind = "random";
      src.seed = 1;
      AnalysisReport rep;
      const double t = seconds([&] { rep = analyze(ps, src, both, method); });
      const std::string tag = std::string(to_string(method)) + " n=" + std::to_string(n);
      if (t >= 10) c.fail(tag + ": " + fmt(t, 3) + " s");
      if (!rep.ok()) c.fail(tag + ": report not ok");
      timing += (timing.empty() ? "" : ", ") + tag + " " + fmt(t, 3) + " s";
    }
    c.note(timing);
    all &= c.report();
  }
  return all ? 0 : 1;
}
