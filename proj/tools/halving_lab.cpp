// halving_lab: generate point sets, enumerate halving graphs, audit the
// crossing/degree identity and evaluate the cubic upper bound on m.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <halving/halving.hpp>
#include <halving/report.hpp>

namespace {

using namespace halving;

constexpr int kExitAssertionFailed = 1;
constexpr int kExitError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HALVING_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, std::string("HALVING_LAB_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

GeneratorKind parse_kind(const std::string& kind) {
  static const std::map<std::string, GeneratorKind> kinds = {
      {"random", GeneratorKind::random_square},
      {"convex", GeneratorKind::convex_position},
      {"dense", GeneratorKind::dense_grid},
  };
  return kinds.at(kind);
}

std::vector<BoundPreset> parse_presets(const std::string& preset) {
  if (preset == "paper-literal") return {BoundPreset::paper_literal};
  if (preset == "corrected") return {BoundPreset::corrected};
  return {BoundPreset::paper_literal, BoundPreset::corrected};
}

/// "4..40:2,100,1000" -> 4,6,...,40,100,1000 (sorted, unique).
std::vector<std::uint64_t> parse_n_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--n-list", "bad entry '" + item + "'");
    }
    return std::stoull(s);
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto dots = item.find(".."); dots != std::string::npos) {
      std::string hi = item.substr(dots + 2), step = "2";
      if (auto colon = hi.find(':'); colon != std::string::npos) {
        step = hi.substr(colon + 1);
        hi = hi.substr(0, colon);
      }
      const std::uint64_t a = number(item.substr(0, dots)), b = number(hi), s = number(step);
      if (s == 0 || a > b) throw CLI::ValidationError("--n-list", "bad range '" + item + "'");
      for (std::uint64_t n = a; n <= b; n += s) out.push_back(n);
    } else {
      out.push_back(number(item));
    }
  }
  if (out.empty()) throw CLI::ValidationError("--n-list", "empty n list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GeneratorFlags {
  std::string kind = "random";
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  Coord bbox = kDefaultCoordinateCap;
  std::string gamma = "4";

  void attach(CLI::App* cmd, bool n_required) {
    cmd->add_option("--kind", kind, "Generator")->check(CLI::IsMember({"random", "convex", "dense"}));
    auto* n_opt = cmd->add_option("--n", n, "Number of points (even)");
    if (n_required) n_opt->required();
    cmd->add_option("--seed", seed, "RNG seed (default: $HALVING_LAB_SEED or 0)");
    cmd->add_option("--bbox", bbox, "Coordinate half-width")->check(CLI::PositiveNumber);
    cmd->add_option("--gamma", gamma, "Density bound for --kind dense (integer, a/b or decimal)");
  }

  GeneratorSpec spec(std::uint64_t seed_value) const {
    GeneratorSpec s;
    s.kind = parse_kind(kind);
    s.n = n;
    s.seed = seed_value;
    s.bbox = bbox;
    s.gamma = parse_rational(gamma);
    return s;
  }

  InstanceSource source(std::uint64_t seed_value) const {
    InstanceSource src;
    src.kind = kind;
    src.seed = seed_value;
    src.n = n;
    src.bbox = bbox;
    if (kind == "dense") src.gamma = gamma;
    return src;
  }
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct AnalyzeFlags {
  GeneratorFlags gen;
  std::string input;
  std::string preset = "both";
  std::string format = "text";
  std::string method = "rotational";
  std::string out;
  std::string graph_out;
  bool check_oracle = false;

  void attach(CLI::App* cmd, bool with_preset) {
    cmd->add_option("input", input, "Point-set file (otherwise use generator flags)");
    gen.attach(cmd, false);
    if (with_preset) {
      cmd->add_option("--preset", preset, "Bound coefficients")
          ->check(CLI::IsMember({"paper-literal", "corrected", "both"}));
    }
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--method", method, "Halving-edge enumerator")->check(CLI::IsMember({"bruteforce", "rotational"}));
    cmd->add_flag("--check-oracle", check_oracle, "Also run the other enumerator and require identical edge sets");
    cmd->add_option("--out", out, "Write the report here instead of stdout");
    cmd->add_option("--graph-out", graph_out, "Write the halving-graph dump here");
  }
};

int run_generate(const GeneratorFlags& flags, const std::string& out_path) {
  const std::uint64_t seed = flags.seed.value_or(default_seed());
  const PointSet ps = generate(flags.spec(seed));
  write_pointset(out_path, ps);
  std::cout << out_path << ' ' << ps.size() << '\n';
  return 0;
}

int run_analyze(const AnalyzeFlags& flags, bool with_bounds) {
  PointSet ps;
  InstanceSource src;
  if (!flags.input.empty()) {
    ps = read_pointset(flags.input);
    src.kind = "file";
    src.path = flags.input;
  } else {
    if (flags.gen.n == 0) throw CLI::ValidationError("analyze", "give an input file or --n with generator flags");
    const std::uint64_t seed = flags.gen.seed.value_or(default_seed());
    ps = generate(flags.gen.spec(seed));
    src = flags.gen.source(seed);
  }
  const auto presets = with_bounds ? parse_presets(flags.preset) : std::vector<BoundPreset>{};
  const Enumerator method = flags.method == "bruteforce" ? Enumerator::bruteforce : Enumerator::rotational;
  const AnalysisReport rep = analyze(ps, src, presets, method, flags.check_oracle);

  if (!flags.graph_out.empty()) {
    std::ofstream g(flags.graph_out, std::ios::binary);
    if (!g) throw Error(ErrorCode::invalid_argument, "cannot open '" + flags.graph_out + "'");
    write_graph_dump(g, rep.measurement.graph);
  }

  Output out(flags.out);
  std::ostream& os = out.stream();
  if (flags.format == "json") {
    os << to_json(rep).dump(2) << '\n';
  } else if (flags.format == "csv") {
    os << kCsvHeader << '\n';
    for (const auto& b : rep.bounds) os << to_csv(csv_row(b, rep.source.seed)) << '\n';
  } else {
    write_text(os, rep);
  }
  return rep.ok() ? 0 : kExitAssertionFailed;
}

struct SweepFlags {
  GeneratorFlags gen;
  std::string n_list;
  std::size_t seeds_per_n = 1;
  std::string preset = "corrected";
  std::string out;
  unsigned jobs = 1;
  bool bound_only = false;
};

int run_sweep(const SweepFlags& flags) {
  const auto ns = parse_n_list(flags.n_list);
  const auto presets = parse_presets(flags.preset);
  Output out(flags.out);
  std::ostream& os = out.stream();
  os << kCsvHeader << '\n';

  if (flags.bound_only) {
    bool failed = false;
    for (std::uint64_t n : ns) {
      for (BoundPreset preset : presets) {
        try {
          os << to_csv(csv_row(asymptotic_probe({n}, preset).front())) << '\n';
        } catch (const Error& e) {
          failed = true;
          os << to_csv(CsvRow{n, std::string(to_string(preset)), {}, {}, {}, {}, e.what()}) << '\n';
        }
      }
    }
    return failed ? kExitAssertionFailed : 0;
  }

  const std::uint64_t base_seed = flags.gen.seed.value_or(default_seed());
  struct Task {
    std::uint64_t n;
    std::uint64_t seed;
    std::vector<CsvRow> rows;
    bool identity = false;
    bool ok = false;
  };
  std::vector<Task> tasks;
  for (std::uint64_t n : ns) {
    for (std::size_t s = 0; s < flags.seeds_per_n; ++s) tasks.push_back({n, base_seed + s, {}, false, false});
  }

  auto work = [&](Task& t) {
    try {
      GeneratorSpec spec = flags.gen.spec(t.seed);
      spec.n = t.n;
      const Measurement meas = measure(generate(spec));
      t.identity = meas.identity.holds;
      t.ok = t.identity;
      for (BoundPreset preset : presets) {
        const BoundReport b = bound_report(meas, preset);
        if (preset == BoundPreset::corrected) t.ok = t.ok && b.dominance;
        t.rows.push_back(csv_row(b, t.seed));
      }
      if (std::find(presets.begin(), presets.end(), BoundPreset::corrected) == presets.end()) {
        t.ok = t.ok && bound_report(meas, BoundPreset::corrected).dominance;
      }
    } catch (const std::exception& e) {
      t.rows.clear();
      for (BoundPreset preset : presets) {
        t.rows.push_back(CsvRow{t.n, std::string(to_string(preset)), {}, {}, {}, t.seed, e.what()});
      }
      t.ok = false;
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) work(tasks[i]);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(flags.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t identity_pass = 0;
  bool all_ok = true;
  for (const Task& t : tasks) {
    for (const CsvRow& row : t.rows) os << to_csv(row) << '\n';
    identity_pass += t.identity ? 1 : 0;
    all_ok = all_ok && t.ok;
  }
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.2f", 100.0 * static_cast<double>(identity_pass) / static_cast<double>(tasks.size()));
  std::cerr << "instances " << tasks.size() << ", identity pass rate " << rate << "% (" << identity_pass << '/'
            << tasks.size() << ")\n";
  return all_ok ? 0 : kExitAssertionFailed;
}

int run_solve_cubic(const std::vector<long double>& coeffs) {
  const CubicPolynomial P{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
  if (P.a == 0) throw CLI::ValidationError("solve-cubic", "leading coefficient a must be non-zero");
  const CubicRoots roots = solve_cubic(P);
  std::string line;
  for (Real x : roots.real_roots) {
    if (!line.empty()) line += ' ';
    line += format_real(x == 0 ? Real{0} : x, 12);
  }
  std::cout << line << ", " << to_string(roots.discriminant_class) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Halving-edge graphs, crossing identity audits and the cubic bound on halving edges"};
  app.require_subcommand(1);

  GeneratorFlags gen_flags;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated point set");
  gen_flags.attach(gen_cmd, true);
  gen_cmd->add_option("--out", gen_out, "Output file")->required();

  AnalyzeFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: enumeration, audits and bounds");
  analyze_flags.attach(analyze_cmd, true);

  AnalyzeFlags audit_flags;
  auto* audit_cmd = app.add_subcommand("audit", "Identity, lemma, rotation and chain audits only");
  audit_flags.attach(audit_cmd, false);

  SweepFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over many generated instances");
  sweep_flags.gen.attach(sweep_cmd, false);
  sweep_cmd->add_option("--n-list", sweep_flags.n_list, "e.g. 4..40:2 or 1000,10000")->required();
  sweep_cmd->add_option("--seeds-per-n", sweep_flags.seeds_per_n, "Seeds per n, starting at --seed")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--preset", sweep_flags.preset, "Bound coefficients")
      ->check(CLI::IsMember({"paper-literal", "corrected", "both"}));
  sweep_cmd->add_option("--jobs", sweep_flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--bound-only", sweep_flags.bound_only, "Only the cubic bound, no enumeration");
  sweep_cmd->add_option("--out", sweep_flags.out, "CSV output file");

  std::string probe_list, probe_preset = "both", probe_out;
  auto* probe_cmd = app.add_subcommand("probe", "m*(n) / n^(4/3) for a list of n");
  probe_cmd->add_option("--n-list", probe_list, "e.g. 100,1000,10000")->required();
  probe_cmd->add_option("--preset", probe_preset, "Bound coefficients")
      ->check(CLI::IsMember({"paper-literal", "corrected", "both"}));
  probe_cmd->add_option("--out", probe_out, "CSV output file");

  std::vector<long double> coeffs;
  auto* cubic_cmd = app.add_subcommand("solve-cubic", "Real roots of a x^3 + b x^2 + c x + d");
  cubic_cmd->add_option("coefficients", coeffs, "a b c d")->expected(4)->required();

  try {
    app.parse(argc, argv);
    if (*gen_cmd) return run_generate(gen_flags, gen_out);
    if (*analyze_cmd) return run_analyze(analyze_flags, true);
    if (*audit_cmd) return run_analyze(audit_flags, false);
    if (*sweep_cmd) return run_sweep(sweep_flags);
    if (*probe_cmd) {
      SweepFlags probe;
      probe.n_list = probe_list;
      probe.preset = probe_preset;
      probe.out = probe_out;
      probe.bound_only = true;
      return run_sweep(probe);
    }
    if (*cubic_cmd) return run_solve_cubic(coeffs);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
