#include "qpst/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "qpst/chain.hpp"
#include "qpst/dynamics.hpp"
#include "qpst/eigensystem.hpp"
#include "qpst/errors.hpp"
#include "qpst/genetic.hpp"
#include "qpst/io.hpp"
#include "qpst/parallel.hpp"
#include "qpst/robustness.hpp"
#include "qpst/spectrum.hpp"

#ifndef QPST_VERSION
#define QPST_VERSION "dev"
#endif

namespace qpst::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 0;
  std::string out_dir;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  fs::path out_dir;
  unsigned threads = 1;
};

// Collects the outputs of one command and appends a line to manifest.jsonl
// once the command has succeeded.
class Manifest {
 public:
  Manifest(std::string command, fs::path dir)
      : command_(std::move(command)), dir_(std::move(dir)), start_(std::chrono::steady_clock::now()) {}

  void set_config(Json config) { config_ = std::move(config); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  fs::path output(const std::string& name) {
    fs::path p = dir_ / name;
    outputs_.push_back(p.string());
    return p;
  }

  void commit() const {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["config"] = config_;
    if (seed_) j["seed"] = *seed_;
    else j["seed"] = nullptr;
    j["version"] = QPST_VERSION;
    j["outputs"] = outputs_;
    j["duration_s"] = seconds;
    fs::create_directories(dir_);
    std::ofstream out(dir_ / "manifest.jsonl", std::ios::app);
    out << j.dump() << '\n';
  }

 private:
  std::string command_;
  fs::path dir_;
  std::chrono::steady_clock::time_point start_;
  Json config_ = Json::object();
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> outputs_;
};

std::string number_tag(double x) { return io::format_number(x); }

// "3..7" or "3,4,6".
std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  auto to_size = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad range \"" + text + "\"");
    }
    if (pos != s.size()) throw UsageError("bad range \"" + text + "\"");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = to_size(text.substr(0, dots));
    const auto hi = to_size(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range \"" + text + "\"");
    for (auto n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_size(item));
  if (out.empty()) throw UsageError("empty range \"" + text + "\"");
  return out;
}

void require_odd(int p) {
  if (p < 1 || p % 2 == 0) throw UsageError("p must be a positive odd integer, got " + std::to_string(p));
}

ChainSpec load_spec(const std::string& path) {
  try {
    return io::read_chain(path);
  } catch (const InvalidArgument& e) {
    throw NumericalError(std::string("invalid chain spec: ") + e.what());
  }
}

// ---------------------------------------------------------------- evolve

struct EvolveArgs {
  std::string spec_file;
  std::size_t christandl = 0;
  double j0 = 0.0;
  std::vector<double> parabolic;
  std::size_t uniform = 0;
  std::vector<double> onsite;
  double t_max = kDefaultTimeWindow;
  std::size_t steps = 3001;
  std::size_t source = 1;
  std::size_t target = 0;
  std::string stem = "evolve";
};

ChainSpec evolve_spec(const EvolveArgs& a, std::string& protocol) {
  const int chosen = !a.spec_file.empty() + (a.christandl > 0) + !a.parabolic.empty() + (a.uniform > 0);
  if (chosen == 0) throw UsageError("give a spec file or one of --christandl, --parabolic, --uniform");
  if (chosen > 1) throw UsageError("conflicting chain sources: give exactly one protocol");
  if (!a.onsite.empty() && a.uniform == 0) throw UsageError("--onsite requires --uniform");
  if (a.j0 != 0.0 && a.christandl == 0) throw UsageError("--j0 requires --christandl");

  if (!a.spec_file.empty()) {
    protocol = "file";
    return load_spec(a.spec_file);
  }
  if (a.christandl > 0) {
    if (a.christandl < 2) throw UsageError("--christandl needs N >= 2");
    if (a.j0 < 0.0) throw UsageError("--j0 must be positive");
    protocol = "christandl";
    if (a.j0 > 0.0) return christandl_chain(a.christandl, a.j0, false);
    return christandl_chain(a.christandl, 1.0, true);
  }
  if (!a.parabolic.empty()) {
    const double n = a.parabolic[0];
    if (n < 2 || n != std::floor(n)) throw UsageError("--parabolic N must be an integer >= 2");
    protocol = "parabolic";
    const auto sites = static_cast<std::size_t>(n);
    return uniform_chain(sites, parabolic_onsite(sites, a.parabolic[1]));
  }
  if (a.uniform < 2) throw UsageError("--uniform needs N >= 2");
  protocol = "uniform";
  std::vector<double> onsite = a.onsite.empty() ? std::vector<double>(a.uniform, 0.0) : a.onsite;
  if (onsite.size() != a.uniform) {
    throw UsageError("--onsite has " + std::to_string(onsite.size()) + " values for " + std::to_string(a.uniform) +
                     " sites");
  }
  return uniform_chain(a.uniform, std::move(onsite));
}

int cmd_evolve(const EvolveArgs& a, Context& ctx) {
  std::string protocol;
  const ChainSpec spec = evolve_spec(a, protocol);
  const std::size_t target = a.target == 0 ? spec.n_sites : a.target;
  if (a.source < 1 || a.source > spec.n_sites || target < 1 || target > spec.n_sites) {
    throw UsageError("--source and --target must lie in 1.." + std::to_string(spec.n_sites));
  }
  if (!(a.t_max > 0.0)) throw UsageError("--t-max must be positive");
  if (a.steps < 2) throw UsageError("--steps must be at least 2");

  const auto eig = diagonalize(build_hamiltonian(spec));
  const auto tr = trace(eig, Site{a.source}, Site{target}, a.t_max, a.steps);
  const Peak peak = max_fidelity(eig, Site{a.source}, Site{target}, a.t_max);

  Manifest manifest("evolve", ctx.out_dir);
  Json config;
  config["protocol"] = protocol;
  if (!a.spec_file.empty()) config["spec_file"] = a.spec_file;
  config["spec"] = io::to_json(spec);
  config["t_max"] = a.t_max;
  config["steps"] = a.steps;
  config["source"] = a.source;
  config["target"] = target;
  manifest.set_config(config);

  io::write_csv(manifest.output(a.stem + ".trace.csv"), io::trace_table(tr));
  Json pj = io::to_json(peak);
  pj["source"] = a.source;
  pj["target"] = target;
  pj["t_max"] = a.t_max;
  pj["spec"] = io::to_json(spec);
  io::write_json(manifest.output(a.stem + ".peak.json"), pj);
  manifest.commit();

  ctx.out << "f_max " << io::format_number(peak.fidelity) << " at t " << io::format_number(peak.time) << '\n';
  return kOk;
}

// -------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> generations;
  std::optional<std::size_t> population;
  std::string stem;
};

GAConfig load_ga_config(const OptimizeArgs& a) {
  io::Json j;
  try {
    j = io::read_json(a.config_file);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> errors;
  GAConfig cfg = io::ga_config_from_json(j, errors);
  if (a.seed) cfg.seed = *a.seed;
  if (a.generations) cfg.generations = *a.generations;
  if (a.population) cfg.population_size = *a.population;
  for (auto& e : validate(cfg)) errors.push_back(std::move(e));
  if (!errors.empty()) {
    std::string msg = "invalid GA config:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw UsageError(msg);
  }
  return cfg;
}

int cmd_optimize(const OptimizeArgs& a, Context& ctx) {
  const GAConfig cfg = load_ga_config(a);
  const std::string stem =
      a.stem.empty() ? "ga_n" + std::to_string(cfg.n_sites) + "_p" + std::to_string(cfg.p) : a.stem;

  const GAResult result = run_ga(cfg, RunOptions{ctx.threads});

  Manifest manifest("optimize", ctx.out_dir);
  Json config = io::to_json(cfg);
  config["config_file"] = a.config_file;
  manifest.set_config(config);
  manifest.set_seed(cfg.seed);
  io::write_json(manifest.output(stem + ".result.json"), io::to_json(result));
  io::write_csv(manifest.output(stem + ".history.csv"), io::history_table(result));
  io::write_json(manifest.output(stem + ".best.json"), io::best_spec_json(result));
  manifest.commit();

  const auto& ev = *result.best.eval;
  ctx.out << "best f_max " << io::format_number(ev.f_max) << " upsilon " << io::format_number(ev.upsilon)
          << " fitness " << io::format_number(ev.fitness) << " t_peak " << io::format_number(ev.t_peak) << '\n';
  return kOk;
}

// -------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::vector<std::string> spec_files;
  int p = 0;
  std::string q_target = "inverse_p";
  std::string stem = "spectrum";
};

int cmd_spectrum(const SpectrumArgs& a, Context& ctx) {
  require_odd(a.p);
  if (a.q_target != "inverse_p" && a.q_target != "pinch") throw UsageError("--q-target must be inverse_p or pinch");

  Json reports = Json::array();
  io::Table table;
  table.header.push_back("level");
  std::vector<std::vector<double>> columns;
  for (const auto& file : a.spec_files) {
    const ChainSpec spec = load_spec(file);
    const auto eigs = eigenvalues(build_hamiltonian(spec));
    const double q = a.q_target == "pinch" ? pinch_q_target(spec.n_sites, a.p) : inverse_p_target(a.p);
    Json entry;
    entry["spec_file"] = file;
    entry["n_sites"] = spec.n_sites;
    entry["eigenvalues"] = Json::array();
    for (double e : eigs) entry["eigenvalues"].push_back(io::round_to_precision(e));
    try {
      entry["report"] = io::to_json(spectral_report(eigs, a.p, q));
      entry["degenerate"] = false;
    } catch (const DegenerateSpectrum&) {
      entry["report"] = Json{{"p", a.p}, {"q_target", io::round_to_precision(q)}, {"penalty", kDegeneratePenalty}};
      entry["degenerate"] = true;
      ctx.err << "warning: degenerate spectrum in " << file << ", penalty set to "
              << io::format_number(kDegeneratePenalty) << '\n';
    }
    reports.push_back(entry);
    table.header.push_back("E_" + std::to_string(columns.size() + 1));
    columns.push_back(eigs);
  }
  if (columns.size() > 1) {
    for (std::size_t c = 1; c < columns.size(); ++c) {
      if (columns[c].size() != columns[0].size()) throw UsageError("spectrum CSV needs chains of equal length");
    }
  }
  for (std::size_t k = 0; k < columns[0].size(); ++k) {
    std::vector<double> row{static_cast<double>(k + 1)};
    for (std::size_t c = 0; c < columns.size(); ++c) row.push_back(columns[c][k] + static_cast<double>(c + 1));
    table.rows.push_back(std::move(row));
  }

  Manifest manifest("spectrum", ctx.out_dir);
  manifest.set_config(Json{{"spec_files", a.spec_files}, {"p", a.p}, {"q_target", a.q_target}});
  Json doc{{"p", a.p}, {"reports", reports}};
  io::write_json(manifest.output(a.stem + ".report.json"), doc);
  io::write_csv(manifest.output(a.stem + ".spectra.csv"), table,
                {"display shift: column E_j holds every eigenvalue of chain j plus j (eps_i + j on every site)",
                 "units of J_max"});
  manifest.commit();

  for (const auto& r : reports) {
    ctx.out << r["spec_file"].get<std::string>() << ": penalty " << io::format_number(r["report"]["penalty"].get<double>());
    if (r["report"].contains("pinch_ratio")) {
      ctx.out << " pinch_ratio " << io::format_number(r["report"]["pinch_ratio"].get<double>());
    }
    ctx.out << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------ robustness

struct RobustnessArgs {
  std::string spec_file;
  std::vector<int> sig_figs{4, 3, 2, 1};
  std::vector<double> xi{0.05, 0.1};
  long long samples = 1000;
  std::uint64_t seed = 1;
  double t_max = kDefaultTimeWindow;
  std::size_t trace_steps = 3001;
  std::string stem = "robustness";
};

int cmd_robustness(const RobustnessArgs& a, Context& ctx) {
  if (a.samples < 1) throw UsageError("--samples must be at least 1");
  for (int s : a.sig_figs) {
    if (s < 1) throw UsageError("--sig-figs entries must be positive");
  }
  for (double x : a.xi) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw UsageError("--xi entries must be finite and non-negative");
  }
  if (!(a.t_max > 0.0)) throw UsageError("--t-max must be positive");
  const ChainSpec spec = load_spec(a.spec_file);

  MonteCarloOptions opts;
  opts.threads = ctx.threads;
  opts.trace_steps = a.trace_steps;
  const auto report =
      robustness_report(spec, a.sig_figs, a.xi, static_cast<std::size_t>(a.samples), a.t_max, a.seed, opts);

  Manifest manifest("robustness", ctx.out_dir);
  manifest.set_config(Json{{"spec_file", a.spec_file},
                           {"sig_figs", a.sig_figs},
                           {"xi", a.xi},
                           {"samples", a.samples},
                           {"t_max", a.t_max},
                           {"trace_steps", a.trace_steps}});
  manifest.set_seed(a.seed);
  io::write_json(manifest.output(a.stem + ".json"), io::to_json(report));
  io::write_csv(manifest.output(a.stem + ".rounding.csv"), io::rounding_table(report));
  io::write_csv(manifest.output(a.stem + ".monte_carlo.csv"), io::monte_carlo_table(report));
  for (const auto& mc : report.monte_carlo) {
    io::write_csv(manifest.output(a.stem + ".trace_xi" + number_tag(mc.xi) + ".csv"), io::mean_trace_table(mc),
                  {"mean fidelity over " + std::to_string(mc.samples) + " perturbed chains, xi = " + number_tag(mc.xi)});
  }
  manifest.commit();

  ctx.out << "base f_max " << io::format_number(report.base.fidelity) << " at t "
          << io::format_number(report.base.time) << '\n';
  for (const auto& r : report.rounding) {
    ctx.out << r.sig_figs << " s.f.: f_max " << io::format_number(r.peak.fidelity) << '\n';
  }
  for (const auto& mc : report.monte_carlo) {
    ctx.out << "xi " << number_tag(mc.xi) << ": mean f_max " << io::format_number(mc.mean_f_max)
            << ", max of mean trace " << io::format_number(mc.mean_trace_peak.fidelity) << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------- families

struct FamiliesArgs {
  std::string n_range = "3..7";
  std::vector<int> p{3, 5, 7};
  std::uint64_t seed = 1;
  std::string fixtures = "fixtures";
  bool no_run = false;
  std::optional<std::size_t> generations;
  std::optional<std::size_t> population;
  std::string stem = "families";
};

int cmd_families(const FamiliesArgs& a, Context& ctx) {
  const auto ns = parse_range(a.n_range);
  for (auto n : ns) {
    if (n < 3) throw UsageError("--n-range entries must be at least 3");
  }
  for (int p : a.p) require_odd(p);

  Manifest manifest("families", ctx.out_dir);
  io::Table table{{"n", "p", "t_peak", "f_max", "from_fixture", "christandl_t", "christandl_t_j0"}, {}};
  Json loaded = Json::array();
  for (auto n : ns) {
    // The scaled chain transfers first at (pi / 2) J0_max; the window stops
    // before the second transfer.
    const double t_first = (std::numbers::pi / 2.0) * christandl_chain(n, 1.0, false).j_max;
    const auto baseline_eig = diagonalize(build_hamiltonian(christandl_chain(n, 1.0, true)));
    const Peak baseline = max_fidelity(baseline_eig, Site{1}, Site{n}, 1.5 * t_first);
    for (int p : a.p) {
      const fs::path fixture = fs::path(a.fixtures) / ("ga_n" + std::to_string(n) + "_p" + std::to_string(p) + ".json");
      ChainSpec spec;
      bool from_fixture = fs::exists(fixture);
      if (from_fixture) {
        spec = load_spec(fixture.string());
        loaded.push_back(fixture.string());
      } else {
        if (a.no_run) throw NumericalError("missing fixture " + fixture.string() + " and --no-run given");
        GAConfig cfg = default_ga_config(n, p);
        cfg.q_target = QTargetMode::pinch;
        cfg.seed = a.seed;
        if (a.generations) cfg.generations = *a.generations;
        if (a.population) cfg.population_size = *a.population;
        const auto errors = validate(cfg);
        if (!errors.empty()) throw UsageError("invalid GA settings: " + errors.front());
        const auto result = run_ga(cfg, RunOptions{ctx.threads});
        spec = uniform_chain(n, gauge_fixed(result.best.onsite));
      }
      const auto eig = diagonalize(build_hamiltonian(spec));
      const Peak peak = max_fidelity(eig, Site{1}, Site{n});
      table.rows.push_back({static_cast<double>(n), static_cast<double>(p), peak.time, peak.fidelity,
                            from_fixture ? 1.0 : 0.0, baseline.time, std::numbers::pi / 2.0});
    }
  }

  Json config{{"n_range", a.n_range}, {"p", a.p}, {"fixtures", a.fixtures}, {"no_run", a.no_run},
              {"fixtures_loaded", loaded}};
  if (a.generations) config["generations"] = *a.generations;
  if (a.population) config["population_size"] = *a.population;
  manifest.set_config(config);
  manifest.set_seed(a.seed);
  io::write_csv(manifest.output(a.stem + ".csv"), table,
                {"christandl_t: couplings scaled so J_max = 1; christandl_t_j0: unscaled, J0 = 1"});
  manifest.commit();

  for (const auto& row : table.rows) {
    ctx.out << "N " << row[0] << " p " << row[1] << ": t_peak " << io::format_number(row[2]) << " f_max "
            << io::format_number(row[3]) << " (christandl " << io::format_number(row[5]) << ")\n";
  }
  return kOk;
}

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("QPST_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("QPST_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return default_thread_count();
}

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QPST_OUT_DIR"); env && *env) return env;
  return ".";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect and quasi-perfect state transfer in spin chains"};
  app.name(args.empty() ? "qpst" : args[0]);
  app.set_version_flag("--version", QPST_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "Worker cap (default: QPST_THREADS or all cores)");
  app.add_option("--out-dir", g.out_dir, "Output directory (default: QPST_OUT_DIR or .)");

  EvolveArgs ev;
  auto* evolve = app.add_subcommand("evolve", "Time evolution of a single excitation");
  evolve->add_option("spec", ev.spec_file, "Chain spec JSON");
  evolve->add_option("--christandl", ev.christandl, "Christandl chain of N sites, J_max = 1");
  evolve->add_option("--j0", ev.j0, "Use unscaled Christandl couplings J0 sqrt(i(N-i))");
  evolve->add_option("--parabolic", ev.parabolic, "N eps0: uniform couplings, parabolic on-site")->expected(2);
  evolve->add_option("--uniform", ev.uniform, "Uniform couplings with N sites");
  evolve->add_option("--onsite", ev.onsite, "On-site energies for --uniform")->delimiter(',');
  evolve->add_option("--t-max", ev.t_max, "End of the time window");
  evolve->add_option("--steps", ev.steps, "Trace samples on [0, t-max]");
  evolve->add_option("--source", ev.source, "Initial site (1-based)");
  evolve->add_option("--target", ev.target, "Target site (default: last)");
  evolve->add_option("--out", ev.stem, "Output file stem");

  OptimizeArgs op;
  auto* optimize = app.add_subcommand("optimize", "Genetic search for on-site energies");
  optimize->add_option("config", op.config_file, "GA config JSON")->required();
  optimize->add_option("--seed", op.seed, "Override the config seed");
  optimize->add_option("--generations", op.generations, "Override the generation count");
  optimize->add_option("--population", op.population, "Override the population size");
  optimize->add_option("--out", op.stem, "Output file stem (default: ga_n<N>_p<p>)");

  SpectrumArgs sp;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral pinch analysis");
  spectrum->add_option("specs", sp.spec_files, "Chain spec JSON files")->required();
  spectrum->add_option("--p", sp.p, "Odd pinch denominator")->required();
  spectrum->add_option("--q-target", sp.q_target, "inverse_p or pinch");
  spectrum->add_option("--out", sp.stem, "Output file stem");

  RobustnessArgs rb;
  auto* robustness = app.add_subcommand("robustness", "Rounding and disorder sensitivity");
  robustness->add_option("spec", rb.spec_file, "Chain spec JSON")->required();
  robustness->add_option("--sig-figs", rb.sig_figs, "Significant figures to test")->delimiter(',');
  robustness->add_option("--xi", rb.xi, "Disorder strengths")->delimiter(',');
  robustness->add_option("--samples", rb.samples, "Monte Carlo samples per xi");
  robustness->add_option("--seed", rb.seed, "Random seed");
  robustness->add_option("--t-max", rb.t_max, "End of the time window");
  robustness->add_option("--trace-steps", rb.trace_steps, "Samples of the mean trace");
  robustness->add_option("--out", rb.stem, "Output file stem");

  FamiliesArgs fa;
  auto* families = app.add_subcommand("families", "Transfer times across chain lengths and p");
  families->add_option("--n-range", fa.n_range, "Chain lengths, e.g. 3..7");
  families->add_option("--p", fa.p, "Odd p values")->delimiter(',');
  families->add_option("--seed", fa.seed, "Seed for GA runs of missing fixtures");
  families->add_option("--fixtures", fa.fixtures, "Fixture directory");
  families->add_flag("--no-run", fa.no_run, "Fail instead of running the GA for missing fixtures");
  families->add_option("--generations", fa.generations, "Generations for GA runs");
  families->add_option("--population", fa.population, "Population for GA runs");
  families->add_option("--out", fa.stem, "Output file stem");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx{out, err, resolve_out_dir(g.out_dir), resolve_threads(g.threads)};
    if (*evolve) return cmd_evolve(ev, ctx);
    if (*optimize) return cmd_optimize(op, ctx);
    if (*spectrum) return cmd_spectrum(sp, ctx);
    if (*robustness) return cmd_robustness(rb, ctx);
    if (*families) return cmd_families(fa, ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qpst::cli
