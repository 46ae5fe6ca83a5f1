#include "qpst/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "qpst/errors.hpp"

namespace qpst::io {
namespace {

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(round_to_precision(x));
  return a;
}

std::vector<double> read_numbers(const Json& j, const char* key) {
  if (!j.is_array()) throw InvalidArgument(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw InvalidArgument(std::string(key) + " must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const char* q_target_name(QTargetMode m) { return m == QTargetMode::pinch ? "pinch" : "inverse_p"; }

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kPrecision, x);
  return buf;
}

double round_to_precision(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

Json to_json(const ChainSpec& spec) {
  Json j;
  j["n_sites"] = spec.n_sites;
  j["couplings"] = numbers(spec.couplings);
  j["onsite"] = numbers(spec.onsite);
  j["j_max"] = round_to_precision(spec.j_max);
  return j;
}

ChainSpec chain_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("chain document must be a JSON object");
  if (!j.contains("onsite")) throw InvalidArgument("chain document lacks \"onsite\"");
  auto onsite = read_numbers(j.at("onsite"), "onsite");
  std::size_t n = onsite.size();
  if (j.contains("n_sites")) {
    if (!j.at("n_sites").is_number_unsigned()) throw InvalidArgument("n_sites must be a non-negative integer");
    n = j.at("n_sites").get<std::size_t>();
  }
  if (n != onsite.size()) {
    throw InvalidArgument("n_sites is " + std::to_string(n) + " but onsite has " + std::to_string(onsite.size()) +
                          " entries");
  }
  std::vector<double> couplings = j.contains("couplings") ? read_numbers(j.at("couplings"), "couplings")
                                                          : std::vector<double>(n > 0 ? n - 1 : 0, 1.0);
  auto spec = make_chain(std::move(couplings), std::move(onsite));
  if (j.contains("j_max")) {
    if (!j.at("j_max").is_number()) throw InvalidArgument("j_max must be a number");
    const double given = j.at("j_max").get<double>();
    if (std::abs(given - spec.j_max) > 1e-9 * spec.j_max) {
      throw InvalidArgument("j_max does not match the largest coupling");
    }
  }
  return spec;
}

Json to_json(const Peak& peak) {
  return Json{{"t_peak", round_to_precision(peak.time)}, {"f_max", round_to_precision(peak.fidelity)}};
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["p"] = r.p;
  j["spacings"] = numbers(r.spacings);
  j["top_gap"] = round_to_precision(r.top_gap);
  j["body_mean"] = round_to_precision(r.body_mean);
  j["pinch_ratio"] = round_to_precision(r.pinch_ratio);
  j["q_factor"] = round_to_precision(r.q_factor);
  j["q_target"] = round_to_precision(r.q_target);
  j["sigma_body"] = round_to_precision(r.sigma_body);
  j["penalty"] = round_to_precision(r.penalty);
  return j;
}

Json to_json(const GAConfig& c) {
  Json j;
  j["n_sites"] = c.n_sites;
  j["p"] = c.p;
  j["generations"] = c.generations;
  j["population_size"] = c.population_size;
  j["mu_initial"] = c.mu_initial;
  j["mu_final"] = c.mu_final;
  j["mutation_amplitude"] = Json::array({c.amplitude_lo, c.amplitude_hi});
  j["weight_fidelity"] = c.weight_fidelity;
  j["weight_penalty"] = c.weight_penalty;
  j["t_max"] = c.t_max;
  j["peak_grid"] = c.peak_grid;
  j["init_range"] = Json::array({c.init_lo, c.init_hi});
  j["seed"] = c.seed;
  j["tournament_size"] = c.tournament_size;
  j["elite_count"] = c.elite_count;
  j["q_target"] = q_target_name(c.q_target);
  return j;
}

GAConfig ga_config_from_json(const Json& j, std::vector<std::string>& errors) {
  if (!j.is_object()) {
    errors.push_back("config must be a JSON object");
    return {};
  }
  auto get_size = [&](const char* key, std::size_t& out) {
    if (!j.contains(key)) return;
    if (j.at(key).is_number_unsigned()) out = j.at(key).get<std::size_t>();
    else errors.push_back(std::string(key) + " must be a non-negative integer");
  };
  auto get_double = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (j.at(key).is_number()) out = j.at(key).get<double>();
    else errors.push_back(std::string(key) + " must be a number");
  };
  auto get_range = [&](const char* key, double& lo, double& hi) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      lo = v[0].get<double>();
      hi = v[1].get<double>();
    } else {
      errors.push_back(std::string(key) + " must be a [lo, hi] pair of numbers");
    }
  };

  std::size_t n = 3;
  int p = 3;
  get_size("n_sites", n);
  if (j.contains("p")) {
    if (j.at("p").is_number_integer()) p = j.at("p").get<int>();
    else errors.push_back("p must be an integer");
  }
  GAConfig c = default_ga_config(n, p);
  get_size("generations", c.generations);
  get_size("population_size", c.population_size);
  get_double("mu_initial", c.mu_initial);
  get_double("mu_final", c.mu_final);
  get_range("mutation_amplitude", c.amplitude_lo, c.amplitude_hi);
  get_double("weight_fidelity", c.weight_fidelity);
  get_double("weight_penalty", c.weight_penalty);
  get_double("t_max", c.t_max);
  get_size("peak_grid", c.peak_grid);
  get_range("init_range", c.init_lo, c.init_hi);
  if (j.contains("seed")) {
    if (j.at("seed").is_number_unsigned()) c.seed = j.at("seed").get<std::uint64_t>();
    else errors.push_back("seed must be a non-negative integer");
  }
  get_size("tournament_size", c.tournament_size);
  get_size("elite_count", c.elite_count);
  if (j.contains("q_target")) {
    const auto& q = j.at("q_target");
    if (q == "pinch") c.q_target = QTargetMode::pinch;
    else if (q == "inverse_p") c.q_target = QTargetMode::inverse_p;
    else errors.push_back("q_target must be \"inverse_p\" or \"pinch\"");
  }
  static const std::set<std::string> known = {
      "n_sites",         "p",       "generations", "population_size", "mu_initial",      "mu_final",
      "mutation_amplitude", "weight_fidelity", "weight_penalty", "t_max", "peak_grid", "init_range",
      "seed",            "tournament_size", "elite_count", "q_target"};
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) errors.push_back("unknown config key \"" + item.key() + "\"");
  }
  return c;
}

Json to_json(const Evaluation& ev) {
  Json j;
  j["f_max"] = round_to_precision(ev.f_max);
  j["t_peak"] = round_to_precision(ev.t_peak);
  j["upsilon"] = round_to_precision(ev.upsilon);
  j["fitness"] = round_to_precision(ev.fitness);
  j["degenerate"] = ev.degenerate;
  j["eigenvalues"] = numbers(ev.eigenvalues);
  return j;
}

Json to_json(const GAResult& r) {
  Json j;
  j["config"] = to_json(r.config);
  j["seed"] = r.config.seed;
  Json best;
  best["onsite"] = numbers(r.best.onsite);
  best["onsite_gauge_fixed"] = numbers(gauge_fixed(r.best.onsite, Gauge::min_zero));
  if (r.best.eval) best["evaluation"] = to_json(*r.best.eval);
  j["best"] = best;
  Json hist = Json::array();
  for (std::size_t g = 0; g < r.history.size(); ++g) {
    const auto& h = r.history[g];
    hist.push_back(Json{{"generation", g},
                        {"best_fitness", round_to_precision(h.best_fitness)},
                        {"mean_fitness", round_to_precision(h.mean_fitness)},
                        {"best_f_max", round_to_precision(h.best_f_max)},
                        {"best_upsilon", round_to_precision(h.best_upsilon)}});
  }
  j["history"] = hist;
  return j;
}

Json best_spec_json(const GAResult& r) {
  const auto onsite = gauge_fixed(r.best.onsite, Gauge::min_zero);
  Json j = to_json(uniform_chain(onsite.size(), onsite));
  j["p"] = r.config.p;
  j["seed"] = r.config.seed;
  if (r.best.eval) {
    j["f_max"] = round_to_precision(r.best.eval->f_max);
    j["t_peak"] = round_to_precision(r.best.eval->t_peak);
    j["upsilon"] = round_to_precision(r.best.eval->upsilon);
    j["fitness"] = round_to_precision(r.best.eval->fitness);
  }
  j["ga_config"] = to_json(r.config);
  return j;
}

Json to_json(const MonteCarloResult& mc, bool include_trace) {
  Json j;
  j["xi"] = round_to_precision(mc.xi);
  j["samples"] = mc.samples;
  j["seed"] = mc.seed;
  j["mean_f_max"] = round_to_precision(mc.mean_f_max);
  j["stddev_f_max"] = round_to_precision(mc.stddev_f_max);
  j["stderr_f_max"] = round_to_precision(mc.stderr_f_max);
  j["mean_trace_max"] = round_to_precision(mc.mean_trace_peak.fidelity);
  j["mean_trace_t_max"] = round_to_precision(mc.mean_trace_peak.time);
  if (include_trace) {
    j["times"] = numbers(mc.times);
    j["mean_trace"] = numbers(mc.mean_trace);
    j["std_trace"] = numbers(mc.std_trace);
  }
  return j;
}

Json to_json(const RobustnessReport& rep) {
  Json j;
  j["spec"] = to_json(rep.spec);
  j["t_max"] = round_to_precision(rep.t_max);
  j["base"] = to_json(rep.base);
  Json rounding = Json::array();
  for (const auto& r : rep.rounding) {
    rounding.push_back(Json{{"sig_figs", r.sig_figs},
                            {"onsite", numbers(r.onsite)},
                            {"f_max", round_to_precision(r.peak.fidelity)},
                            {"t_peak", round_to_precision(r.peak.time)}});
  }
  j["rounding"] = rounding;
  Json mc = Json::array();
  for (const auto& m : rep.monte_carlo) mc.push_back(to_json(m));
  j["monte_carlo"] = mc;
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

ChainSpec read_chain(const std::filesystem::path& path) { return chain_from_json(read_json(path)); }

void write_csv(const std::filesystem::path& path, const Table& table, const std::vector<std::string>& comments) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    if (!have_header) {
      while (std::getline(ss, cell, ',')) t.header.push_back(cell);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw InvalidArgument("non-numeric CSV cell \"" + cell + "\" in " + path.string());
      row.push_back(v);
    }
    if (row.size() != t.header.size()) throw InvalidArgument("ragged CSV row in " + path.string());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table trace_table(const FidelityTrace& tr) {
  Table t{{"t", "f_target", "f_initial"}, {}};
  for (std::size_t k = 0; k < tr.times.size(); ++k) t.rows.push_back({tr.times[k], tr.to_target[k], tr.to_initial[k]});
  return t;
}

Table history_table(const GAResult& r) {
  Table t{{"generation", "best_fitness", "mean_fitness", "best_f_max", "best_upsilon"}, {}};
  for (std::size_t g = 0; g < r.history.size(); ++g) {
    const auto& h = r.history[g];
    t.rows.push_back({static_cast<double>(g), h.best_fitness, h.mean_fitness, h.best_f_max, h.best_upsilon});
  }
  return t;
}

Table mean_trace_table(const MonteCarloResult& mc) {
  Table t{{"t", "mean", "std"}, {}};
  for (std::size_t k = 0; k < mc.times.size(); ++k) t.rows.push_back({mc.times[k], mc.mean_trace[k], mc.std_trace[k]});
  return t;
}

Table rounding_table(const RobustnessReport& rep) {
  Table t{{"sig_figs", "f_max", "t_peak"}, {}};
  for (const auto& r : rep.rounding) t.rows.push_back({static_cast<double>(r.sig_figs), r.peak.fidelity, r.peak.time});
  return t;
}

Table monte_carlo_table(const RobustnessReport& rep) {
  Table t{{"xi", "samples", "mean_f_max", "stddev_f_max", "stderr_f_max", "mean_trace_max", "mean_trace_t_max"}, {}};
  for (const auto& m : rep.monte_carlo) {
    t.rows.push_back({m.xi, static_cast<double>(m.samples), m.mean_f_max, m.stddev_f_max, m.stderr_f_max,
                      m.mean_trace_peak.fidelity, m.mean_trace_peak.time});
  }
  return t;
}

}  // namespace qpst::io
