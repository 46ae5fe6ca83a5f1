#pragma once

// JSON and CSV representations of the library types. Every number written
// goes through 12 significant digits so files are stable across platforms.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpst/chain.hpp"
#include "qpst/dynamics.hpp"
#include "qpst/genetic.hpp"
#include "qpst/robustness.hpp"
#include "qpst/spectrum.hpp"

namespace qpst::io {

using Json = nlohmann::ordered_json;

constexpr int kPrecision = 12;

std::string format_number(double x);
double round_to_precision(double x);

Json to_json(const ChainSpec& spec);
// Accepts {n_sites, couplings, onsite, j_max}; missing couplings mean a
// uniform chain, missing j_max is derived, missing n_sites is taken from
// onsite. Throws InvalidArgument on malformed documents.
ChainSpec chain_from_json(const Json& j);

Json to_json(const Peak& peak);
Json to_json(const SpectralReport& report);

Json to_json(const GAConfig& cfg);
// Starts from default_ga_config(n_sites, p) and applies the given fields.
// Unknown keys and wrongly typed values are collected into `errors`.
GAConfig ga_config_from_json(const Json& j, std::vector<std::string>& errors);

Json to_json(const Evaluation& ev);
Json to_json(const GAResult& result);
// The best individual as a reusable chain document (gauge fixed so that the
// smallest on-site energy is 0) with provenance fields.
Json best_spec_json(const GAResult& result);

Json to_json(const MonteCarloResult& mc, bool include_trace = false);
Json to_json(const RobustnessReport& report);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

ChainSpec read_chain(const std::filesystem::path& path);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Lines starting with '#' are comments.
void write_csv(const std::filesystem::path& path, const Table& table, const std::vector<std::string>& comments = {});
Table read_csv(const std::filesystem::path& path);

Table trace_table(const FidelityTrace& tr);                // t,f_target,f_initial
Table history_table(const GAResult& result);               // generation,best_fitness,...
Table mean_trace_table(const MonteCarloResult& mc);        // t,mean,std
Table rounding_table(const RobustnessReport& report);      // sig_figs,f_max,t_peak
Table monte_carlo_table(const RobustnessReport& report);   // xi,samples,mean_f_max,...

}  // namespace qpst::io
