#pragma once

#include <string>
#include <vector>

#include "mpoxsim/metrics.hpp"
#include "mpoxsim/simulation.hpp"

namespace mpoxsim {

inline constexpr const char* kToolVersion = "mpoxsim 0.1.0";

/// All tabular outputs are comma-delimited with a header row. None of them
/// contain wall-clock values, so repeated runs of one (config, seed) pair are
/// byte-identical; timing lives only in the bench tables.
namespace io {

void ensure_dir(const std::string& dir);

void write_series_csv(const std::string& path, const RunResult& run);
void write_records_csv(const std::string& path, const RunResult& run);
void write_edges_csv(const std::string& path, const RunResult& run);

void write_summary_daily_csv(const std::string& path, const std::string& scenario,
                             const EnsembleSummary& s);
void write_summary_final_csv(const std::string& path, const std::string& scenario,
                             const EnsembleSummary& s);
void write_rt_csv(const std::string& path, const std::string& scenario,
                  const EnsembleSummary& s);

void write_manifest(const std::string& dir, const ScenarioConfig& cfg,
                    std::uint64_t base_seed);

struct NetstatRow {
    std::uint64_t seed;
    std::uint64_t stream;
    int window_start;
    int window_end;
    NetworkSummary summary;
    long edges;
};
void write_netstats_csv(const std::string& path, const std::string& scenario,
                        const std::vector<NetstatRow>& rows);

/// Re-read an exported records file (the file-recount oracle used in tests).
std::vector<InfectionRecord> read_records_csv(const std::string& path);

}  // namespace io

}  // namespace mpoxsim
