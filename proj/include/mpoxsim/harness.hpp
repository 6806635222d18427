#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpoxsim/io.hpp"
#include "mpoxsim/metrics.hpp"
#include "mpoxsim/simulation.hpp"

namespace mpoxsim {

struct EnsembleOutput {
    std::vector<RunResult> runs;  // replicate order, independent of parallelism
    EnsembleSummary summary;
};

/// Run n_reps replicates on streams base_seed .. base_seed+n_reps-1 (seed =
/// base_seed throughout). Results are identical for any parallelism degree.
EnsembleOutput run_replicates(const SimContext& ctx, int n_reps,
                              std::uint64_t base_seed, int jobs,
                              const std::vector<int>& rt_days = {0, 28});
EnsembleOutput run_replicates(const ScenarioConfig& cfg, int n_reps,
                              std::uint64_t base_seed, int jobs,
                              const std::vector<int>& rt_days = {0, 28});

/// Per-replicate files plus ensemble summaries and a manifest under dir.
void write_ensemble_outputs(const std::string& dir, const ScenarioConfig& cfg,
                            std::uint64_t base_seed, const EnsembleOutput& out);

struct SweepGrid {
    std::vector<int> vax_start_days;
    std::vector<int> bc_start_days;
    std::vector<double> bc_reductions;
};

struct SweepCell {
    int vax_start;
    int bc_start;
    double bc_reduction;
    double mean_final_pct;
    double p25_final_pct;
    double p75_final_pct;
};

/// One ensemble per grid cell; the base config supplies both intervention
/// policies (targeting, schedule) whose timings/intensity each cell overrides.
/// Cell (ci) replicate (r) runs on stream base_seed + ci*n_reps + r.
std::vector<SweepCell> sweep(const ScenarioConfig& base, const SweepGrid& grid,
                             int n_reps, std::uint64_t base_seed, int jobs);

void write_heatmap_csv(const std::string& path, const std::string& scenario,
                       std::uint64_t base_seed, int n_reps,
                       const std::vector<SweepCell>& cells);

struct BenchRow {
    int population;
    int replicate;
    double seconds;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    std::optional<double> loglog_slope;  // missing with fewer than 2 sizes
    double mean_seconds(int population) const;
};

/// Wall-clock per run at each population size (serial execution, edge logs
/// disabled) and the fitted log-log slope of mean runtime vs size.
BenchResult benchmark_scaling(const ScenarioConfig& base, const std::vector<int>& sizes,
                              int n_reps, std::uint64_t base_seed);

void write_bench_csv(const std::string& dir, const std::string& scenario,
                     const BenchResult& bench);

/// Map replicate work across jobs threads; results land in replicate order.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

}  // namespace mpoxsim
