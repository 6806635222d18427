#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mpoxsim/simulation.hpp"

namespace mpoxsim {

/// Simple undirected graph aggregated from an edge-log window.
struct WindowGraph {
    int n = 0;
    long edge_count = 0;
    std::vector<std::vector<std::int32_t>> adj;  // sorted, deduplicated
};

struct NetworkSummary {
    double transitivity = 0.0;
    double mean_clustering = 0.0;
    double lcc_fraction = 0.0;
    double mean_degree = 0.0;
    int max_degree = 0;
};

/// Union of all edges (any kind) in force at any point in [t0, t1],
/// deduplicated. Throws ConfigError when the window leaves [0, horizon].
WindowGraph cumulative_window_graph(const std::vector<EdgeLogRow>& log, int n,
                                    int horizon, int t0, int t1);

/// Transitivity (3*triangles / connected triples), degree-<2-as-zero mean
/// clustering, largest-component fraction, mean and max degree.
NetworkSummary network_summaries(const WindowGraph& g);

/// Distinct edges per kind with at least one endpoint in `egos` over [t0,t1].
std::array<long, kEdgeKinds> ego_edge_counts(const std::vector<EdgeLogRow>& log,
                                             const std::vector<std::int32_t>& egos,
                                             int n, int t0, int t1);

/// Mean lifetime secondary infections per node infectious during [t-7, t)
/// (the seed set when t == 0), via the given edge kind or all kinds.
/// Missing when no node was infectious in the window.
std::optional<double> effective_R(const RunResult& run, int t,
                                  std::optional<EdgeKind> kind);

/// Shares of non-seed infections by edge kind among records with day <= t.
/// Missing when there are none.
std::optional<std::array<double, kEdgeKinds>> attribution_proportions(
    const RunResult& run, int t);

/// First day the ensemble-mean one-time attribution share exceeds 1/2.
std::optional<int> first_onetime_majority_day(const std::vector<RunResult>& runs);

/// Mean serodiscordant contacts per node by relationship class (rows 0-5) and
/// stratum (columns 1-6); cells with no nodes are missing.
struct ContactMatrix {
    std::array<std::array<std::optional<double>, 6>, 6> mean;
    std::array<std::array<long, 6>, 6> node_count;
};
ContactMatrix at_risk_contact_matrix(const RunResult& run);

/// Percentage of rewiring entries of a kind that could not re-pair the day
/// they arrived. Missing when the run saw no rewiring of that kind.
std::optional<double> delayed_rewiring_pct(const RunResult& run, EdgeKind kind);

/// Linear-interpolation percentile (numpy convention), p in [0, 100].
double percentile(std::vector<double> values, double p);

struct RtStat {
    int t = 0;
    std::optional<EdgeKind> kind;  // nullopt = all kinds
    double median = 0.0;
    double p25 = 0.0;
    double p75 = 0.0;
    int runs_counted = 0;
};

/// Point-wise ensemble view over equally sized replicates.
struct EnsembleSummary {
    int horizon_days = 0;
    int replicates = 0;
    std::vector<double> daily_mean_cum_pct;   // day 0..horizon
    std::vector<double> final_cum_pct;        // per run, run order
    double final_mean_pct = 0.0;
    double final_p25_pct = 0.0;
    double final_p75_pct = 0.0;
    std::vector<RtStat> rt;                           // medians over runs
    std::vector<std::array<double, kEdgeKinds>> attribution_mean;  // day 0..horizon
};

EnsembleSummary ensemble_summary(const std::vector<RunResult>& runs,
                                 const std::vector<int>& rt_days = {0, 28});

}  // namespace mpoxsim
