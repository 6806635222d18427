#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mpoxsim/harness.hpp"
#include "mpoxsim/io.hpp"
#include "mpoxsim/metrics.hpp"

namespace {

using namespace mpoxsim;

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string schedule_path = "data/jynneos_weekly_doses.csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "Scenario config JSON path");
    cmd->add_option("--preset", o.preset_name,
                    "Named scenario (baseline, partial_isolation, universal_bc, "
                    "universal_bc_vax, targeted, optimistic, pessimistic, ...)");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_option("--jobs", o.jobs, "Worker threads for replicates");
    cmd->add_option("--schedule", o.schedule_path, "Weekly dose CSV for presets");
}

ScenarioConfig resolve_config(const CommonOpts& o) {
    if (!o.config_path.empty()) return ScenarioConfig::load(o.config_path);
    if (!o.preset_name.empty()) return preset(o.preset_name, o.schedule_path);
    throw ConfigError("provide --config or --preset");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto comma = s.find(',', pos);
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto comma = s.find(',', pos);
        out.push_back(std::stod(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_run(const CommonOpts& o, std::uint64_t stream, bool have_stream) {
    ScenarioConfig cfg = resolve_config(o);
    const auto run = run_simulation(cfg, o.seed, have_stream ? stream : o.seed);
    io::ensure_dir(o.out_dir);
    io::write_manifest(o.out_dir, cfg, o.seed);
    io::write_series_csv(o.out_dir + "/series.csv", run);
    io::write_records_csv(o.out_dir + "/records.csv", run);
    if (!run.edge_log.empty()) io::write_edges_csv(o.out_dir + "/edges.csv", run);
    std::printf("%s: final day %d, cumulative %.2f%% (%lld infections)\n",
                cfg.name.c_str(), run.final_day, run.final_cumulative_pct(),
                static_cast<long long>(run.series.back().cumulative));
    return 0;
}

int cmd_ensemble(const CommonOpts& o, int reps, bool edge_logs) {
    ScenarioConfig cfg = resolve_config(o);
    if (reps > 0) cfg.replicates = reps;
    cfg.record_edge_log = edge_logs;
    const auto out = run_replicates(cfg, cfg.replicates, o.seed, o.jobs);
    write_ensemble_outputs(o.out_dir, cfg, o.seed, out);
    std::printf("%s: %d replicates, final mean %.2f%% (P25 %.2f%%, P75 %.2f%%)\n",
                cfg.name.c_str(), out.summary.replicates, out.summary.final_mean_pct,
                out.summary.final_p25_pct, out.summary.final_p75_pct);
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& vax, const std::string& bc,
              const std::string& red, int reps) {
    ScenarioConfig cfg = resolve_config(o);
    cfg.record_edge_log = false;
    SweepGrid grid;
    grid.vax_start_days = parse_int_list(vax);
    grid.bc_start_days = parse_int_list(bc);
    grid.bc_reductions = parse_double_list(red);
    const auto cells = sweep(cfg, grid, reps, o.seed, o.jobs);
    io::ensure_dir(o.out_dir);
    io::write_manifest(o.out_dir, cfg, o.seed);
    write_heatmap_csv(o.out_dir + "/heatmap.csv", cfg.name, o.seed, reps, cells);
    for (const auto& c : cells)
        std::printf("vax %+d bc %d red %.2f -> %.2f%%\n", c.vax_start, c.bc_start,
                    c.bc_reduction, c.mean_final_pct);
    return 0;
}

int cmd_bench(const CommonOpts& o, const std::string& sizes_arg, int reps) {
    ScenarioConfig cfg = resolve_config(o);
    const auto sizes = parse_int_list(sizes_arg);
    const auto bench = benchmark_scaling(cfg, sizes, reps, o.seed);
    write_bench_csv(o.out_dir, cfg.name, bench);
    for (int n : sizes)
        std::printf("N=%d: mean %.3fs over %d runs\n", n, bench.mean_seconds(n), reps);
    if (bench.loglog_slope)
        std::printf("log-log slope: %.3f\n", *bench.loglog_slope);
    else
        std::printf("log-log slope: undefined (one size)\n");
    return 0;
}

int cmd_netstats(const CommonOpts& o, const std::string& days_arg, int window, int reps) {
    ScenarioConfig cfg = resolve_config(o);
    cfg.record_edge_log = true;
    const auto days = parse_int_list(days_arg);
    const auto ctx = prepare_context(cfg);
    std::vector<RunResult> runs(static_cast<std::size_t>(reps));
    parallel_for(reps, o.jobs, [&](int r) {
        runs[r] = run_simulation(ctx, o.seed, o.seed + static_cast<std::uint64_t>(r));
    });
    std::vector<io::NetstatRow> rows;
    for (const auto& run : runs) {
        for (int d : days) {
            const int t0 = std::max(0, d - window + 1);
            const auto g =
                cumulative_window_graph(run.edge_log, run.population, run.horizon_days, t0, d);
            rows.push_back({run.seed, run.stream, t0, d, network_summaries(g), g.edge_count});
        }
    }
    io::ensure_dir(o.out_dir);
    io::write_manifest(o.out_dir, cfg, o.seed);
    io::write_netstats_csv(o.out_dir + "/netstats.csv", cfg.name, rows);
    std::printf("%s: wrote %zu window summaries\n", cfg.name.c_str(), rows.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based mpox transmission simulator on a dynamic "
                 "three-tier sexual contact network"};
    app.require_subcommand(1);

    CommonOpts run_o, ens_o, sweep_o, bench_o, net_o;
    std::uint64_t stream = 0;
    bool have_stream = false;
    int ens_reps = 0;
    bool ens_edges = false;
    std::string sweep_vax = "-30,-20,-10,0,10,20,30";
    std::string sweep_bc = "30,50,70,90,110";
    std::string sweep_red = "0.75,0.5,0.25";
    int sweep_reps = 100;
    std::string bench_sizes = "5000,10000,20000,40000,80000";
    int bench_reps = 5;
    std::string net_days = "28,84";
    int net_window = 7;
    int net_reps = 50;

    auto* run_cmd = app.add_subcommand("run", "Run a single scenario replicate");
    add_common(run_cmd, run_o);
    run_cmd->add_option("--stream", stream, "Stream id (defaults to seed)")
        ->each([&](const std::string&) { have_stream = true; });

    auto* ens_cmd = app.add_subcommand("ensemble", "Run a replicate ensemble");
    add_common(ens_cmd, ens_o);
    ens_cmd->add_option("--reps", ens_reps, "Replicates (default from config)");
    ens_cmd->add_flag("--edge-logs", ens_edges, "Write per-replicate edge logs");

    auto* sweep_cmd = app.add_subcommand("sweep", "Intervention timing/intensity grid");
    add_common(sweep_cmd, sweep_o);
    sweep_cmd->add_option("--vax-starts", sweep_vax, "Vaccination start days");
    sweep_cmd->add_option("--bc-starts", sweep_bc, "Behavior-change start days");
    sweep_cmd->add_option("--bc-reductions", sweep_red, "Behavior-change reductions");
    sweep_cmd->add_option("--reps", sweep_reps, "Replicates per cell");

    auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling benchmark");
    add_common(bench_cmd, bench_o);
    bench_cmd->add_option("--sizes", bench_sizes, "Population sizes");
    bench_cmd->add_option("--reps", bench_reps, "Runs per size");

    auto* net_cmd = app.add_subcommand("netstats", "Window-graph structure summaries");
    add_common(net_cmd, net_o);
    net_cmd->add_option("--days", net_days, "Window end days");
    net_cmd->add_option("--window", net_window, "Window length in days");
    net_cmd->add_option("--reps", net_reps, "Replicates");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(run_o, stream, have_stream);
        if (ens_cmd->parsed()) return cmd_ensemble(ens_o, ens_reps, ens_edges);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_o, sweep_vax, sweep_bc, sweep_red, sweep_reps);
        if (bench_cmd->parsed()) return cmd_bench(bench_o, bench_sizes, bench_reps);
        if (net_cmd->parsed()) return cmd_netstats(net_o, net_days, net_window, net_reps);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
