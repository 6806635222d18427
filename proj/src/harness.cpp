#include "mpoxsim/harness.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

namespace mpoxsim {

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, count);
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

EnsembleOutput run_replicates(const SimContext& ctx, int n_reps,
                              std::uint64_t base_seed, int jobs,
                              const std::vector<int>& rt_days) {
    if (n_reps < 1) throw ConfigError("replicates must be >= 1");
    EnsembleOutput out;
    out.runs.resize(static_cast<std::size_t>(n_reps));
    parallel_for(n_reps, jobs, [&](int r) {
        out.runs[r] = run_simulation(ctx, base_seed, base_seed + static_cast<std::uint64_t>(r));
    });
    out.summary = ensemble_summary(out.runs, rt_days);
    return out;
}

EnsembleOutput run_replicates(const ScenarioConfig& cfg, int n_reps,
                              std::uint64_t base_seed, int jobs,
                              const std::vector<int>& rt_days) {
    return run_replicates(prepare_context(cfg), n_reps, base_seed, jobs, rt_days);
}

void write_ensemble_outputs(const std::string& dir, const ScenarioConfig& cfg,
                            std::uint64_t base_seed, const EnsembleOutput& out) {
    io::ensure_dir(dir);
    io::write_manifest(dir, cfg, base_seed);
    for (std::size_t r = 0; r < out.runs.size(); ++r) {
        const auto& run = out.runs[r];
        const std::string tag = "_rep" + std::to_string(r);
        io::write_series_csv(dir + "/series" + tag + ".csv", run);
        io::write_records_csv(dir + "/records" + tag + ".csv", run);
        if (!run.edge_log.empty())
            io::write_edges_csv(dir + "/edges" + tag + ".csv", run);
    }
    io::write_summary_daily_csv(dir + "/summary_daily.csv", cfg.name, out.summary);
    io::write_summary_final_csv(dir + "/summary_final.csv", cfg.name, out.summary);
    io::write_rt_csv(dir + "/rt.csv", cfg.name, out.summary);
}

std::vector<SweepCell> sweep(const ScenarioConfig& base, const SweepGrid& grid,
                             int n_reps, std::uint64_t base_seed, int jobs) {
    if (grid.vax_start_days.empty() || grid.bc_start_days.empty() ||
        grid.bc_reductions.empty())
        throw ConfigError("sweep grid must be nonempty on every axis");
    if (!base.behavior_change || !base.vaccination)
        throw ConfigError("sweep base config needs behavior-change and vaccination policies");

    struct Task {
        ScenarioConfig cfg;
        SweepCell cell;
    };
    std::vector<Task> tasks;
    for (int vax : grid.vax_start_days)
        for (int bc : grid.bc_start_days)
            for (double red : grid.bc_reductions) {
                Task task;
                task.cfg = base;
                task.cfg.vaccination->start_day = vax;
                task.cfg.behavior_change->start_day = bc;
                task.cfg.behavior_change->reduction = red;
                task.cell = {vax, bc, red, 0.0, 0.0, 0.0};
                tasks.push_back(std::move(task));
            }

    std::vector<SweepCell> cells;
    cells.reserve(tasks.size());
    for (std::size_t ci = 0; ci < tasks.size(); ++ci) {
        const auto ctx = prepare_context(tasks[ci].cfg);
        const std::uint64_t cell_seed =
            base_seed + static_cast<std::uint64_t>(ci) * static_cast<std::uint64_t>(n_reps);
        std::vector<RunResult> runs(static_cast<std::size_t>(n_reps));
        parallel_for(n_reps, jobs, [&](int r) {
            runs[r] = run_simulation(ctx, base_seed, cell_seed + static_cast<std::uint64_t>(r));
        });
        std::vector<double> finals;
        finals.reserve(runs.size());
        for (const auto& run : runs) finals.push_back(run.final_cumulative_pct());
        SweepCell cell = tasks[ci].cell;
        double sum = 0.0;
        for (double f : finals) sum += f;
        cell.mean_final_pct = sum / static_cast<double>(finals.size());
        cell.p25_final_pct = percentile(finals, 25.0);
        cell.p75_final_pct = percentile(finals, 75.0);
        cells.push_back(cell);
    }
    return cells;
}

void write_heatmap_csv(const std::string& path, const std::string& scenario,
                       std::uint64_t base_seed, int n_reps,
                       const std::vector<SweepCell>& cells) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write: " + path);
    out << "scenario,base_seed,replicates,vax_start,bc_start,bc_reduction,"
           "mean_final_pct,p25_final_pct,p75_final_pct\n";
    char buf[128];
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g", c.bc_reduction,
                      c.mean_final_pct, c.p25_final_pct, c.p75_final_pct);
        out << scenario << ',' << base_seed << ',' << n_reps << ',' << c.vax_start << ','
            << c.bc_start << ',' << buf << '\n';
    }
}

double BenchResult::mean_seconds(int population) const {
    double sum = 0.0;
    int k = 0;
    for (const auto& r : rows)
        if (r.population == population) {
            sum += r.seconds;
            ++k;
        }
    return k > 0 ? sum / k : 0.0;
}

BenchResult benchmark_scaling(const ScenarioConfig& base, const std::vector<int>& sizes,
                              int n_reps, std::uint64_t base_seed) {
    if (sizes.empty()) throw ConfigError("bench needs at least one size");
    BenchResult bench;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        ScenarioConfig cfg = base;
        cfg.population = sizes[si];
        cfg.record_edge_log = false;
        const auto ctx = prepare_context(cfg);
        for (int r = 0; r < n_reps; ++r) {
            const auto run = run_simulation(
                ctx, base_seed,
                base_seed + static_cast<std::uint64_t>(si * 1000 + static_cast<std::size_t>(r)));
            bench.rows.push_back({sizes[si], r, run.wall_seconds});
        }
    }
    if (sizes.size() >= 2) {
        // Least squares on (ln N, ln mean seconds).
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto k = static_cast<double>(sizes.size());
        for (int n : sizes) {
            const double x = std::log(static_cast<double>(n));
            const double y = std::log(bench.mean_seconds(n));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        bench.loglog_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return bench;
}

void write_bench_csv(const std::string& dir, const std::string& scenario,
                     const BenchResult& bench) {
    io::ensure_dir(dir);
    {
        std::ofstream out(dir + "/bench.csv");
        if (!out) throw ConfigError("cannot write bench.csv");
        out << "scenario,population,replicate,seconds\n";
        for (const auto& r : bench.rows)
            out << scenario << ',' << r.population << ',' << r.replicate << ','
                << r.seconds << '\n';
    }
    std::ofstream out(dir + "/bench_fit.csv");
    if (!out) throw ConfigError("cannot write bench_fit.csv");
    out << "scenario,loglog_slope\n";
    out << scenario << ',';
    if (bench.loglog_slope)
        out << *bench.loglog_slope << '\n';
    else
        out << "\n";
}

}  // namespace mpoxsim
