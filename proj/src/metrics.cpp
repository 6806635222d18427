#include "mpoxsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mpoxsim {

WindowGraph cumulative_window_graph(const std::vector<EdgeLogRow>& log, int n,
                                    int horizon, int t0, int t1) {
    if (t0 > t1) throw ConfigError("window graph: t0 must be <= t1");
    if (t0 < 0 || t1 > horizon)
        throw ConfigError("window graph: window outside simulation horizon");

    WindowGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& row : log) {
        if (row.first_day > t1 || row.last_day < t0) continue;
        g.adj[row.u].push_back(row.v);
        g.adj[row.v].push_back(row.u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count += static_cast<long>(nb.size());
    }
    g.edge_count /= 2;
    return g;
}

NetworkSummary network_summaries(const WindowGraph& g) {
    NetworkSummary s;
    if (g.n == 0) return s;

    long triples2 = 0;       // 2 * connected triples
    long closed_pairs = 0;   // ordered linked neighbor pairs, = 6 * triangles
    double clustering_sum = 0.0;
    for (int u = 0; u < g.n; ++u) {
        const auto& nu = g.adj[u];
        const long d = static_cast<long>(nu.size());
        triples2 += d * (d - 1);
        if (d < 2) continue;
        long closed = 0;  // ordered neighbor pairs of u that are themselves linked
        for (std::int32_t v : nu) {
            const auto& nv = g.adj[v];
            // |N(u) ∩ N(v)| by sorted intersection
            auto it_u = nu.begin();
            auto it_v = nv.begin();
            while (it_u != nu.end() && it_v != nv.end()) {
                if (*it_u < *it_v)
                    ++it_u;
                else if (*it_v < *it_u)
                    ++it_v;
                else {
                    ++closed;
                    ++it_u;
                    ++it_v;
                }
            }
        }
        closed_pairs += closed;
        clustering_sum += static_cast<double>(closed) / static_cast<double>(d * (d - 1));
    }
    s.transitivity = triples2 > 0 ? static_cast<double>(closed_pairs) /
                                        static_cast<double>(triples2)
                                  : 0.0;
    s.mean_clustering = clustering_sum / g.n;

    // Largest component by iterative DFS.
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::int32_t> stack;
    long lcc = 0;
    int max_deg = 0;
    for (int u = 0; u < g.n; ++u) {
        max_deg = std::max<int>(max_deg, static_cast<int>(g.adj[u].size()));
        if (seen[u]) continue;
        long size = 0;
        stack.push_back(u);
        seen[u] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            ++size;
            for (std::int32_t y : g.adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        lcc = std::max(lcc, size);
    }
    s.lcc_fraction = static_cast<double>(lcc) / g.n;
    s.mean_degree = 2.0 * static_cast<double>(g.edge_count) / g.n;
    s.max_degree = max_deg;
    return s;
}

std::array<long, kEdgeKinds> ego_edge_counts(const std::vector<EdgeLogRow>& log,
                                             const std::vector<std::int32_t>& egos,
                                             int n, int t0, int t1) {
    std::vector<std::uint8_t> is_ego(n, 0);
    for (auto e : egos) is_ego[e] = 1;
    std::array<long, kEdgeKinds> counts{0, 0, 0};
    for (const auto& row : log) {
        if (row.first_day > t1 || row.last_day < t0) continue;
        if (is_ego[row.u] || is_ego[row.v]) counts[static_cast<int>(row.kind)]++;
    }
    return counts;
}

namespace {

// Per-source lifetime secondary counts by kind (seeds excluded as sources of
// their own records; their outgoing infections count normally).
std::vector<std::array<int, kEdgeKinds>> secondary_counts(const RunResult& run) {
    std::vector<std::array<int, kEdgeKinds>> out(
        run.population, std::array<int, kEdgeKinds>{0, 0, 0});
    for (const auto& r : run.records)
        if (r.source >= 0) out[r.source][static_cast<int>(r.kind)]++;
    return out;
}

}  // namespace

std::optional<double> effective_R(const RunResult& run, int t,
                                  std::optional<EdgeKind> kind) {
    std::vector<std::int32_t> window_nodes;
    if (t == 0) {
        for (const auto& r : run.records)
            if (r.source < 0) window_nodes.push_back(r.target);
    } else {
        for (int i = 0; i < run.population; ++i) {
            const int from = run.infectious_from[i];
            if (from < 0 || from >= t) continue;
            const int until =
                run.infectious_until[i] >= 0 ? run.infectious_until[i] : run.final_day + 1;
            if (until > t - 7) window_nodes.push_back(i);
        }
    }
    if (window_nodes.empty()) return std::nullopt;

    const auto counts = secondary_counts(run);
    long total = 0;
    for (auto nodeid : window_nodes) {
        if (kind) {
            total += counts[nodeid][static_cast<int>(*kind)];
        } else {
            for (int k = 0; k < kEdgeKinds; ++k) total += counts[nodeid][k];
        }
    }
    return static_cast<double>(total) / static_cast<double>(window_nodes.size());
}

std::optional<std::array<double, kEdgeKinds>> attribution_proportions(
    const RunResult& run, int t) {
    std::array<long, kEdgeKinds> by_kind{0, 0, 0};
    long total = 0;
    for (const auto& r : run.records) {
        if (r.source < 0 || r.day > t) continue;
        by_kind[static_cast<int>(r.kind)]++;
        ++total;
    }
    if (total == 0) return std::nullopt;
    std::array<double, kEdgeKinds> shares;
    for (int k = 0; k < kEdgeKinds; ++k)
        shares[k] = static_cast<double>(by_kind[k]) / static_cast<double>(total);
    return shares;
}

std::optional<int> first_onetime_majority_day(const std::vector<RunResult>& runs) {
    if (runs.empty()) return std::nullopt;
    const int horizon = runs.front().horizon_days;
    for (int t = 0; t <= horizon; ++t) {
        double sum = 0.0;
        int counted = 0;
        for (const auto& run : runs) {
            if (auto shares = attribution_proportions(run, t)) {
                sum += (*shares)[static_cast<int>(EdgeKind::onetime)];
                ++counted;
            }
        }
        if (counted > 0 && sum / counted > 0.5) return t;
    }
    return std::nullopt;
}

ContactMatrix at_risk_contact_matrix(const RunResult& run) {
    ContactMatrix m;
    std::array<std::array<double, 6>, 6> sums{};
    for (auto& row : m.node_count) row.fill(0);
    for (int i = 0; i < run.population; ++i) {
        const int rc = run.rel_class[i];
        const int st = run.stratum[i] - 1;
        long c = 0;
        for (int k = 0; k < kEdgeKinds; ++k) c += run.contacts[i][k];
        sums[rc][st] += static_cast<double>(c);
        m.node_count[rc][st]++;
    }
    for (int rc = 0; rc < 6; ++rc)
        for (int st = 0; st < 6; ++st)
            if (m.node_count[rc][st] > 0)
                m.mean[rc][st] = sums[rc][st] / m.node_count[rc][st];
    return m;
}

std::optional<double> delayed_rewiring_pct(const RunResult& run, EdgeKind kind) {
    const int k = static_cast<int>(kind);
    if (k > 1 || run.rewire_entries[k] == 0) return std::nullopt;
    return 100.0 * static_cast<double>(run.rewire_delayed[k]) /
           static_cast<double>(run.rewire_entries[k]);
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw ConfigError("percentile of empty set");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * p / 100.0;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= values.size()) return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

EnsembleSummary ensemble_summary(const std::vector<RunResult>& runs,
                                 const std::vector<int>& rt_days) {
    if (runs.empty()) throw ConfigError("ensemble summary of zero runs");
    const int horizon = runs.front().horizon_days;
    for (const auto& r : runs)
        if (r.horizon_days != horizon)
            throw ConfigError("ensemble summary: mixed horizons");

    EnsembleSummary s;
    s.horizon_days = horizon;
    s.replicates = static_cast<int>(runs.size());
    s.daily_mean_cum_pct.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
    s.attribution_mean.assign(static_cast<std::size_t>(horizon) + 1,
                              std::array<double, kEdgeKinds>{0, 0, 0});

    for (const auto& run : runs) {
        s.final_cum_pct.push_back(run.final_cumulative_pct());
        for (int t = 0; t <= horizon; ++t)
            s.daily_mean_cum_pct[t] +=
                100.0 * static_cast<double>(run.series[t].cumulative) / run.population;
    }
    for (auto& v : s.daily_mean_cum_pct) v /= s.replicates;
    s.final_mean_pct = std::accumulate(s.final_cum_pct.begin(), s.final_cum_pct.end(), 0.0) /
                       s.replicates;
    s.final_p25_pct = percentile(s.final_cum_pct, 25.0);
    s.final_p75_pct = percentile(s.final_cum_pct, 75.0);

    for (int t = 0; t <= horizon; ++t) {
        std::array<double, kEdgeKinds> acc{0, 0, 0};
        int counted = 0;
        for (const auto& run : runs) {
            if (auto shares = attribution_proportions(run, t)) {
                for (int k = 0; k < kEdgeKinds; ++k) acc[k] += (*shares)[k];
                ++counted;
            }
        }
        if (counted > 0)
            for (int k = 0; k < kEdgeKinds; ++k)
                s.attribution_mean[t][k] = acc[k] / counted;
    }

    const std::array<std::optional<EdgeKind>, 4> kinds = {
        std::optional<EdgeKind>{}, EdgeKind::main, EdgeKind::casual, EdgeKind::onetime};
    for (int t : rt_days) {
        for (const auto& kind : kinds) {
            std::vector<double> values;
            for (const auto& run : runs)
                if (auto r = effective_R(run, t, kind)) values.push_back(*r);
            if (values.empty()) continue;
            RtStat stat;
            stat.t = t;
            stat.kind = kind;
            stat.median = percentile(values, 50.0);
            stat.p25 = percentile(values, 25.0);
            stat.p75 = percentile(values, 75.0);
            stat.runs_counted = static_cast<int>(values.size());
            s.rt.push_back(stat);
        }
    }
    return s;
}

}  // namespace mpoxsim
