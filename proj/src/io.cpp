#include "mpoxsim/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mpoxsim::io {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write: " + path);
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create directory: " + dir);
}

void write_series_csv(const std::string& path, const RunResult& run) {
    auto out = open_out(path);
    out << "scenario,seed,stream,day,s,e,i,r,cumulative\n";
    for (int t = 0; t <= run.horizon_days; ++t) {
        const auto& d = run.series[t];
        out << run.scenario << ',' << run.seed << ',' << run.stream << ',' << t << ','
            << d.s << ',' << d.e << ',' << d.i << ',' << d.r << ',' << d.cumulative
            << '\n';
    }
}

void write_records_csv(const std::string& path, const RunResult& run) {
    auto out = open_out(path);
    out << "scenario,seed,stream,day,source,target,kind\n";
    for (const auto& r : run.records) {
        out << run.scenario << ',' << run.seed << ',' << run.stream << ',' << r.day << ',';
        if (r.source >= 0)
            out << r.source << ',' << r.target << ',' << to_string(r.kind) << '\n';
        else
            out << ',' << r.target << ",seed\n";
    }
}

void write_edges_csv(const std::string& path, const RunResult& run) {
    auto out = open_out(path);
    out << "scenario,seed,stream,u,v,kind,formed_day,dissolved_day\n";
    for (const auto& e : run.edge_log)
        out << run.scenario << ',' << run.seed << ',' << run.stream << ',' << e.u << ','
            << e.v << ',' << to_string(e.kind) << ',' << e.first_day << ',' << e.last_day
            << '\n';
}

void write_summary_daily_csv(const std::string& path, const std::string& scenario,
                             const EnsembleSummary& s) {
    auto out = open_out(path);
    out << "scenario,day,mean_cum_pct,share_main,share_casual,share_onetime\n";
    for (int t = 0; t <= s.horizon_days; ++t) {
        const auto& a = s.attribution_mean[t];
        out << scenario << ',' << t << ',' << fmt(s.daily_mean_cum_pct[t]) << ','
            << fmt(a[0]) << ',' << fmt(a[1]) << ',' << fmt(a[2]) << '\n';
    }
}

void write_summary_final_csv(const std::string& path, const std::string& scenario,
                             const EnsembleSummary& s) {
    auto out = open_out(path);
    out << "scenario,replicates,final_mean_pct,final_p25_pct,final_p75_pct\n";
    out << scenario << ',' << s.replicates << ',' << fmt(s.final_mean_pct) << ','
        << fmt(s.final_p25_pct) << ',' << fmt(s.final_p75_pct) << '\n';
}

void write_rt_csv(const std::string& path, const std::string& scenario,
                  const EnsembleSummary& s) {
    auto out = open_out(path);
    out << "scenario,t,kind,median,p25,p75,runs\n";
    for (const auto& r : s.rt)
        out << scenario << ',' << r.t << ',' << (r.kind ? to_string(*r.kind) : "all")
            << ',' << fmt(r.median) << ',' << fmt(r.p25) << ',' << fmt(r.p75) << ','
            << r.runs_counted << '\n';
}

void write_manifest(const std::string& dir, const ScenarioConfig& cfg,
                    std::uint64_t base_seed) {
    nlohmann::json j;
    j["tool"] = kToolVersion;
    j["config_hash"] = cfg.config_hash();
    j["base_seed"] = base_seed;
    j["config"] = nlohmann::json::parse(cfg.to_json());
    auto out = open_out(dir + "/manifest.json");
    out << j.dump(2) << '\n';
}

void write_netstats_csv(const std::string& path, const std::string& scenario,
                        const std::vector<NetstatRow>& rows) {
    auto out = open_out(path);
    out << "scenario,seed,stream,window_start,window_end,transitivity,"
           "mean_clustering,lcc_fraction,mean_degree,max_degree,edges\n";
    for (const auto& r : rows)
        out << scenario << ',' << r.seed << ',' << r.stream << ',' << r.window_start
            << ',' << r.window_end << ',' << fmt(r.summary.transitivity) << ','
            << fmt(r.summary.mean_clustering) << ',' << fmt(r.summary.lcc_fraction)
            << ',' << fmt(r.summary.mean_degree) << ',' << r.summary.max_degree << ','
            << r.edges << '\n';
}

std::vector<InfectionRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read: " + path);
    std::vector<InfectionRecord> records;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string scenario, seed, stream, day, source, target, kind;
        std::getline(row, scenario, ',');
        std::getline(row, seed, ',');
        std::getline(row, stream, ',');
        std::getline(row, day, ',');
        std::getline(row, source, ',');
        std::getline(row, target, ',');
        std::getline(row, kind, ',');
        InfectionRecord r;
        r.day = std::stoi(day);
        r.source = source.empty() ? -1 : std::stoi(source);
        r.target = std::stoi(target);
        r.kind = kind == "main"     ? EdgeKind::main
                 : kind == "casual" ? EdgeKind::casual
                                    : EdgeKind::onetime;
        records.push_back(r);
    }
    return records;
}

}  // namespace mpoxsim::io
