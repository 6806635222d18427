#include "mpoxsim/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mpoxsim {

using nlohmann::json;

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::main: return "main";
        case EdgeKind::casual: return "casual";
        default: return "onetime";
    }
}

const char* to_string(IsolationMode m) {
    return m == IsolationMode::full ? "full" : "partial";
}

const char* to_string(BehaviorTargeting t) {
    return t == BehaviorTargeting::universal ? "universal" : "strata_5_6";
}

const char* to_string(VaccineTargeting t) {
    return t == VaccineTargeting::random ? "random" : "top_strata";
}

const char* to_string(OnetimeCountModel m) {
    return m == OnetimeCountModel::geometric ? "geometric" : "bernoulli";
}

namespace {

IsolationMode isolation_from(const std::string& s) {
    if (s == "full") return IsolationMode::full;
    if (s == "partial") return IsolationMode::partial;
    throw ConfigError("unknown isolation mode: " + s);
}

BehaviorTargeting bc_targeting_from(const std::string& s) {
    if (s == "universal") return BehaviorTargeting::universal;
    if (s == "strata_5_6") return BehaviorTargeting::strata_5_6;
    throw ConfigError("unknown behavior-change targeting: " + s);
}

VaccineTargeting vx_targeting_from(const std::string& s) {
    if (s == "random") return VaccineTargeting::random;
    if (s == "top_strata") return VaccineTargeting::top_strata;
    throw ConfigError("unknown vaccination targeting: " + s);
}

OnetimeCountModel count_model_from(const std::string& s) {
    if (s == "geometric") return OnetimeCountModel::geometric;
    if (s == "bernoulli") return OnetimeCountModel::bernoulli;
    throw ConfigError("unknown one-time count model: " + s);
}

void require_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError(std::string(what) + " must be in [0, 1]");
}

}  // namespace

void ScenarioConfig::validate() const {
    if (population < 2) throw ConfigError("population must be >= 2");
    if (horizon_days < 1) throw ConfigError("horizon must be >= 1 day");
    require_prob(beta, "beta");
    require_prob(seed_fraction, "seed_fraction");
    require_prob(care_seek_prob, "care_seek_prob");
    if (exposed_mean <= 0 || exposed_sd <= 0 || infectious_mean <= 0 || infectious_sd <= 0)
        throw ConfigError("stage-duration means and sds must be positive");
    if (behavior_change) {
        const auto& bc = *behavior_change;
        if (!(bc.reduction > 0.0 && bc.reduction < 1.0))
            throw ConfigError("behavior-change reduction must be in (0, 1)");
        if (bc.start_day < 0) throw ConfigError("behavior-change start day must be >= 0");
    }
    if (vaccination && vaccination->schedule_path.empty())
        throw ConfigError("vaccination policy requires a schedule path");
    if (replicates < 1) throw ConfigError("replicates must be >= 1");
}

std::string ScenarioConfig::to_json(int indent) const {
    json j;
    j["name"] = name;
    j["population"] = population;
    j["horizon_days"] = horizon_days;
    j["beta"] = beta;
    j["seed_fraction"] = seed_fraction;
    j["exposed_mean"] = exposed_mean;
    j["exposed_sd"] = exposed_sd;
    j["infectious_mean"] = infectious_mean;
    j["infectious_sd"] = infectious_sd;
    j["care_seek_prob"] = care_seek_prob;
    j["isolation"] = to_string(isolation);
    j["onetime_count_model"] = to_string(onetime_count_model);
    if (behavior_change) {
        j["behavior_change"] = {{"start_day", behavior_change->start_day},
                                {"reduction", behavior_change->reduction},
                                {"targeting", to_string(behavior_change->targeting)}};
    } else {
        j["behavior_change"] = nullptr;
    }
    if (vaccination) {
        j["vaccination"] = {{"start_day", vaccination->start_day},
                            {"targeting", to_string(vaccination->targeting)},
                            {"schedule_path", vaccination->schedule_path},
                            {"willingness_caps", vaccination->willingness_caps}};
    } else {
        j["vaccination"] = nullptr;
    }
    j["replicates"] = replicates;
    j["base_seed"] = base_seed;
    j["record_edge_log"] = record_edge_log;
    return j.dump(indent);
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ScenarioConfig c;
    try {
        c.name = j.value("name", c.name);
        c.population = j.value("population", c.population);
        c.horizon_days = j.value("horizon_days", c.horizon_days);
        c.beta = j.value("beta", c.beta);
        c.seed_fraction = j.value("seed_fraction", c.seed_fraction);
        c.exposed_mean = j.value("exposed_mean", c.exposed_mean);
        c.exposed_sd = j.value("exposed_sd", c.exposed_sd);
        c.infectious_mean = j.value("infectious_mean", c.infectious_mean);
        c.infectious_sd = j.value("infectious_sd", c.infectious_sd);
        c.care_seek_prob = j.value("care_seek_prob", c.care_seek_prob);
        c.isolation = isolation_from(j.value("isolation", "full"));
        c.onetime_count_model =
            count_model_from(j.value("onetime_count_model", "geometric"));
        if (j.contains("behavior_change") && !j["behavior_change"].is_null()) {
            const auto& b = j["behavior_change"];
            BehaviorChangePolicy bc;
            bc.start_day = b.value("start_day", bc.start_day);
            bc.reduction = b.value("reduction", bc.reduction);
            bc.targeting = bc_targeting_from(b.value("targeting", "strata_5_6"));
            c.behavior_change = bc;
        }
        if (j.contains("vaccination") && !j["vaccination"].is_null()) {
            const auto& v = j["vaccination"];
            VaccinationPolicy vx;
            vx.start_day = v.value("start_day", vx.start_day);
            vx.targeting = vx_targeting_from(v.value("targeting", "top_strata"));
            vx.schedule_path = v.value("schedule_path", std::string());
            vx.willingness_caps = v.value("willingness_caps", false);
            c.vaccination = vx;
        }
        c.replicates = j.value("replicates", c.replicates);
        c.base_seed = j.value("base_seed", c.base_seed);
        c.record_edge_log = j.value("record_edge_log", c.record_edge_log);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    c.validate();
    return c;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string ScenarioConfig::config_hash() const {
    const std::string dump = to_json(0);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ScenarioConfig preset(const std::string& name, const std::string& schedule_path) {
    ScenarioConfig c;
    c.name = name;

    auto with_vax = [&](VaccineTargeting t, int start) {
        VaccinationPolicy v;
        v.start_day = start;
        v.targeting = t;
        v.schedule_path = schedule_path;
        return v;
    };
    auto with_bc = [](BehaviorTargeting t, int start, double reduction) {
        BehaviorChangePolicy b;
        b.start_day = start;
        b.reduction = reduction;
        b.targeting = t;
        return b;
    };
    auto universal_intervention = [&](ScenarioConfig& cfg) {
        cfg.behavior_change = with_bc(BehaviorTargeting::universal, 70, 0.5);
        cfg.vaccination = with_vax(VaccineTargeting::random, 30);
    };

    if (name == "baseline") {
        // no interventions, full isolation
    } else if (name == "partial_isolation") {
        c.isolation = IsolationMode::partial;
    } else if (name == "universal_bc") {
        c.behavior_change = with_bc(BehaviorTargeting::universal, 70, 0.5);
    } else if (name == "universal_bc_vax") {
        universal_intervention(c);
    } else if (name == "targeted") {
        c.behavior_change = with_bc(BehaviorTargeting::strata_5_6, 70, 0.5);
        c.vaccination = with_vax(VaccineTargeting::top_strata, 30);
    } else if (name == "partial_isolation_universal") {
        c.isolation = IsolationMode::partial;
        universal_intervention(c);
    } else if (name == "optimistic" || name == "optimistic_intervention" ||
               name == "optimistic_low_beta" ||
               name == "optimistic_low_beta_intervention") {
        c.exposed_mean = 5.6;
        c.exposed_sd = 1.0;
        c.infectious_mean = 14.0;
        c.infectious_sd = 3.0;
        if (name.find("low_beta") != std::string::npos) c.beta = 0.5;
        if (name.find("intervention") != std::string::npos) universal_intervention(c);
    } else if (name == "pessimistic" || name == "pessimistic_intervention") {
        c.exposed_mean = 9.9;
        c.exposed_sd = 1.0;
        c.infectious_mean = 28.0;
        c.infectious_sd = 3.0;
        if (name.find("intervention") != std::string::npos) universal_intervention(c);
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    c.validate();
    return c;
}

}  // namespace mpoxsim
