#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpoxsim/config.hpp"
#include "mpoxsim/health.hpp"
#include "mpoxsim/interventions.hpp"
#include "mpoxsim/partnerships.hpp"

namespace mpoxsim {

struct DayCounts {
    std::int32_t s = 0;
    std::int32_t e = 0;
    std::int32_t i = 0;
    std::int32_t r = 0;
    std::int64_t cumulative = 0;  // infections including seeds
};

/// Everything one replicate produces. Series run day 0..horizon inclusive;
/// runs that stop early carry their final state forward so all series share
/// the horizon length.
struct RunResult {
    std::string scenario;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    int population = 0;
    int horizon_days = 0;
    int final_day = 0;  // last simulated day (horizon unless stopped early)

    std::vector<DayCounts> series;
    std::vector<InfectionRecord> records;
    std::vector<std::array<std::uint32_t, kEdgeKinds>> contacts;
    std::vector<EdgeLogRow> edge_log;

    // Per-node attributes and health provenance used by the metrics module.
    std::vector<std::uint8_t> rel_class;
    std::vector<std::uint8_t> stratum;
    std::vector<std::uint8_t> seeks_care;
    std::vector<std::int32_t> diagnosis_day;
    std::vector<std::int32_t> infectious_from;
    std::vector<std::int32_t> infectious_until;
    std::vector<std::uint8_t> doses;
    std::vector<std::int32_t> day_dose1;
    std::vector<std::int32_t> day_dose2;

    std::array<long, 2> rewire_entries{0, 0};  // main, casual
    std::array<long, 2> rewire_delayed{0, 0};

    double wall_seconds = 0.0;  // never written into deterministic outputs

    double final_cumulative_pct() const {
        return 100.0 * static_cast<double>(series.back().cumulative) / population;
    }
    long seed_count() const;
};

/// Scenario plus preloaded inputs shared across replicates.
struct SimContext {
    ScenarioConfig cfg;
    std::optional<DoseSchedule> schedule;
};

SimContext prepare_context(const ScenarioConfig& cfg);

/// Run one replicate. The daily order is: early-stop check, behavior change,
/// vaccination, stage progression, spread, one-time regeneration, persistent
/// rewiring, record. A negative vaccination start day advances only the dose
/// rollout; seeding still happens at day 0.
RunResult run_simulation(const SimContext& ctx, std::uint64_t seed, std::uint64_t stream);
RunResult run_simulation(const ScenarioConfig& cfg, std::uint64_t seed,
                         std::uint64_t stream);

}  // namespace mpoxsim
