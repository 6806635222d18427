#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "mpoxsim/rng.hpp"

namespace mpoxsim {

/// Partnership tiers. Main and casual ties persist with geometric lifetimes;
/// one-time ties live for a single day.
enum class EdgeKind : std::uint8_t { main = 0, casual = 1, onetime = 2 };
inline constexpr int kEdgeKinds = 3;

const char* to_string(EdgeKind k);

namespace params {

// Relationship-type mix, ordered (main, casual) =
// (0,0) (0,1) (0,2) (1,0) (1,1) (1,2).
inline constexpr std::array<double, 6> kRelClassProbs = {0.471, 0.167, 0.074,
                                                         0.22,  0.047, 0.021};

// Sexual-activity strata 1..6 and the per-stratum daily probability of
// one-time partnership formation.
inline constexpr std::array<double, 6> kStrataProbs = {0.19, 0.19, 0.19,
                                                       0.19, 0.19, 0.05};
inline constexpr std::array<double, 6> kOnetimeProb = {0.0,    0.001,  0.0054,
                                                       0.0101, 0.0315, 0.286};

inline constexpr double kMainMeanDuration = 407.0;
inline constexpr double kCasualMeanDuration = 166.0;

inline constexpr double kMainContactProb = 0.22;
inline constexpr double kCasualContactProb = 0.14;
inline constexpr double kOnetimeContactProb = 1.0;

inline constexpr double kVaccineEfficacy1 = 0.358;
inline constexpr double kVaccineEfficacy2 = 0.66;
inline constexpr int kDoseGapDays = 28;

// Dose-availability scaling: reported weekly doses are male-fraction
// adjusted, then scaled from the national at-risk population to N.
inline constexpr double kDose1SexFactor = 0.91;
inline constexpr double kDose2SexFactor = 0.94;
inline constexpr double kAtRiskPopulation = 1998039.0;

// Optional per-node willingness caps (uptake probabilities of stopping at
// one dose vs completing two). Disabled unless a scenario turns them on.
inline constexpr double kWillingOneDose = 0.14;
inline constexpr double kWillingTwoDose = 0.227;

inline int target_main(int rel_class) { return rel_class >= 3 ? 1 : 0; }
inline int target_casual(int rel_class) { return rel_class % 3; }

inline double contact_prob(EdgeKind k) {
    switch (k) {
        case EdgeKind::main: return kMainContactProb;
        case EdgeKind::casual: return kCasualContactProb;
        default: return kOnetimeContactProb;
    }
}

}  // namespace params

/// Days between entering the infectious state and diagnosis. Starts at 15,
/// shrinks by one day per four days of outbreak, floor 5.
inline int diagnosis_delay(int day) {
    const int d = 15 - day / 4;
    return d < 5 ? 5 : d;
}

enum class IsolationMode : std::uint8_t { full, partial };
enum class BehaviorTargeting : std::uint8_t { universal, strata_5_6 };
enum class VaccineTargeting : std::uint8_t { random, top_strata };

/// Distribution of the per-node daily one-time partner count. `geometric`
/// draws Geometric(1 - p) on {0,1,2,...} (mean p/(1-p)); `bernoulli` draws
/// at most one partner per day (mean p).
enum class OnetimeCountModel : std::uint8_t { geometric, bernoulli };

struct BehaviorChangePolicy {
    int start_day = 70;
    double reduction = 0.5;  // p_onetime -> p_onetime_base * (1 - reduction)
    BehaviorTargeting targeting = BehaviorTargeting::strata_5_6;
};

struct VaccinationPolicy {
    int start_day = 30;  // negative: rollout begins before the outbreak
    VaccineTargeting targeting = VaccineTargeting::top_strata;
    std::string schedule_path;  // weekly dose CSV
    bool willingness_caps = false;
};

/// Complete description of one scenario. A (config, seed, stream) triple
/// fully determines a run.
struct ScenarioConfig {
    std::string name = "baseline";

    int population = 10000;
    int horizon_days = 250;

    double beta = 0.9;
    double seed_fraction = 0.001;

    double exposed_mean = 7.0;
    double exposed_sd = 1.0;
    double infectious_mean = 27.0;
    double infectious_sd = 3.0;

    double care_seek_prob = 0.8;
    IsolationMode isolation = IsolationMode::full;

    OnetimeCountModel onetime_count_model = OnetimeCountModel::geometric;

    std::optional<BehaviorChangePolicy> behavior_change;
    std::optional<VaccinationPolicy> vaccination;

    int replicates = 100;
    std::uint64_t base_seed = 1;

    bool record_edge_log = true;

    /// Throws ConfigError on out-of-range values.
    void validate() const;

    std::string to_json(int indent = 2) const;
    static ScenarioConfig from_json(const std::string& text);
    static ScenarioConfig load(const std::string& path);

    /// FNV-1a hash of the canonical dump, hex encoded.
    std::string config_hash() const;
};

/// Named scenarios used throughout: baseline, partial_isolation,
/// universal_bc, universal_bc_vax, targeted, optimistic, pessimistic,
/// optimistic_intervention, pessimistic_intervention, optimistic_low_beta,
/// optimistic_low_beta_intervention.
ScenarioConfig preset(const std::string& name,
                      const std::string& schedule_path = "data/jynneos_weekly_doses.csv");

const char* to_string(IsolationMode m);
const char* to_string(BehaviorTargeting t);
const char* to_string(VaccineTargeting t);
const char* to_string(OnetimeCountModel m);

}  // namespace mpoxsim
