#pragma once

#include <string>
#include <vector>

#include "mpoxsim/config.hpp"
#include "mpoxsim/health.hpp"
#include "mpoxsim/population.hpp"
#include "mpoxsim/rng.hpp"

namespace mpoxsim {

/// Per-day first- and second-dose availability, scaled to the simulated
/// population. Fractional doses carry over between days.
struct DoseSchedule {
    std::vector<double> dose1_per_day;
    std::vector<double> dose2_per_day;

    double dose1(int schedule_day) const {
        return schedule_day >= 0 && schedule_day < static_cast<int>(dose1_per_day.size())
                   ? dose1_per_day[schedule_day]
                   : 0.0;
    }
    double dose2(int schedule_day) const {
        return schedule_day >= 0 && schedule_day < static_cast<int>(dose2_per_day.size())
                   ? dose2_per_day[schedule_day]
                   : 0.0;
    }
    double total_dose1() const;
    double total_dose2() const;
};

struct WeeklyDoseRecord {
    std::string week_start;
    double first_doses = 0;
    double second_doses = 0;
};

/// daily dose-k = weekly_k * sex_factor_k / at_risk_pop * N / 7.
DoseSchedule build_dose_schedule(const std::vector<WeeklyDoseRecord>& weeks,
                                 int population,
                                 double at_risk_pop = params::kAtRiskPopulation);

/// Read a weekly CSV (week_start,first_doses,second_doses) and scale it.
DoseSchedule load_dose_schedule(const std::string& path, int population,
                                double at_risk_pop = params::kAtRiskPopulation);

/// Carryover accumulators for the daily vaccination pass.
struct DoseCarry {
    double dose1 = 0.0;
    double dose2 = 0.0;
};

/// One day of dose allocation per the rollout schedule. Dose-1 recipients are
/// sampled from never-dosed nodes outside I and R (targeted policies draw
/// from strata 5-6 first, falling back to the rest); dose-2 recipients from
/// dose-1 nodes at least 28 days out. Whole doses that find no recipient are
/// forfeited; fractional remainders carry to the next day.
void vaccinate_step(const Population& pop, HealthLedger& ledger,
                    const DoseSchedule& schedule, int schedule_day, int sim_day,
                    const VaccinationPolicy& policy, DoseCarry& carry, RngStream& rng);

/// Scale targeted nodes' one-time propensity to base * (1 - reduction).
/// Anchored to the base value, so reapplication is idempotent.
void apply_behavior_change(Population& pop, const BehaviorChangePolicy& policy);

}  // namespace mpoxsim
