#include "mpoxsim/interventions.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mpoxsim {

double DoseSchedule::total_dose1() const {
    return std::accumulate(dose1_per_day.begin(), dose1_per_day.end(), 0.0);
}

double DoseSchedule::total_dose2() const {
    return std::accumulate(dose2_per_day.begin(), dose2_per_day.end(), 0.0);
}

DoseSchedule build_dose_schedule(const std::vector<WeeklyDoseRecord>& weeks,
                                 int population, double at_risk_pop) {
    DoseSchedule s;
    s.dose1_per_day.reserve(weeks.size() * 7);
    s.dose2_per_day.reserve(weeks.size() * 7);
    for (const auto& w : weeks) {
        if (w.first_doses < 0 || w.second_doses < 0)
            throw ConfigError("dose schedule: negative weekly count");
        const double d1 =
            w.first_doses * params::kDose1SexFactor / at_risk_pop * population / 7.0;
        const double d2 =
            w.second_doses * params::kDose2SexFactor / at_risk_pop * population / 7.0;
        for (int d = 0; d < 7; ++d) {
            s.dose1_per_day.push_back(d1);
            s.dose2_per_day.push_back(d2);
        }
    }
    return s;
}

DoseSchedule load_dose_schedule(const std::string& path, int population,
                                double at_risk_pop) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dose schedule: " + path);
    std::vector<WeeklyDoseRecord> weeks;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {  // first row is a header
            header = false;
            continue;
        }
        std::istringstream row(line);
        WeeklyDoseRecord rec;
        std::string field;
        if (!std::getline(row, rec.week_start, ',') || !std::getline(row, field, ','))
            throw ConfigError("dose schedule: malformed row: " + line);
        rec.first_doses = std::stod(field);
        if (!std::getline(row, field, ','))
            throw ConfigError("dose schedule: malformed row: " + line);
        rec.second_doses = std::stod(field);
        weeks.push_back(rec);
    }
    if (weeks.empty()) throw ConfigError("dose schedule is empty: " + path);
    return build_dose_schedule(weeks, population, at_risk_pop);
}

namespace {

int allocate(std::vector<std::int32_t>& pool, int doses, HealthLedger& ledger,
             int sim_day, int dose_number, RngStream& rng) {
    const int take = std::min<int>(doses, static_cast<int>(pool.size()));
    if (take <= 0) return 0;
    rng.partial_sample(pool, static_cast<std::size_t>(take));
    for (int k = 0; k < take; ++k) {
        const int node = pool[k];
        if (dose_number == 1) {
            ledger.doses[node] = 1;
            ledger.day_dose1[node] = sim_day;
            ledger.susceptibility[node] = 1.0 - params::kVaccineEfficacy1;
        } else {
            ledger.doses[node] = 2;
            ledger.day_dose2[node] = sim_day;
            ledger.susceptibility[node] = 1.0 - params::kVaccineEfficacy2;
        }
    }
    return take;
}

}  // namespace

void vaccinate_step(const Population& pop, HealthLedger& ledger,
                    const DoseSchedule& schedule, int schedule_day, int sim_day,
                    const VaccinationPolicy& policy, DoseCarry& carry, RngStream& rng) {
    const int n = pop.size;

    const double avail1 = schedule.dose1(schedule_day) + carry.dose1;
    const int n1 = static_cast<int>(std::floor(avail1));
    carry.dose1 = avail1 - n1;
    if (n1 > 0) {
        std::vector<std::int32_t> primary, fallback;
        for (int i = 0; i < n; ++i) {
            if (ledger.doses[i] != 0) continue;
            if (ledger.state[i] == Disease::I || ledger.state[i] == Disease::R) continue;
            if (policy.willingness_caps &&
                ledger.willingness[i] >= params::kWillingOneDose + params::kWillingTwoDose)
                continue;
            if (policy.targeting == VaccineTargeting::top_strata && !pop.in_top_strata(i))
                fallback.push_back(i);
            else
                primary.push_back(i);
        }
        const int given = allocate(primary, n1, ledger, sim_day, 1, rng);
        allocate(fallback, n1 - given, ledger, sim_day, 1, rng);
    }

    const double avail2 = schedule.dose2(schedule_day) + carry.dose2;
    const int n2 = static_cast<int>(std::floor(avail2));
    carry.dose2 = avail2 - n2;
    if (n2 > 0) {
        std::vector<std::int32_t> eligible;
        for (int i = 0; i < n; ++i) {
            if (ledger.doses[i] != 1) continue;
            if (sim_day - ledger.day_dose1[i] < params::kDoseGapDays) continue;
            if (policy.willingness_caps &&
                ledger.willingness[i] >= params::kWillingTwoDose)
                continue;
            eligible.push_back(i);
        }
        allocate(eligible, n2, ledger, sim_day, 2, rng);
    }
}

void apply_behavior_change(Population& pop, const BehaviorChangePolicy& policy) {
    for (int i = 0; i < pop.size; ++i) {
        if (policy.targeting == BehaviorTargeting::strata_5_6 && !pop.in_top_strata(i))
            continue;
        pop.p_onetime[i] = pop.p_onetime_base[i] * (1.0 - policy.reduction);
    }
}

}  // namespace mpoxsim
