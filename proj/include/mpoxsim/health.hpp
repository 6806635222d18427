#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mpoxsim/config.hpp"
#include "mpoxsim/partnerships.hpp"
#include "mpoxsim/population.hpp"
#include "mpoxsim/rng.hpp"

namespace mpoxsim {

enum class Disease : std::uint8_t { S = 0, E = 1, I = 2, R = 3 };

/// One infection event. Seed infections carry source == -1 and
/// kind == EdgeKind::onetime is never read for them (exported blank).
struct InfectionRecord {
    std::int32_t source;
    std::int32_t target;
    std::int32_t day;
    EdgeKind kind;
};

/// Per-node disease state, stage timers, care-seeking and vaccination status.
struct HealthLedger {
    std::vector<Disease> state;
    std::vector<std::int16_t> days_left_exposed;
    std::vector<std::int16_t> days_left_infectious;
    std::vector<std::uint8_t> seeks_care;
    std::vector<std::int32_t> diagnosis_day;  // -1 never diagnosed
    std::vector<std::int32_t> infectious_from;   // day of I entry, -1 if never
    std::vector<std::int32_t> infectious_until;  // day of R entry, -1 while I/E/S

    std::vector<std::uint8_t> doses;
    std::vector<std::int32_t> day_dose1;  // may be negative (pre-outbreak rollout)
    std::vector<std::int32_t> day_dose2;
    std::vector<double> susceptibility;   // 1, 1-VE1, 1-VE2
    std::vector<double> willingness;      // uptake threshold, used only with caps

    std::array<long, 4> counts{0, 0, 0, 0};  // S,E,I,R
    long cumulative_infections = 0;          // seeds included

    explicit HealthLedger(int n, double care_seek_prob, RngStream& rng);

    long count(Disease d) const { return counts[static_cast<int>(d)]; }

    bool isolating(int node, int day) const {
        return diagnosis_day[node] >= 0 && day >= diagnosis_day[node] &&
               state[node] == Disease::I;
    }

    /// Contact-probability factor applied to an isolating infectious node.
    static double isolation_multiplier(bool isolating, EdgeKind kind,
                                       IsolationMode mode) {
        if (!isolating) return 1.0;
        if (mode == IsolationMode::full || kind == EdgeKind::onetime) return 0.0;
        return 0.5;
    }

    /// Move a node into I: draw the infectious duration and, for
    /// care-seekers, schedule diagnosis (and with it isolation).
    void begin_infectious(int node, int day, const ScenarioConfig& cfg, RngStream& rng);
};

/// Infect round(fraction*N) nodes drawn uniformly from strata 5-6; they start
/// infectious with null-source records. Throws if the strata pool is too small.
void seed_infections(const Population& pop, HealthLedger& ledger, double fraction,
                     const ScenarioConfig& cfg, RngStream& rng,
                     std::vector<InfectionRecord>& records);

/// Daily stage progression: decrement timers, then E->I and I->R.
void advance_disease(HealthLedger& ledger, int day, const ScenarioConfig& cfg,
                     RngStream& rng);

/// One spread pass over the day's serodiscordant edges. Contacts are tallied
/// per node and kind (both endpoints); transmissions append records and expose
/// targets. Main edges are evaluated first, then casual, then one-time, each
/// in storage order, so simultaneous exposures resolve deterministically.
void contact_and_transmit(const Population& pop, const PartnershipSet& ps,
                          HealthLedger& ledger, int day, const ScenarioConfig& cfg,
                          RngStream& rng, std::vector<InfectionRecord>& records,
                          std::vector<std::array<std::uint32_t, kEdgeKinds>>& contacts);

}  // namespace mpoxsim
