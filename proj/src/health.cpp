#include "mpoxsim/health.hpp"

#include <cmath>

namespace mpoxsim {

HealthLedger::HealthLedger(int n, double care_seek_prob, RngStream& rng) {
    state.assign(n, Disease::S);
    days_left_exposed.assign(n, 0);
    days_left_infectious.assign(n, 0);
    seeks_care.resize(n);
    diagnosis_day.assign(n, -1);
    infectious_from.assign(n, -1);
    infectious_until.assign(n, -1);
    doses.assign(n, 0);
    day_dose1.assign(n, 0);
    day_dose2.assign(n, -1);
    susceptibility.assign(n, 1.0);
    willingness.assign(n, 0.0);
    counts = {n, 0, 0, 0};
    for (int i = 0; i < n; ++i)
        seeks_care[i] = rng.bernoulli(care_seek_prob) ? 1 : 0;
}

void HealthLedger::begin_infectious(int node, int day, const ScenarioConfig& cfg,
                                    RngStream& rng) {
    state[node] = Disease::I;
    days_left_infectious[node] =
        static_cast<std::int16_t>(rng.draw_stage_days(cfg.infectious_mean, cfg.infectious_sd));
    infectious_from[node] = day;
    if (seeks_care[node]) diagnosis_day[node] = day + diagnosis_delay(day);
}

void seed_infections(const Population& pop, HealthLedger& ledger, double fraction,
                     const ScenarioConfig& cfg, RngStream& rng,
                     std::vector<InfectionRecord>& records) {
    const int n = pop.size;
    const int want = static_cast<int>(std::llround(fraction * n));
    if (want == 0) return;

    std::vector<std::int32_t> eligible;
    for (int i = 0; i < n; ++i)
        if (pop.in_top_strata(i)) eligible.push_back(i);
    if (static_cast<int>(eligible.size()) < want)
        throw ConfigError("seed count exceeds strata 5-6 membership");

    rng.partial_sample(eligible, static_cast<std::size_t>(want));
    for (int k = 0; k < want; ++k) {
        const int node = eligible[k];
        ledger.counts[static_cast<int>(Disease::S)]--;
        ledger.counts[static_cast<int>(Disease::I)]++;
        ledger.begin_infectious(node, 0, cfg, rng);
        ledger.cumulative_infections++;
        records.push_back({-1, node, 0, EdgeKind::onetime});
    }
}

void advance_disease(HealthLedger& ledger, int day, const ScenarioConfig& cfg,
                     RngStream& rng) {
    const int n = static_cast<int>(ledger.state.size());
    for (int i = 0; i < n; ++i) {
        if (ledger.state[i] == Disease::E) {
            if (--ledger.days_left_exposed[i] <= 0) {
                ledger.counts[static_cast<int>(Disease::E)]--;
                ledger.counts[static_cast<int>(Disease::I)]++;
                ledger.begin_infectious(i, day, cfg, rng);
            }
        } else if (ledger.state[i] == Disease::I) {
            if (--ledger.days_left_infectious[i] <= 0) {
                ledger.state[i] = Disease::R;
                ledger.infectious_until[i] = day;
                ledger.counts[static_cast<int>(Disease::I)]--;
                ledger.counts[static_cast<int>(Disease::R)]++;
            }
        }
    }
}

namespace {

inline void evaluate_edge(std::int32_t a, std::int32_t b, EdgeKind kind,
                          const ScenarioConfig& cfg, HealthLedger& ledger, int day,
                          RngStream& rng, std::vector<InfectionRecord>& records,
                          std::vector<std::array<std::uint32_t, kEdgeKinds>>& contacts) {
    // Only I-S pairs are serodiscordant; E nodes never transmit.
    std::int32_t src, dst;
    if (ledger.state[a] == Disease::I && ledger.state[b] == Disease::S) {
        src = a;
        dst = b;
    } else if (ledger.state[b] == Disease::I && ledger.state[a] == Disease::S) {
        src = b;
        dst = a;
    } else {
        return;
    }

    const double p_contact =
        params::contact_prob(kind) *
        HealthLedger::isolation_multiplier(ledger.isolating(src, day), kind,
                                           cfg.isolation);
    if (p_contact <= 0.0 || !rng.bernoulli(p_contact)) return;

    contacts[src][static_cast<int>(kind)]++;
    contacts[dst][static_cast<int>(kind)]++;

    if (!rng.bernoulli(cfg.beta * ledger.susceptibility[dst])) return;

    ledger.state[dst] = Disease::E;
    ledger.days_left_exposed[dst] =
        static_cast<std::int16_t>(rng.draw_stage_days(cfg.exposed_mean, cfg.exposed_sd));
    ledger.counts[static_cast<int>(Disease::S)]--;
    ledger.counts[static_cast<int>(Disease::E)]++;
    ledger.cumulative_infections++;
    records.push_back({src, dst, day, kind});
}

}  // namespace

void contact_and_transmit(const Population& pop, const PartnershipSet& ps,
                          HealthLedger& ledger, int day, const ScenarioConfig& cfg,
                          RngStream& rng, std::vector<InfectionRecord>& records,
                          std::vector<std::array<std::uint32_t, kEdgeKinds>>& contacts) {
    if (ledger.count(Disease::I) == 0) return;
    for (const auto& e : ps.main_edges)
        evaluate_edge(e.u, e.v, EdgeKind::main, cfg, ledger, day, rng, records, contacts);
    for (const auto& e : ps.casual_edges)
        evaluate_edge(e.u, e.v, EdgeKind::casual, cfg, ledger, day, rng, records, contacts);
    for (const auto& [u, v] : ps.onetime_pairs)
        evaluate_edge(u, v, EdgeKind::onetime, cfg, ledger, day, rng, records, contacts);
    (void)pop;
}

}  // namespace mpoxsim
