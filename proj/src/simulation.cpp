#include "mpoxsim/simulation.hpp"

#include <chrono>

namespace mpoxsim {

long RunResult::seed_count() const {
    long k = 0;
    for (const auto& r : records)
        if (r.source < 0) ++k;
    return k;
}

SimContext prepare_context(const ScenarioConfig& cfg) {
    cfg.validate();
    SimContext ctx{cfg, std::nullopt};
    if (cfg.vaccination)
        ctx.schedule = load_dose_schedule(cfg.vaccination->schedule_path, cfg.population);
    return ctx;
}

RunResult run_simulation(const SimContext& ctx, std::uint64_t seed, std::uint64_t stream) {
    const auto t_start = std::chrono::steady_clock::now();
    const ScenarioConfig& cfg = ctx.cfg;
    const int n = cfg.population;
    const int horizon = cfg.horizon_days;

    RngStream rng(seed, stream);
    Population pop = create_population(n, rng, cfg.onetime_count_model);
    HealthLedger ledger(n, cfg.care_seek_prob, rng);

    const bool caps = cfg.vaccination && cfg.vaccination->willingness_caps;
    if (caps)
        for (int i = 0; i < n; ++i) ledger.willingness[i] = rng.uniform01();

    std::vector<InfectionRecord> records;
    std::vector<std::array<std::uint32_t, kEdgeKinds>> contacts(
        n, std::array<std::uint32_t, kEdgeKinds>{0, 0, 0});
    DoseCarry carry;

    // Pre-outbreak rollout: only the dose schedule advances before day 0.
    if (cfg.vaccination && cfg.vaccination->start_day < 0) {
        for (int t = cfg.vaccination->start_day; t < 0; ++t)
            vaccinate_step(pop, ledger, *ctx.schedule, t - cfg.vaccination->start_day, t,
                           *cfg.vaccination, carry, rng);
    }

    seed_infections(pop, ledger, cfg.seed_fraction, cfg, rng, records);
    PartnershipSet ps = init_relationships(pop, rng, cfg.record_edge_log);

    std::vector<DayCounts> series(static_cast<std::size_t>(horizon) + 1);
    auto snapshot = [&](int day) {
        series[day] = {static_cast<std::int32_t>(ledger.count(Disease::S)),
                       static_cast<std::int32_t>(ledger.count(Disease::E)),
                       static_cast<std::int32_t>(ledger.count(Disease::I)),
                       static_cast<std::int32_t>(ledger.count(Disease::R)),
                       ledger.cumulative_infections};
    };
    snapshot(0);

    int final_day = horizon;
    for (int t = 1; t <= horizon; ++t) {
        if (ledger.count(Disease::E) + ledger.count(Disease::I) == 0) {
            final_day = t - 1;
            break;
        }
        if (cfg.behavior_change && t == cfg.behavior_change->start_day)
            apply_behavior_change(pop, *cfg.behavior_change);
        if (cfg.vaccination && t >= cfg.vaccination->start_day)
            vaccinate_step(pop, ledger, *ctx.schedule, t - cfg.vaccination->start_day, t,
                           *cfg.vaccination, carry, rng);
        advance_disease(ledger, t, cfg, rng);
        contact_and_transmit(pop, ps, ledger, t, cfg, rng, records, contacts);
        update_onetime(pop, ps, rng, t, cfg.onetime_count_model);
        update_persistent(pop, ps, rng, t);
        snapshot(t);
    }
    for (int t = final_day + 1; t <= horizon; ++t) series[t] = series[final_day];
    flush_edge_log(ps, final_day);

    RunResult out;
    out.scenario = cfg.name;
    out.seed = seed;
    out.stream = stream;
    out.population = n;
    out.horizon_days = horizon;
    out.final_day = final_day;
    out.series = std::move(series);
    out.records = std::move(records);
    out.contacts = std::move(contacts);
    out.edge_log = std::move(ps.edge_log);
    out.rel_class = std::move(pop.rel_class);
    out.stratum = std::move(pop.stratum);
    out.seeks_care = std::move(ledger.seeks_care);
    out.diagnosis_day = std::move(ledger.diagnosis_day);
    out.infectious_from = std::move(ledger.infectious_from);
    out.infectious_until = std::move(ledger.infectious_until);
    out.doses = std::move(ledger.doses);
    out.day_dose1 = std::move(ledger.day_dose1);
    out.day_dose2 = std::move(ledger.day_dose2);
    out.rewire_entries = ps.rewiring.total_rewire_entries;
    out.rewire_delayed = ps.rewiring.delayed_rewire_entries;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

RunResult run_simulation(const ScenarioConfig& cfg, std::uint64_t seed,
                         std::uint64_t stream) {
    return run_simulation(prepare_context(cfg), seed, stream);
}

}  // namespace mpoxsim
