#include "mpoxsim/partnerships.hpp"

#include <algorithm>
#include <cassert>

namespace mpoxsim {

namespace {

inline std::uint64_t pair_key(std::int32_t a, std::int32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

// Shuffle stubs and pair them sequentially. An invalid pair (self-loop or
// duplicate) is repaired by swapping its second stub with the first later
// stub that fits; an irreparable tail pair is dropped, which at realistic
// densities does not occur.
template <typename Valid, typename Emit>
void pair_stubs(std::vector<std::int32_t>& stubs, RngStream& rng, Valid&& valid,
                Emit&& emit) {
    rng.shuffle(stubs);
    const std::size_t n = stubs.size() - stubs.size() % 2;
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        const std::int32_t u = stubs[i];
        if (!valid(u, stubs[i + 1])) {
            bool fixed = false;
            for (std::size_t j = i + 2; j < n; ++j) {
                if (valid(u, stubs[j])) {
                    std::swap(stubs[i + 1], stubs[j]);
                    fixed = true;
                    break;
                }
            }
            if (!fixed) continue;
        }
        emit(u, stubs[i + 1]);
    }
}

void add_casual(PartnershipSet& ps, std::int32_t a, std::int32_t b) {
    auto& slots = ps.casual_partners[a];
    assert(slots[0] < 0 || slots[1] < 0);
    (slots[0] < 0 ? slots[0] : slots[1]) = b;
}

void remove_casual(PartnershipSet& ps, std::int32_t a, std::int32_t b) {
    auto& slots = ps.casual_partners[a];
    if (slots[0] == b)
        slots[0] = -1;
    else {
        assert(slots[1] == b);
        slots[1] = -1;
    }
}

void log_onetime(PartnershipSet& ps, std::int32_t u, std::int32_t v, int day) {
    if (ps.record_log)
        ps.edge_log.push_back({u, v, EdgeKind::onetime, day, day});
}

// Shared by init (backfill of any dropped pairs is skipped there) and the
// daily rewiring pass. Pairs wait-list entries FIFO: the head takes the first
// later entry that is not itself, not either side's most recent ex-partner
// and not already a live partner of the same kind.
void pair_waitlist(const Population& pop, PartnershipSet& ps, RngStream& rng,
                   EdgeKind kind, int day, bool count_delayed) {
    const bool is_main = kind == EdgeKind::main;
    auto& waitlist = is_main ? ps.rewiring.want_main : ps.rewiring.want_casual;
    auto& last_ex = is_main ? ps.rewiring.last_ex_main : ps.rewiring.last_ex_casual;
    auto& edges = is_main ? ps.main_edges : ps.casual_edges;
    const double mean_dur =
        is_main ? params::kMainMeanDuration : params::kCasualMeanDuration;

    std::size_t i = 0;
    while (i < waitlist.size()) {
        const std::int32_t x = waitlist[i].node;
        std::size_t match = waitlist.size();
        for (std::size_t j = i + 1; j < waitlist.size(); ++j) {
            const std::int32_t y = waitlist[j].node;
            if (y == x || last_ex[x] == y || last_ex[y] == x) continue;
            if (is_main) {
                if (ps.main_partner[x] == y) continue;
            } else if (ps.has_casual_edge(x, y)) {
                continue;
            }
            match = j;
            break;
        }
        if (match == waitlist.size()) {
            ++i;  // x keeps waiting
            continue;
        }
        const std::int32_t y = waitlist[match].node;
        const int dur = rng.draw_duration_geometric(mean_dur);
        edges.push_back({x, y, dur, day});
        if (is_main) {
            ps.main_partner[x] = y;
            ps.main_partner[y] = x;
        } else {
            add_casual(ps, x, y);
            add_casual(ps, y, x);
        }
        waitlist.erase(waitlist.begin() + static_cast<std::ptrdiff_t>(match));
        waitlist.erase(waitlist.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (count_delayed) {
        auto& delayed = ps.rewiring.delayed_rewire_entries[static_cast<int>(kind)];
        for (const auto& entry : waitlist)
            if (entry.arrival_day == day) ++delayed;
    }
    (void)pop;
}

}  // namespace

PartnershipSet init_relationships(const Population& pop, RngStream& rng,
                                  bool record_log) {
    const int n = pop.size;
    PartnershipSet ps;
    ps.record_log = record_log;
    ps.main_partner.assign(n, -1);
    ps.casual_partners.assign(n, {-1, -1});
    ps.rewiring.last_ex_main.assign(n, -1);
    ps.rewiring.last_ex_casual.assign(n, -1);

    // One-time stubs first, then main, then casual.
    std::vector<std::int32_t> stubs;
    std::unordered_set<std::uint64_t> today;
    for (int i = 0; i < n; ++i)
        stubs.insert(stubs.end(), pop.init_onetime_count[i], i);
    pair_stubs(
        stubs, rng,
        [&](std::int32_t u, std::int32_t v) {
            return u != v && !today.count(pair_key(u, v));
        },
        [&](std::int32_t u, std::int32_t v) {
            today.insert(pair_key(u, v));
            ps.onetime_pairs.emplace_back(u, v);
            log_onetime(ps, u, v, 0);
        });

    stubs.clear();
    for (int i = 0; i < n; ++i)
        stubs.insert(stubs.end(), pop.target_main[i], i);
    pair_stubs(
        stubs, rng, [&](std::int32_t u, std::int32_t v) { return u != v; },
        [&](std::int32_t u, std::int32_t v) {
            ps.main_edges.push_back({u, v, rng.draw_duration_geometric(params::kMainMeanDuration), 0});
            ps.main_partner[u] = v;
            ps.main_partner[v] = u;
        });

    stubs.clear();
    for (int i = 0; i < n; ++i)
        stubs.insert(stubs.end(), pop.target_casual[i], i);
    pair_stubs(
        stubs, rng,
        [&](std::int32_t u, std::int32_t v) {
            return u != v && !ps.has_casual_edge(u, v);
        },
        [&](std::int32_t u, std::int32_t v) {
            ps.casual_edges.push_back({u, v, rng.draw_duration_geometric(params::kCasualMeanDuration), 0});
            add_casual(ps, u, v);
            add_casual(ps, v, u);
        });

    // Backfill wait-list entries for nodes an irreparable pairing left below
    // target; these are not rewiring events and never count as delayed.
    for (int i = 0; i < n; ++i) {
        if (ps.live_main_count(i) < pop.target_main[i])
            ps.rewiring.want_main.push_back({i, 0});
        for (int k = ps.live_casual_count(i); k < pop.target_casual[i]; ++k)
            ps.rewiring.want_casual.push_back({i, 0});
    }
    return ps;
}

void update_onetime(const Population& pop, PartnershipSet& ps, RngStream& rng,
                    int day, OnetimeCountModel model) {
    const int n = pop.size;
    ps.onetime_pairs.clear();

    static thread_local std::vector<int> counts;
    counts.assign(n, 0);
    while (true) {
        long total = 0;
        for (int i = 0; i < n; ++i) {
            counts[i] = draw_onetime_count(pop.p_onetime[i], model, rng);
            total += counts[i];
        }
        if (total % 2 == 0) break;
    }

    std::vector<std::int32_t> stubs;
    for (int i = 0; i < n; ++i) stubs.insert(stubs.end(), counts[i], i);

    std::unordered_set<std::uint64_t> today;
    today.reserve(stubs.size());
    pair_stubs(
        stubs, rng,
        [&](std::int32_t u, std::int32_t v) {
            return u != v && !today.count(pair_key(u, v));
        },
        [&](std::int32_t u, std::int32_t v) {
            today.insert(pair_key(u, v));
            ps.onetime_pairs.emplace_back(u, v);
            log_onetime(ps, u, v, day);
        });
}

void update_persistent(const Population& pop, PartnershipSet& ps, RngStream& rng,
                       int day) {
    for (const EdgeKind kind : {EdgeKind::main, EdgeKind::casual}) {
        const bool is_main = kind == EdgeKind::main;
        auto& edges = is_main ? ps.main_edges : ps.casual_edges;
        auto& waitlist = is_main ? ps.rewiring.want_main : ps.rewiring.want_casual;
        auto& last_ex = is_main ? ps.rewiring.last_ex_main : ps.rewiring.last_ex_casual;
        auto& totals = ps.rewiring.total_rewire_entries[static_cast<int>(kind)];

        std::size_t keep = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            Edge edge = edges[e];
            if (--edge.remaining_days > 0) {
                edges[keep++] = edge;
                continue;
            }
            if (ps.record_log)
                ps.edge_log.push_back({edge.u, edge.v, kind, edge.formed_day, day});
            if (is_main) {
                ps.main_partner[edge.u] = -1;
                ps.main_partner[edge.v] = -1;
            } else {
                remove_casual(ps, edge.u, edge.v);
                remove_casual(ps, edge.v, edge.u);
            }
            last_ex[edge.u] = edge.v;
            last_ex[edge.v] = edge.u;
            waitlist.push_back({edge.u, day});
            waitlist.push_back({edge.v, day});
            totals += 2;
        }
        edges.resize(keep);
        pair_waitlist(pop, ps, rng, kind, day, /*count_delayed=*/true);
    }
}

void flush_edge_log(PartnershipSet& ps, int final_day) {
    if (!ps.record_log) return;
    for (const auto& e : ps.main_edges)
        ps.edge_log.push_back({e.u, e.v, EdgeKind::main, e.formed_day, final_day});
    for (const auto& e : ps.casual_edges)
        ps.edge_log.push_back({e.u, e.v, EdgeKind::casual, e.formed_day, final_day});
}

}  // namespace mpoxsim
