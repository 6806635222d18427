#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mpoxsim/config.hpp"
#include "mpoxsim/population.hpp"
#include "mpoxsim/rng.hpp"

namespace mpoxsim {

/// Persistent (main/casual) partnership. remaining_days counts down once per
/// step; the edge dissolves when it reaches 0.
struct Edge {
    std::int32_t u = -1;
    std::int32_t v = -1;
    std::int32_t remaining_days = 0;
    std::int32_t formed_day = 0;
};

/// One row per edge lifetime. first_day..last_day is the inclusive range of
/// days the edge was in force (eligible for contact); one-time rows have
/// first_day == last_day. last_day == -1 marks an edge still live at run end
/// until flush_edge_log() stamps it.
struct EdgeLogRow {
    std::int32_t u;
    std::int32_t v;
    EdgeKind kind;
    std::int32_t first_day;
    std::int32_t last_day;
};

/// Wait-lists for nodes seeking a replacement partner, the per-node
/// most-recent ex-partner (never re-paired immediately) and the
/// delayed-rewiring tallies behind the stationarity checks.
struct RewiringState {
    struct WaitEntry {
        std::int32_t node;
        std::int32_t arrival_day;
    };
    std::vector<WaitEntry> want_main;
    std::vector<WaitEntry> want_casual;
    std::vector<std::int32_t> last_ex_main;    // -1 when none
    std::vector<std::int32_t> last_ex_casual;  // -1 when none

    // Indexed by EdgeKind (main, casual); one-time never rewires.
    std::array<long, 2> total_rewire_entries{0, 0};
    std::array<long, 2> delayed_rewire_entries{0, 0};
};

/// Live partnership structure for one replicate.
struct PartnershipSet {
    std::vector<Edge> main_edges;
    std::vector<Edge> casual_edges;
    std::vector<std::pair<std::int32_t, std::int32_t>> onetime_pairs;

    // Live-partner mirrors for O(1) duplicate checks and degree queries.
    std::vector<std::int32_t> main_partner;                    // -1 when none
    std::vector<std::array<std::int32_t, 2>> casual_partners;  // -1 slots

    RewiringState rewiring;

    std::vector<EdgeLogRow> edge_log;
    bool record_log = true;

    int live_main_count(int node) const { return main_partner[node] >= 0 ? 1 : 0; }
    int live_casual_count(int node) const {
        return (casual_partners[node][0] >= 0 ? 1 : 0) +
               (casual_partners[node][1] >= 0 ? 1 : 0);
    }
    bool has_casual_edge(int a, int b) const {
        return casual_partners[a][0] == b || casual_partners[a][1] == b;
    }
};

/// Stubs of each kind shuffled and paired (Alg.-2 style day-0 build):
/// one-time first, then main and casual with geometric durations.
PartnershipSet init_relationships(const Population& pop, RngStream& rng,
                                  bool record_log = true);

/// Regenerate the one-time edge set. Counts are redrawn wholesale until the
/// stub sum is even; the resulting edges are in force on day `day`.
void update_onetime(const Population& pop, PartnershipSet& ps, RngStream& rng,
                    int day, OnetimeCountModel model);

/// Age persistent edges, dissolve the expired ones into the wait-lists and
/// re-pair waiting nodes FIFO, skipping most-recent ex-partners. Entries that
/// cannot pair the day they arrive count as delayed rewirings.
void update_persistent(const Population& pop, PartnershipSet& ps, RngStream& rng,
                       int day);

/// Stamp still-live persistent edges into the log with last_day = final_day.
void flush_edge_log(PartnershipSet& ps, int final_day);

}  // namespace mpoxsim
