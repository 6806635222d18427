#pragma once

#include <cstdint>
#include <vector>

#include "mpoxsim/config.hpp"
#include "mpoxsim/rng.hpp"

namespace mpoxsim {

/// Node roster: relationship class, activity stratum and one-time propensity
/// per node, plus the init-time one-time count draws used for day-0 edges.
///
/// Assignment repeats wholesale until the main, casual and one-time stub sums
/// are all even, so a configuration-model pairing always exists.
struct Population {
    int size = 0;

    std::vector<std::uint8_t> rel_class;   // 0..5, see params::kRelClassProbs
    std::vector<std::uint8_t> stratum;     // 1..6
    std::vector<std::uint8_t> target_main;
    std::vector<std::uint8_t> target_casual;

    std::vector<double> p_onetime;       // current (intervention-adjusted)
    std::vector<double> p_onetime_base;  // assigned at init

    std::vector<int> init_onetime_count;  // day-0 one-time stub counts

    bool in_top_strata(int node) const { return stratum[node] >= 5; }
};

Population create_population(int n, RngStream& rng,
                             OnetimeCountModel model = OnetimeCountModel::geometric);

/// Draw one day's one-time partner count for a node with propensity p.
int draw_onetime_count(double p, OnetimeCountModel model, RngStream& rng);

}  // namespace mpoxsim
