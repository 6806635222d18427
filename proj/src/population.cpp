#include "mpoxsim/population.hpp"

namespace mpoxsim {

int draw_onetime_count(double p, OnetimeCountModel model, RngStream& rng) {
    if (model == OnetimeCountModel::bernoulli) return rng.bernoulli(p) ? 1 : 0;
    return rng.draw_count_geometric(p);
}

Population create_population(int n, RngStream& rng, OnetimeCountModel model) {
    if (n < 2) throw ConfigError("population must have at least 2 nodes");

    Population pop;
    pop.size = n;
    pop.rel_class.resize(n);
    pop.stratum.resize(n);
    pop.target_main.resize(n);
    pop.target_casual.resize(n);
    pop.p_onetime.resize(n);
    pop.p_onetime_base.resize(n);
    pop.init_onetime_count.resize(n);

    // Resample the whole assignment until every stub sum is even.
    while (true) {
        long sum_main = 0, sum_casual = 0, sum_onetime = 0;
        for (int i = 0; i < n; ++i) {
            const int rc = static_cast<int>(rng.draw_categorical(params::kRelClassProbs));
            const int st = static_cast<int>(rng.draw_categorical(params::kStrataProbs)) + 1;
            pop.rel_class[i] = static_cast<std::uint8_t>(rc);
            pop.stratum[i] = static_cast<std::uint8_t>(st);
            pop.target_main[i] = static_cast<std::uint8_t>(params::target_main(rc));
            pop.target_casual[i] = static_cast<std::uint8_t>(params::target_casual(rc));
            const double p = params::kOnetimeProb[st - 1];
            pop.p_onetime_base[i] = p;
            pop.p_onetime[i] = p;
            pop.init_onetime_count[i] = draw_onetime_count(p, model, rng);
            sum_main += pop.target_main[i];
            sum_casual += pop.target_casual[i];
            sum_onetime += pop.init_onetime_count[i];
        }
        if (sum_main % 2 == 0 && sum_casual % 2 == 0 && sum_onetime % 2 == 0) break;
    }
    return pop;
}

}  // namespace mpoxsim
