#include "random_distributions.hpp"

#include <vector>

namespace prd::testing {

DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t states,
                                         const DistributionGen& gen) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(states, 0.0);
    bool any = false;
    for (double& x : w) {
        if (unit(rng) >= gen.zero_probability) {
            x = gen.min_weight + (1.0 - gen.min_weight) * unit(rng);
            any = any || x > 0.0;
        }
    }
    if (!any) {
        std::uniform_int_distribution<std::size_t> pick(0, states - 1);
        w[pick(rng)] = 1.0;
    }
    return DiscreteDistribution::normalized(std::move(w));
}

DistributionPair random_pair(std::mt19937_64& rng, const DistributionGen& gen) {
    std::uniform_int_distribution<std::size_t> size(gen.min_states, gen.max_states);
    const std::size_t n = size(rng);
    auto p = random_distribution(rng, n, gen);
    auto q = random_distribution(rng, n, gen);
    return {std::move(p), std::move(q)};
}

}  // namespace prd::testing
