#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "prd/distribution.hpp"

namespace prd::testing {

struct DistributionGen {
    std::size_t min_states = 2;
    std::size_t max_states = 8;
    double zero_probability = 0.25;  // chance a state gets no mass
    double min_weight = 0.0;         // lower bound of raw weights on the support
};

// Random histogram pair over the same number of states. Each state is zeroed
// with `zero_probability`, otherwise gets a raw weight uniform in
// [min_weight, 1); at least one state always keeps mass.
struct DistributionPair {
    DiscreteDistribution p;
    DiscreteDistribution q;
};

DiscreteDistribution random_distribution(std::mt19937_64& rng, std::size_t states,
                                         const DistributionGen& gen);

DistributionPair random_pair(std::mt19937_64& rng, const DistributionGen& gen = {});

}  // namespace prd::testing
