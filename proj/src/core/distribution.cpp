#include "prd/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "prd/errors.hpp"

namespace prd {

namespace {

void check_weights(const std::vector<double>& weights) {
    if (weights.empty()) {
        throw DomainError("distribution must have at least one state");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw DomainError("distribution weight " + std::to_string(i) +
                              " is negative or not finite");
        }
    }
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
    check_weights(weights_);
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw DomainError("distribution weights sum to " + std::to_string(total) +
                          ", expected 1");
    }
}

DiscreteDistribution DiscreteDistribution::normalized(std::vector<double> weights) {
    check_weights(weights);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        throw DomainError("cannot normalize weights with zero total mass");
    }
    for (double& w : weights) {
        w /= total;
    }
    return DiscreteDistribution(std::move(weights));
}

DiscreteDistribution DiscreteDistribution::point_mass(std::size_t size, std::size_t state) {
    if (state >= size) {
        throw DomainError("point mass state out of range");
    }
    std::vector<double> w(size, 0.0);
    w[state] = 1.0;
    return DiscreteDistribution(std::move(w));
}

DiscreteDistribution DiscreteDistribution::uniform_on(std::size_t size,
                                                      std::span<const std::size_t> support) {
    std::vector<double> w(size, 0.0);
    for (std::size_t s : support) {
        if (s >= size) {
            throw DomainError("support state out of range");
        }
        w[s] = 1.0;
    }
    return normalized(std::move(w));
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t size) {
    return normalized(std::vector<double>(size, 1.0));
}

}  // namespace prd
