#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace prd {

/// Mass below or equal to this threshold is treated as outside the support.
inline constexpr double kSupportThreshold = 1e-12;

/// Allowed deviation of the total mass from 1.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Probability distribution over a finite state space, stored densely.
///
/// Construction validates that there is at least one state, every weight is
/// finite and non-negative, and the weights sum to 1 within
/// kNormalizationTolerance. Violations throw DomainError.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> weights);

    /// Rescales non-negative weights (counts, unnormalized masses) to sum to 1.
    static DiscreteDistribution normalized(std::vector<double> weights);

    /// Point mass on `state` in a space of `size` states.
    static DiscreteDistribution point_mass(std::size_t size, std::size_t state);

    /// Uniform over the states listed in `support`.
    static DiscreteDistribution uniform_on(std::size_t size, std::span<const std::size_t> support);

    static DiscreteDistribution uniform(std::size_t size);

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> weights() const noexcept { return weights_; }
    double operator[](std::size_t i) const { return weights_[i]; }

    bool in_support(std::size_t i) const { return weights_[i] > kSupportThreshold; }

    friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

private:
    std::vector<double> weights_;
};

}  // namespace prd
