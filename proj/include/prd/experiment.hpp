#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "prd/feature_set.hpp"
#include "prd/histograms.hpp"

namespace prd {

/// Per-class 50/50 partition of a labeled set. For every class the row
/// indices are shuffled with the seed; the first floor(n / 2) go to the
/// reference (test) side, the remainder to the model (train) side.
struct ClassSplit {
    std::map<std::int32_t, std::vector<std::size_t>> reference_rows;
    std::map<std::int32_t, std::vector<std::size_t>> model_rows;
};

/// Throws MissingClassError listing every id in [0, classes) that has no
/// rows, and DomainError when the set has no labels.
ClassSplit split_classes(const FeatureSet& labeled, std::size_t classes, std::uint64_t seed);

struct ModeExperimentOptions {
    std::size_t ref_classes = 5;
    std::size_t steps = 10;
    ClusteringOptions clustering;
};

struct ModeStep {
    std::size_t classes_in_model;  // i: Q_i holds classes 0..i-1
    std::vector<std::size_t> reference_indices;
    std::vector<std::size_t> model_indices;
    AveragedPrd result;
};

/// Reference P = test rows of classes 0..ref_classes-1; Q_i = train rows of
/// classes 0..i-1 for i = 1..steps. Every step reclusters the union. The
/// split uses clustering.seed; every step uses the same clustering seeds.
std::vector<ModeStep> run_mode_experiment(const FeatureSet& labeled,
                                          const ModeExperimentOptions& options);

}  // namespace prd
