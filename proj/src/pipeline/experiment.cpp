#include "prd/experiment.hpp"

#include <algorithm>
#include <string>

#include "prd/errors.hpp"
#include "prd/random.hpp"

namespace prd {

ClassSplit split_classes(const FeatureSet& labeled, std::size_t classes, std::uint64_t seed) {
    if (!labeled.has_labels()) {
        throw DomainError("the mode experiment needs a labeled feature set");
    }
    std::map<std::int32_t, std::vector<std::size_t>> rows_by_class;
    const auto& labels = *labeled.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= 0 && static_cast<std::size_t>(labels[i]) < classes) {
            rows_by_class[labels[i]].push_back(i);
        }
    }

    std::vector<int> missing;
    for (std::size_t c = 0; c < classes; ++c) {
        if (!rows_by_class.contains(static_cast<std::int32_t>(c))) {
            missing.push_back(static_cast<int>(c));
        }
    }
    if (!missing.empty()) {
        std::string ids;
        for (int c : missing) {
            ids += (ids.empty() ? "" : ",") + std::to_string(c);
        }
        throw MissingClassError(missing, "missing class ids: " + ids);
    }

    ClassSplit split;
    Rng rng(seed);
    for (auto& [cls, rows] : rows_by_class) {
        rng.shuffle(rows.begin(), rows.end());
        const auto half = static_cast<std::ptrdiff_t>(rows.size() / 2);
        std::vector<std::size_t> reference(rows.begin(), rows.begin() + half);
        std::vector<std::size_t> model(rows.begin() + half, rows.end());
        std::sort(reference.begin(), reference.end());
        std::sort(model.begin(), model.end());
        split.reference_rows.emplace(cls, std::move(reference));
        split.model_rows.emplace(cls, std::move(model));
    }
    return split;
}

std::vector<ModeStep> run_mode_experiment(const FeatureSet& labeled,
                                          const ModeExperimentOptions& options) {
    if (options.ref_classes == 0 || options.steps == 0) {
        throw DomainError("ref_classes and steps must be at least 1");
    }
    const std::size_t classes = std::max(options.ref_classes, options.steps);
    const ClassSplit split = split_classes(labeled, classes, options.clustering.seed);

    std::vector<std::size_t> reference;
    for (std::size_t c = 0; c < options.ref_classes; ++c) {
        const auto& rows = split.reference_rows.at(static_cast<std::int32_t>(c));
        reference.insert(reference.end(), rows.begin(), rows.end());
    }
    if (reference.empty()) {
        throw InsufficientDataError("reference split is empty");
    }
    const FeatureSet p_samples = labeled.subset(reference);

    std::vector<ModeStep> steps;
    std::vector<std::size_t> model;
    for (std::size_t i = 1; i <= options.steps; ++i) {
        const auto& rows = split.model_rows.at(static_cast<std::int32_t>(i - 1));
        model.insert(model.end(), rows.begin(), rows.end());
        if (model.empty()) {
            throw InsufficientDataError("model split for step " + std::to_string(i) + " is empty");
        }
        const FeatureSet q_samples = labeled.subset(model);
        steps.push_back({i, reference, model,
                         averaged_prd_runs(p_samples, q_samples, options.clustering)});
    }
    return steps;
}

}  // namespace prd
