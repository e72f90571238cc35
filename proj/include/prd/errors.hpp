#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prd {

// Operand shapes disagree (histogram sizes, feature dimensions).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested (precision, recall) pair is not attainable.
class InfeasibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Fewer data points than clusters.
class InsufficientDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A file or document failed to parse. `field()` names the offending field.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Histogram input whose mass is not 1 and normalization was not requested.
class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The mode experiment asked for class ids that are absent from the labels.
class MissingClassError : public std::runtime_error {
public:
    MissingClassError(std::vector<int> missing, const std::string& what)
        : std::runtime_error(what), missing_(std::move(missing)) {}

    const std::vector<int>& missing() const noexcept { return missing_; }

private:
    std::vector<int> missing_;
};

}  // namespace prd
