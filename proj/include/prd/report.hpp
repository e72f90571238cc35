#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prd/distribution.hpp"
#include "prd/prd.hpp"

namespace prd {

struct InputDigest {
    std::string path;
    std::string sha256;
};

struct ReportMetadata {
    std::string mode;  // "compute", "hist" or "mode-experiment"
    std::size_t k = 0;
    std::size_t runs = 0;
    std::size_t resolution = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> run_seeds;
    std::size_t batch_size = 0;
    std::size_t iterations = 0;
    bool normalized_inputs = false;
    std::vector<InputDigest> inputs;
    nlohmann::json extra = nlohmann::json::object();
};

struct FBetaEntry {
    double beta_weight;
    double max_f_beta;
};

/// Everything written for one curve: the grid, the curve, the summary
/// quantities and enough metadata to rerun it.
struct CurveReport {
    ReportMetadata metadata;
    PrdCurve curve;
    double max_precision = 0.0;
    double max_recall = 0.0;
    double tv_at_lambda1 = 0.0;
    std::vector<FBetaEntry> f_beta;
};

/// F_beta weights always tabulated.
inline const std::vector<double> kDefaultBetaWeights{8.0, 1.0 / 8.0};

/// Fills the F_beta table for kDefaultBetaWeights followed by `extra` (in
/// order, duplicates dropped).
std::vector<FBetaEntry> f_beta_table(const PrdCurve& curve, const std::vector<double>& extra);

nlohmann::json report_to_json(const CurveReport& report);

/// Throws FormatError naming the missing or malformed key.
CurveReport report_from_json(const nlohmann::json& doc);

/// Checks alpha = lambda * beta per row, monotone columns and the unit box.
/// Returns a description of the first violation, if any.
std::optional<std::string> validate_report(const CurveReport& report);

/// "lambda,precision,recall" rows, 9 significant digits, no exponents.
std::string curve_csv(const PrdCurve& curve);

/// Decimal rendering with `digits` significant digits and no exponent.
std::string format_decimal(double value, int digits = 9);

/// {"size": k, "weights": [...]}
nlohmann::json histogram_to_json(const DiscreteDistribution& dist);

/// Parses a histogram document. Mass off by more than 1e-6 from 1 throws
/// NormalizationError unless `normalize` is set, in which case the weights
/// are rescaled. Structural problems throw FormatError.
DiscreteDistribution histogram_from_json(const nlohmann::json& doc, bool normalize);

/// Allowed deviation of histogram input mass from 1 before normalization is
/// required.
inline constexpr double kInputMassTolerance = 1e-6;

nlohmann::json read_json_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace prd
