#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "prd/histograms.hpp"
#include "prd/report.hpp"

namespace prd::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kDimension = 3,
    kNormalization = 4,
    kMissingClass = 5,
};

struct ComputeOptions {
    std::filesystem::path real_path;
    std::filesystem::path generated_path;
    std::filesystem::path out_path;  // report JSON; the CSV goes next to it
    ClusteringOptions clustering;
    std::vector<double> extra_betas;
};

struct HistOptions {
    std::filesystem::path p_path;
    std::filesystem::path q_path;
    std::filesystem::path out_path;
    std::size_t resolution = kDefaultResolution;
    bool normalize = false;
    std::vector<double> extra_betas;
};

struct ModeOptions {
    std::filesystem::path labeled_path;
    std::filesystem::path out_dir;
    std::size_t ref_classes = 5;
    std::size_t steps = 10;
    ClusteringOptions clustering;
};

struct FBetaOptions {
    std::vector<std::filesystem::path> report_paths;
    std::filesystem::path out_path;   // CSV
    std::filesystem::path plot_path;  // optional SVG
    double beta_weight = 8.0;
};

struct PlotOptions {
    std::filesystem::path report_path;
    std::filesystem::path out_path;
};

/// `report.json` -> `report.csv`.
std::filesystem::path csv_path_for(const std::filesystem::path& report_path);

CurveReport cmd_compute(const ComputeOptions& options);
CurveReport cmd_hist(const HistOptions& options);
std::vector<CurveReport> cmd_mode_experiment(const ModeOptions& options);
void cmd_fbeta_scatter(const FBetaOptions& options);
void cmd_plot(const PlotOptions& options);

/// Default seed: $PRD_SEED when set and numeric, else 0.
std::uint64_t default_seed();

/// Full command line entry point. Errors print one line
/// `error_code=<n> <message>` to `err` and return n.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prd::cli
