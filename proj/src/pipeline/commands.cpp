#include "prd/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "prd/digest.hpp"
#include "prd/errors.hpp"
#include "prd/experiment.hpp"
#include "prd/feature_file.hpp"
#include "prd/svg_plot.hpp"

namespace prd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct LoadedFeatures {
    FeatureSet features;
    InputDigest digest;
};

LoadedFeatures load_features(const fs::path& path) {
    const auto bytes = read_file_bytes(path);
    return {decode_feature_file(bytes), {path.string(), sha256_hex(bytes)}};
}

struct LoadedHistogram {
    DiscreteDistribution dist;
    InputDigest digest;
};

LoadedHistogram load_histogram(const fs::path& path, bool normalize) {
    const auto bytes = read_file_bytes(path);
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw FormatError("json", path.string() + ": " + e.what());
    }
    return {histogram_from_json(doc, normalize), {path.string(), sha256_hex(bytes)}};
}

ReportMetadata clustering_metadata(const std::string& mode, const ClusteringOptions& c) {
    ReportMetadata m;
    m.mode = mode;
    m.k = c.k;
    m.runs = c.runs;
    m.resolution = c.resolution;
    m.seed = c.seed;
    m.run_seeds = run_seeds(c.seed, c.runs);
    m.batch_size = c.batch_size;
    m.iterations = c.iterations;
    return m;
}

CurveReport clustering_report(const AveragedPrd& result, ReportMetadata metadata,
                              const std::vector<double>& extra_betas) {
    CurveReport report;
    report.metadata = std::move(metadata);
    report.curve = result.curve;
    report.max_precision = result.mean_max_precision();
    report.max_recall = result.mean_max_recall();
    report.tv_at_lambda1 = result.mean_tv_distance();
    report.f_beta = f_beta_table(report.curve, extra_betas);
    return report;
}

void write_report(const fs::path& json_path, const CurveReport& report) {
    if (json_path.has_parent_path()) {
        fs::create_directories(json_path.parent_path());
    }
    write_text_file(json_path, report_to_json(report).dump(2) + "\n");
    write_text_file(csv_path_for(json_path), curve_csv(report.curve));
}

CurveReport load_report(const fs::path& path) {
    CurveReport report = report_from_json(read_json_file(path));
    if (auto problem = validate_report(report)) {
        throw FormatError("report", path.string() + ": " + *problem);
    }
    return report;
}

std::string single_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

void check_betas(const std::vector<double>& betas) {
    for (double b : betas) {
        if (!(b > 0.0)) {
            throw DomainError("--beta values must be positive");
        }
    }
}

}  // namespace

fs::path csv_path_for(const fs::path& report_path) {
    fs::path csv = report_path;
    csv.replace_extension(".csv");
    return csv;
}

CurveReport cmd_compute(const ComputeOptions& options) {
    check_betas(options.extra_betas);
    LoadedFeatures real = load_features(options.real_path);
    LoadedFeatures generated = load_features(options.generated_path);
    if (real.features.cols() != generated.features.cols()) {
        throw DimensionError("feature dimension D differs: " +
                             std::to_string(real.features.cols()) + " vs " +
                             std::to_string(generated.features.cols()));
    }
    const AveragedPrd result =
        averaged_prd_runs(real.features, generated.features, options.clustering);

    ReportMetadata metadata = clustering_metadata("compute", options.clustering);
    metadata.inputs = {real.digest, generated.digest};
    CurveReport report = clustering_report(result, std::move(metadata), options.extra_betas);
    write_report(options.out_path, report);
    return report;
}

CurveReport cmd_hist(const HistOptions& options) {
    check_betas(options.extra_betas);
    LoadedHistogram p = load_histogram(options.p_path, options.normalize);
    LoadedHistogram q = load_histogram(options.q_path, options.normalize);
    if (p.dist.size() != q.dist.size()) {
        throw DimensionError("histogram sizes differ: " + std::to_string(p.dist.size()) +
                             " vs " + std::to_string(q.dist.size()));
    }

    CurveReport report;
    report.metadata.mode = "hist";
    report.metadata.k = p.dist.size();
    report.metadata.runs = 1;
    report.metadata.resolution = options.resolution;
    report.metadata.normalized_inputs = options.normalize;
    report.metadata.inputs = {p.digest, q.digest};
    report.curve = prd_curve(p.dist, q.dist, options.resolution);
    report.max_precision = max_precision(p.dist, q.dist);
    report.max_recall = max_recall(p.dist, q.dist);
    report.tv_at_lambda1 = tv_distance(p.dist, q.dist);
    report.f_beta = f_beta_table(report.curve, options.extra_betas);
    write_report(options.out_path, report);
    return report;
}

std::vector<CurveReport> cmd_mode_experiment(const ModeOptions& options) {
    LoadedFeatures labeled = load_features(options.labeled_path);
    ModeExperimentOptions experiment;
    experiment.ref_classes = options.ref_classes;
    experiment.steps = options.steps;
    experiment.clustering = options.clustering;
    const std::vector<ModeStep> steps = run_mode_experiment(labeled.features, experiment);

    fs::create_directories(options.out_dir);
    std::vector<CurveReport> reports;
    std::string overlay = "step,lambda,precision,recall\n";
    std::string summary = "step,max_precision,max_recall,max_f_8,max_f_0.125\n";
    for (const ModeStep& step : steps) {
        const std::set<std::size_t> reference(step.reference_indices.begin(),
                                              step.reference_indices.end());
        for (std::size_t row : step.model_indices) {
            if (reference.contains(row)) {
                throw std::logic_error("reference and model splits share row " +
                                       std::to_string(row));
            }
        }

        ReportMetadata metadata = clustering_metadata("mode-experiment", options.clustering);
        metadata.inputs = {labeled.digest};
        metadata.extra = {
            {"ref_classes", options.ref_classes},
            {"steps", options.steps},
            {"step", step.classes_in_model},
            {"split_seed", options.clustering.seed},
            {"reference_rows", step.reference_indices.size()},
            {"model_rows", step.model_indices.size()},
        };
        CurveReport report = clustering_report(step.result, std::move(metadata), {});
        const std::string stem = "mode_q" + std::to_string(step.classes_in_model);
        write_report(options.out_dir / (stem + ".json"), report);

        const std::string i = std::to_string(step.classes_in_model);
        for (std::size_t r = 0; r < report.curve.size(); ++r) {
            overlay += i + "," + format_decimal(report.curve.lambdas[r]) + "," +
                       format_decimal(report.curve.points[r].precision) + "," +
                       format_decimal(report.curve.points[r].recall) + "\n";
        }
        summary += i + "," + format_decimal(report.max_precision) + "," +
                   format_decimal(report.max_recall) + "," +
                   format_decimal(report.f_beta[0].max_f_beta) + "," +
                   format_decimal(report.f_beta[1].max_f_beta) + "\n";
        reports.push_back(std::move(report));
    }
    write_text_file(options.out_dir / "overlay.csv", overlay);
    write_text_file(options.out_dir / "summary.csv", summary);
    return reports;
}

void cmd_fbeta_scatter(const FBetaOptions& options) {
    if (options.report_paths.empty()) {
        throw DomainError("fbeta needs at least one report");
    }
    if (!(options.beta_weight > 0.0)) {
        throw DomainError("--beta must be positive");
    }
    std::string csv = "id,beta,max_f_beta,max_f_inverse_beta\n";
    std::vector<ScatterPoint> points;
    for (const fs::path& path : options.report_paths) {
        const CurveReport report = load_report(path);
        const FBetaSummary s = f_beta_summary(report.curve, options.beta_weight);
        const std::string id = path.stem().string();
        csv += id + "," + format_decimal(options.beta_weight) + "," +
               format_decimal(s.max_f_beta) + "," + format_decimal(s.max_f_inverse_beta) + "\n";
        points.push_back({id, s.max_f_inverse_beta, s.max_f_beta});
    }
    write_text_file(options.out_path, csv);
    if (!options.plot_path.empty()) {
        std::ostringstream beta;
        beta << options.beta_weight;
        write_text_file(options.plot_path,
                        render_scatter_svg(points, "max F_{1/" + beta.str() + "}",
                                           "max F_" + beta.str()));
    }
}

void cmd_plot(const PlotOptions& options) {
    const CurveReport report = load_report(options.report_path);
    const std::vector<PrdPoint> polygon = interpolate_set(report.curve);
    write_text_file(options.out_path,
                    render_prd_svg(polygon, options.report_path.stem().string()));
}

std::uint64_t default_seed() {
    const char* env = std::getenv("PRD_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (env[used] != '\0') {
        throw std::invalid_argument("PRD_SEED is not an unsigned integer");
    }
    return value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto fail = [&](int code, const std::string& message) {
        err << "error_code=" << code << " " << single_line(message) << std::endl;
        return code;
    };

    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const std::exception& e) {
        return fail(kUsage, std::string("invalid PRD_SEED: ") + e.what());
    }

    CLI::App app{"Precision and recall for distributions"};
    app.require_subcommand(1);

    auto add_clustering = [&](CLI::App* cmd, ClusteringOptions& c) {
        c.seed = seed;
        cmd->add_option("--k", c.k, "number of clusters")->check(CLI::PositiveNumber);
        cmd->add_option("--runs", c.runs, "clustering runs to average")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--m", c.resolution, "number of lambda grid points")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", c.seed, "base seed (default $PRD_SEED or 0)");
        cmd->add_option("--batch-size", c.batch_size, "mini-batch size")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--iterations", c.iterations, "mini-batch iterations")
            ->check(CLI::PositiveNumber);
    };

    ComputeOptions compute;
    std::string compute_out;
    auto* compute_cmd = app.add_subcommand("compute", "PRD curve from two feature files");
    compute_cmd->add_option("real", compute.real_path, "reference feature file")->required();
    compute_cmd->add_option("generated", compute.generated_path, "model feature file")
        ->required();
    compute_cmd->add_option("--out", compute_out, "report JSON path (CSV written alongside)")
        ->required();
    compute_cmd->add_option("--beta", compute.extra_betas, "extra F_beta weights");
    add_clustering(compute_cmd, compute.clustering);

    HistOptions hist;
    std::string hist_out;
    auto* hist_cmd = app.add_subcommand("hist", "PRD curve from two histogram JSON files");
    hist_cmd->add_option("p", hist.p_path, "reference histogram")->required();
    hist_cmd->add_option("q", hist.q_path, "model histogram")->required();
    hist_cmd->add_option("--out", hist_out, "report JSON path (CSV written alongside)")
        ->required();
    hist_cmd->add_option("--m", hist.resolution, "number of lambda grid points")
        ->check(CLI::PositiveNumber);
    hist_cmd->add_flag("--normalize", hist.normalize, "rescale histograms that do not sum to 1");
    hist_cmd->add_option("--beta", hist.extra_betas, "extra F_beta weights");

    ModeOptions mode;
    std::string mode_out;
    auto* mode_cmd =
        app.add_subcommand("mode-experiment", "curves for models dropping or adding classes");
    mode_cmd->add_option("labeled", mode.labeled_path, "labeled feature file")->required();
    mode_cmd->add_option("--out", mode_out, "output directory")->required();
    mode_cmd->add_option("--ref-classes", mode.ref_classes, "classes in the reference")
        ->check(CLI::PositiveNumber);
    mode_cmd->add_option("--steps", mode.steps, "largest number of classes in the model")
        ->check(CLI::PositiveNumber);
    add_clustering(mode_cmd, mode.clustering);

    FBetaOptions fbeta;
    std::vector<std::string> fbeta_reports;
    std::string fbeta_out, fbeta_plot;
    auto* fbeta_cmd = app.add_subcommand("fbeta", "max F_beta / F_{1/beta} per report");
    fbeta_cmd->add_option("reports", fbeta_reports, "report JSON files")->required();
    fbeta_cmd->add_option("--out", fbeta_out, "scatter CSV path")->required();
    fbeta_cmd->add_option("--beta", fbeta.beta_weight, "beta weight")->check(CLI::PositiveNumber);
    fbeta_cmd->add_option("--plot", fbeta_plot, "optional SVG scatter plot");

    PlotOptions plot;
    std::string plot_report, plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "render a report's PRD set as SVG");
    plot_cmd->add_option("report", plot_report, "report JSON")->required();
    plot_cmd->add_option("--out", plot_out, "SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(kUsage, std::string("usage: ") + e.what());
    }

    try {
        if (*compute_cmd) {
            compute.out_path = compute_out;
            cmd_compute(compute);
            out << "wrote " << compute_out << " and " << csv_path_for(compute_out).string()
                << "\n";
        } else if (*hist_cmd) {
            hist.out_path = hist_out;
            cmd_hist(hist);
            out << "wrote " << hist_out << " and " << csv_path_for(hist_out).string() << "\n";
        } else if (*mode_cmd) {
            mode.out_dir = mode_out;
            const auto reports = cmd_mode_experiment(mode);
            out << "wrote " << reports.size() << " reports to " << mode_out << "\n";
        } else if (*fbeta_cmd) {
            fbeta.report_paths.assign(fbeta_reports.begin(), fbeta_reports.end());
            fbeta.out_path = fbeta_out;
            fbeta.plot_path = fbeta_plot;
            cmd_fbeta_scatter(fbeta);
            out << "wrote " << fbeta_out << "\n";
        } else if (*plot_cmd) {
            plot.report_path = plot_report;
            plot.out_path = plot_out;
            cmd_plot(plot);
            out << "wrote " << plot_out << "\n";
        }
    } catch (const FormatError& e) {
        return fail(kParse, "field=" + e.field() + " " + e.what());
    } catch (const DimensionError& e) {
        return fail(kDimension, e.what());
    } catch (const NormalizationError& e) {
        return fail(kNormalization, e.what());
    } catch (const MissingClassError& e) {
        std::string ids;
        for (int c : e.missing()) {
            ids += (ids.empty() ? "" : ",") + std::to_string(c);
        }
        return fail(kMissingClass, "missing_classes=" + ids + " " + e.what());
    } catch (const std::exception& e) {
        return fail(kUsage, e.what());
    }
    return kOk;
}

}  // namespace prd::cli
