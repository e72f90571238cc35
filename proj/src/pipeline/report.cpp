#include "prd/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "prd/errors.hpp"

namespace prd {

using nlohmann::json;

namespace {

constexpr const char* kReportFormat = "prd-curve-report";
constexpr int kReportVersion = 1;

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw FormatError(key, std::string("missing key \"") + key + "\"");
    }
    return doc.at(key);
}

double require_number(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_number()) {
        throw FormatError(key, std::string("\"") + key + "\" must be a number");
    }
    return v.get<double>();
}

std::vector<double> require_numbers(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_array()) {
        throw FormatError(key, std::string("\"") + key + "\" must be an array");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& x : v) {
        if (!x.is_number()) {
            throw FormatError(key, std::string("\"") + key + "\" must hold numbers only");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

template <typename T>
T optional_value(const json& doc, const char* key, T fallback) {
    if (!doc.contains(key)) {
        return fallback;
    }
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(key, std::string("\"") + key + "\" has the wrong type");
    }
}

}  // namespace

std::vector<FBetaEntry> f_beta_table(const PrdCurve& curve, const std::vector<double>& extra) {
    std::vector<double> weights = kDefaultBetaWeights;
    for (double b : extra) {
        if (std::find(weights.begin(), weights.end(), b) == weights.end()) {
            weights.push_back(b);
        }
    }
    std::vector<FBetaEntry> table;
    table.reserve(weights.size());
    for (double b : weights) {
        table.push_back({b, max_f_beta(curve, b)});
    }
    return table;
}

json report_to_json(const CurveReport& report) {
    const ReportMetadata& m = report.metadata;
    json inputs = json::array();
    for (const InputDigest& d : m.inputs) {
        inputs.push_back({{"path", d.path}, {"sha256", d.sha256}});
    }
    json meta = {
        {"mode", m.mode},
        {"k", m.k},
        {"runs", m.runs},
        {"m", m.resolution},
        {"seed", m.seed},
        {"run_seeds", m.run_seeds},
        {"batch_size", m.batch_size},
        {"iterations", m.iterations},
        {"normalized_inputs", m.normalized_inputs},
        {"inputs", inputs},
    };
    if (!m.extra.empty()) {
        meta["extra"] = m.extra;
    }

    json lambdas = json::array(), precision = json::array(), recall = json::array();
    for (std::size_t i = 0; i < report.curve.size(); ++i) {
        lambdas.push_back(report.curve.lambdas[i]);
        precision.push_back(report.curve.points[i].precision);
        recall.push_back(report.curve.points[i].recall);
    }
    json fb = json::array();
    for (const FBetaEntry& e : report.f_beta) {
        fb.push_back({{"beta", e.beta_weight}, {"max_f_beta", e.max_f_beta}});
    }
    return {
        {"format", kReportFormat},
        {"version", kReportVersion},
        {"metadata", meta},
        {"lambda", lambdas},
        {"precision", precision},
        {"recall", recall},
        {"max_precision", report.max_precision},
        {"max_recall", report.max_recall},
        {"tv_at_lambda1", report.tv_at_lambda1},
        {"f_beta", fb},
    };
}

CurveReport report_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw FormatError("document", "report must be a JSON object");
    }
    if (require(doc, "format") != kReportFormat) {
        throw FormatError("format", "not a curve report");
    }
    if (require(doc, "version") != kReportVersion) {
        throw FormatError("version", "unsupported report version");
    }

    CurveReport report;
    const json& meta = require(doc, "metadata");
    if (!meta.is_object()) {
        throw FormatError("metadata", "\"metadata\" must be an object");
    }
    ReportMetadata& m = report.metadata;
    m.mode = optional_value<std::string>(meta, "mode", "");
    m.k = optional_value<std::size_t>(meta, "k", 0);
    m.runs = optional_value<std::size_t>(meta, "runs", 0);
    m.resolution = optional_value<std::size_t>(meta, "m", 0);
    m.seed = optional_value<std::uint64_t>(meta, "seed", 0);
    m.run_seeds = optional_value<std::vector<std::uint64_t>>(meta, "run_seeds", {});
    m.batch_size = optional_value<std::size_t>(meta, "batch_size", 0);
    m.iterations = optional_value<std::size_t>(meta, "iterations", 0);
    m.normalized_inputs = optional_value<bool>(meta, "normalized_inputs", false);
    if (meta.contains("inputs")) {
        for (const json& in : meta.at("inputs")) {
            m.inputs.push_back({optional_value<std::string>(in, "path", ""),
                                optional_value<std::string>(in, "sha256", "")});
        }
    }
    if (meta.contains("extra")) {
        m.extra = meta.at("extra");
    }

    report.curve.lambdas = require_numbers(doc, "lambda");
    const std::vector<double> precision = require_numbers(doc, "precision");
    const std::vector<double> recall = require_numbers(doc, "recall");
    if (precision.size() != report.curve.lambdas.size() ||
        recall.size() != report.curve.lambdas.size()) {
        throw FormatError("precision", "lambda, precision and recall lengths differ");
    }
    if (report.curve.lambdas.empty()) {
        throw FormatError("lambda", "report holds an empty curve");
    }
    for (std::size_t i = 0; i < precision.size(); ++i) {
        report.curve.points.push_back({precision[i], recall[i]});
    }
    report.max_precision = require_number(doc, "max_precision");
    report.max_recall = require_number(doc, "max_recall");
    report.tv_at_lambda1 = require_number(doc, "tv_at_lambda1");
    const json& fb = require(doc, "f_beta");
    if (!fb.is_array()) {
        throw FormatError("f_beta", "\"f_beta\" must be an array");
    }
    for (const json& e : fb) {
        report.f_beta.push_back({require_number(e, "beta"), require_number(e, "max_f_beta")});
    }
    return report;
}

std::optional<std::string> validate_report(const CurveReport& report) {
    const PrdCurve& c = report.curve;
    if (c.empty() || c.lambdas.size() != c.points.size()) {
        return "curve is empty or lambda/point counts differ";
    }
    constexpr double kTol = 1e-9;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double lambda = c.lambdas[i];
        const PrdPoint& pt = c.points[i];
        if (!(lambda > 0.0) || !std::isfinite(lambda)) {
            return "row " + std::to_string(i) + ": lambda not positive";
        }
        if (pt.precision < 0.0 || pt.precision > 1.0 || pt.recall < 0.0 || pt.recall > 1.0) {
            return "row " + std::to_string(i) + ": value outside [0, 1]";
        }
        if (std::abs(pt.precision - lambda * pt.recall) > kTol * std::max(1.0, lambda)) {
            return "row " + std::to_string(i) + ": precision != lambda * recall";
        }
        if (i > 0) {
            if (lambda <= c.lambdas[i - 1]) {
                return "row " + std::to_string(i) + ": lambda not increasing";
            }
            if (pt.precision < c.points[i - 1].precision - kTol) {
                return "row " + std::to_string(i) + ": precision decreases";
            }
            if (pt.recall > c.points[i - 1].recall + kTol) {
                return "row " + std::to_string(i) + ": recall increases";
            }
        }
    }
    for (double v : {report.max_precision, report.max_recall, report.tv_at_lambda1}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            return std::string("summary value outside [0, 1]");
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.lambdas[i] == 1.0 &&
            std::abs(c.points[i].precision - (1.0 - report.tv_at_lambda1)) > kTol) {
            return std::string("precision at lambda = 1 disagrees with 1 - tv_at_lambda1");
        }
    }
    return std::nullopt;
}

std::string format_decimal(double value, int digits) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    // Exponent after rounding to `digits` significant digits.
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
    const char* e = std::strchr(buf, 'e');
    const int exponent = e ? std::atoi(e + 1) : 0;
    const int decimals = std::max(0, digits - 1 - exponent);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string curve_csv(const PrdCurve& curve) {
    std::string out = "lambda,precision,recall\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += format_decimal(curve.lambdas[i]);
        out += ',';
        out += format_decimal(curve.points[i].precision);
        out += ',';
        out += format_decimal(curve.points[i].recall);
        out += '\n';
    }
    return out;
}

json histogram_to_json(const DiscreteDistribution& dist) {
    return {{"size", dist.size()},
            {"weights", std::vector<double>(dist.weights().begin(), dist.weights().end())}};
}

DiscreteDistribution histogram_from_json(const json& doc, bool normalize) {
    if (!doc.is_object()) {
        throw FormatError("document", "histogram must be a JSON object");
    }
    const json& size = require(doc, "size");
    if (!size.is_number_integer() || size.get<long long>() < 1) {
        throw FormatError("size", "\"size\" must be a positive integer");
    }
    std::vector<double> weights = require_numbers(doc, "weights");
    if (weights.size() != size.get<std::size_t>()) {
        throw FormatError("weights", "\"weights\" has " + std::to_string(weights.size()) +
                                         " entries but size is " +
                                         std::to_string(size.get<std::size_t>()));
    }
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw FormatError("weights", "weights must be finite and non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw NormalizationError("histogram has zero total mass");
    }
    if (std::abs(total - 1.0) > kInputMassTolerance && !normalize) {
        std::ostringstream msg;
        msg << "histogram mass is " << total << ", expected 1 (pass --normalize to rescale)";
        throw NormalizationError(msg.str());
    }
    return DiscreteDistribution::normalized(std::move(weights));
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("file", "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("json", path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

}  // namespace prd
