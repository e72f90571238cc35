#include "prd/prd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "prd/errors.hpp"

namespace prd {

namespace {

void require_same_size(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (p.size() != q.size()) {
        throw DimensionError("distributions have different sizes: " + std::to_string(p.size()) +
                             " vs " + std::to_string(q.size()));
    }
}

void require_unit_interval_open_left(double value, const char* name) {
    if (!(value > 0.0 && value <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1]");
    }
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

// (P - c * mu) / (1 - c), clipped at zero and renormalized; mu itself when
// the coefficient c is 1 and the component is unconstrained.
DiscreteDistribution residual(const DiscreteDistribution& target, double coefficient,
                              const DiscreteDistribution& mu) {
    if (coefficient >= 1.0) {
        return mu;
    }
    std::vector<double> rest(target.size());
    double total = 0.0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] = std::max(0.0, target[i] - coefficient * mu[i]) / (1.0 - coefficient);
        total += rest[i];
    }
    if (!(total > 0.0)) {
        return mu;
    }
    for (double& r : rest) {
        r /= total;
    }
    return DiscreteDistribution(std::move(rest));
}

}  // namespace

LambdaGrid::LambdaGrid(std::size_t resolution) {
    if (resolution == 0) {
        throw DomainError("grid resolution must be at least 1");
    }
    lambdas_.resize(resolution);
    const double step = std::numbers::pi / 2.0 / static_cast<double>(resolution + 1);
    for (std::size_t i = 0; i < resolution; ++i) {
        lambdas_[i] = std::tan(static_cast<double>(i + 1) * step);
    }
    // tan(pi / 4) rounds to 1 - 2^-53.
    if (resolution % 2 == 1) {
        lambdas_[resolution / 2] = 1.0;
    }
}

PrdPoint alpha_beta(double lambda, const DiscreteDistribution& p, const DiscreteDistribution& q) {
    require_same_size(p, q);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("lambda must be positive and finite");
    }
    double alpha = 0.0;
    double beta = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        alpha += std::min(lambda * p[i], q[i]);
        beta += std::min(p[i], q[i] / lambda);
    }
    return {clamp_unit(alpha), clamp_unit(beta)};
}

PrdCurve prd_curve(const DiscreteDistribution& p, const DiscreteDistribution& q,
                   std::size_t resolution) {
    require_same_size(p, q);
    const LambdaGrid grid(resolution);
    PrdCurve curve;
    curve.lambdas.assign(grid.lambdas().begin(), grid.lambdas().end());
    curve.points.reserve(resolution);
    for (double lambda : curve.lambdas) {
        curve.points.push_back(alpha_beta(lambda, p, q));
    }
    return curve;
}

bool membership_oracle(double alpha, double beta, const DiscreteDistribution& p,
                       const DiscreteDistribution& q) {
    require_same_size(p, q);
    require_unit_interval_open_left(alpha, "alpha");
    require_unit_interval_open_left(beta, "beta");
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        mass += std::min(p[i] / beta, q[i] / alpha);
    }
    return mass >= 1.0 - kOracleTolerance;
}

Decomposition decompose(double alpha, double beta, const DiscreteDistribution& p,
                        const DiscreteDistribution& q) {
    if (!membership_oracle(alpha, beta, p, q)) {
        throw InfeasibleError("(alpha, beta) is not attainable for these distributions");
    }
    std::vector<double> shared(p.size());
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        shared[i] = std::min(p[i] / beta, q[i] / alpha);
        mass += shared[i];
    }
    for (double& s : shared) {
        s /= mass;
    }
    DiscreteDistribution mu(std::move(shared));
    DiscreteDistribution nu_p = residual(p, beta, mu);
    DiscreteDistribution nu_q = residual(q, alpha, mu);
    return {alpha, beta, std::move(mu), std::move(nu_p), std::move(nu_q)};
}

double max_precision(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    require_same_size(p, q);
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.in_support(i)) {
            total += q[i];
        }
    }
    return clamp_unit(total);
}

double max_recall(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    return max_precision(q, p);
}

double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    require_same_size(p, q);
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += std::max(0.0, p[i] - q[i]);
    }
    return clamp_unit(total);
}

double f_beta(double precision, double recall, double beta_weight) {
    if (!(beta_weight > 0.0) || !std::isfinite(beta_weight)) {
        throw DomainError("beta weight must be positive and finite");
    }
    if (!(precision >= 0.0 && precision <= 1.0) || !(recall >= 0.0 && recall <= 1.0)) {
        throw DomainError("precision and recall must lie in [0, 1]");
    }
    if (precision == 0.0 && recall == 0.0) {
        return 0.0;
    }
    const double b2 = beta_weight * beta_weight;
    return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

double max_f_beta(const PrdCurve& curve, double beta_weight) {
    if (curve.empty()) {
        throw DomainError("cannot summarize an empty curve");
    }
    double best = 0.0;
    for (const PrdPoint& pt : curve.points) {
        best = std::max(best, f_beta(pt.precision, pt.recall, beta_weight));
    }
    return best;
}

FBetaSummary f_beta_summary(const PrdCurve& curve, double beta_weight) {
    return {beta_weight, max_f_beta(curve, beta_weight), max_f_beta(curve, 1.0 / beta_weight)};
}

std::vector<PrdPoint> interpolate_set(const PrdCurve& curve) {
    if (curve.empty()) {
        throw DomainError("cannot interpolate an empty curve");
    }
    std::vector<PrdPoint> polygon{{0.0, 0.0}};
    for (const PrdPoint& pt : curve.points) {
        if (!(pt == polygon.back())) {
            polygon.push_back(pt);
        }
    }
    while (polygon.size() > 1 && polygon.back() == polygon.front()) {
        polygon.pop_back();
    }
    return polygon;
}

bool polygon_contains(std::span<const PrdPoint> polygon, PrdPoint point) {
    if (polygon.size() < 3) {
        return false;
    }
    // x = recall, y = precision.
    const double x = point.recall;
    const double y = point.precision;
    bool inside = false;
    for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        const double xi = polygon[i].recall, yi = polygon[i].precision;
        const double xj = polygon[j].recall, yj = polygon[j].precision;
        if ((yi > y) != (yj > y)) {
            const double cross = xj + (y - yj) * (xi - xj) / (yi - yj);
            if (x < cross) {
                inside = !inside;
            }
        }
    }
    return inside;
}

}  // namespace prd
