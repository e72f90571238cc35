#pragma once

// Precision and recall for distributions on a finite state space.
//
// For a reference distribution P and a model distribution Q, the attainable
// pairs (alpha, beta) are those for which a shared component mu exists with
//
//     P = beta * mu + (1 - beta) * nu_P
//     Q = alpha * mu + (1 - alpha) * nu_Q
//
// alpha is the precision of Q (how much of Q is explained by mu) and beta its
// recall (how much of P is covered by mu). The boundary of this set is traced
// by the lines alpha = lambda * beta, which gives a closed form per slope:
//
//     alpha(lambda) = sum_w min(lambda * P(w), Q(w))
//     beta(lambda)  = sum_w min(P(w), Q(w) / lambda)

#include <cstddef>
#include <span>
#include <vector>

#include "prd/distribution.hpp"

namespace prd {

/// Resolution used when the caller does not choose one. Odd, so that
/// lambda = 1 lies on the grid.
inline constexpr std::size_t kDefaultResolution = 1001;

/// Feasibility slack of the membership test.
inline constexpr double kOracleTolerance = 1e-9;

struct PrdPoint {
    double precision = 0.0;
    double recall = 0.0;

    friend bool operator==(const PrdPoint&, const PrdPoint&) = default;
};

/// Equiangular slopes tan(i / (m + 1) * pi / 2), i = 1..m.
class LambdaGrid {
public:
    explicit LambdaGrid(std::size_t resolution);

    std::size_t resolution() const noexcept { return lambdas_.size(); }
    std::span<const double> lambdas() const noexcept { return lambdas_; }
    double operator[](std::size_t i) const { return lambdas_[i]; }

private:
    std::vector<double> lambdas_;
};

struct PrdCurve {
    std::vector<double> lambdas;
    std::vector<PrdPoint> points;

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }
};

/// Witnesses mu, nu_P, nu_Q for an attainable (alpha, beta).
struct Decomposition {
    double alpha;
    double beta;
    DiscreteDistribution mu;
    DiscreteDistribution nu_p;
    DiscreteDistribution nu_q;
};

struct FBetaSummary {
    double beta_weight;
    double max_f_beta;          // max over the curve of F_beta
    double max_f_inverse_beta;  // max over the curve of F_{1/beta}
};

PrdPoint alpha_beta(double lambda, const DiscreteDistribution& p, const DiscreteDistribution& q);

PrdCurve prd_curve(const DiscreteDistribution& p, const DiscreteDistribution& q,
                   std::size_t resolution = kDefaultResolution);

/// Exact test of whether (alpha, beta) is attainable. Equivalent to the
/// existence of mu with P >= beta * mu and Q >= alpha * mu, which reduces to
/// sum_w min(P(w) / beta, Q(w) / alpha) >= 1.
bool membership_oracle(double alpha, double beta, const DiscreteDistribution& p,
                       const DiscreteDistribution& q);

/// Canonical maximal-mass witness. Throws InfeasibleError when
/// membership_oracle rejects the pair.
Decomposition decompose(double alpha, double beta, const DiscreteDistribution& p,
                        const DiscreteDistribution& q);

/// Q(supp P).
double max_precision(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// P(supp Q).
double max_recall(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// sum_w (P(w) - Q(w))^+.
double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// (1 + b^2) p r / (b^2 p + r), with f_beta(0, 0, b) = 0.
double f_beta(double precision, double recall, double beta_weight);

double max_f_beta(const PrdCurve& curve, double beta_weight);

FBetaSummary f_beta_summary(const PrdCurve& curve, double beta_weight);

/// Vertices of the filled region spanned by the segments from the origin to
/// each curve point: the origin followed by the curve points in grid order,
/// with consecutive duplicates removed. A curve that collapses to the origin
/// yields the single vertex (0, 0).
std::vector<PrdPoint> interpolate_set(const PrdCurve& curve);

/// Point-in-polygon test for the output of interpolate_set (even-odd rule).
/// Degenerate polygons (fewer than three vertices) contain nothing.
bool polygon_contains(std::span<const PrdPoint> polygon, PrdPoint point);

}  // namespace prd
