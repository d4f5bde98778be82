#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "trenddiff/errors.hpp"

namespace trenddiff {

/// Normalization constant of the continuous power-law density c * d^(-gamma)
/// on [d_min, infinity): c = (gamma - 1) * d_min^(gamma - 1).
double normalization_constant(double gamma, double d_min);

/// Power-law degree distribution P(d) ~ c * d^(-gamma) with support starting
/// at d_min and an optional hard cap d_max.
struct DegreeDistribution {
    double gamma = 2.5;
    double c = 1.5;
    std::uint32_t d_min = 1;
    std::optional<std::uint32_t> d_max;

    /// Builds a distribution with c derived from (gamma, d_min).
    static DegreeDistribution power_law(double gamma, std::uint32_t d_min = 1,
                                        std::optional<std::uint32_t> d_max = std::nullopt) {
        DegreeDistribution dist;
        dist.gamma = gamma;
        dist.c = normalization_constant(gamma, static_cast<double>(d_min));
        dist.d_min = d_min;
        dist.d_max = d_max;
        dist.validate();
        return dist;
    }

    void validate() const {
        if (!(gamma > 1.0))
            throw invalid_parameter_error("DegreeDistribution: gamma must be > 1");
        if (!(c > 0.0))
            throw invalid_parameter_error("DegreeDistribution: c must be > 0");
        if (d_min < 1)
            throw invalid_parameter_error("DegreeDistribution: d_min must be >= 1");
        if (d_max && *d_max < d_min)
            throw invalid_parameter_error("DegreeDistribution: d_max must be >= d_min");
    }

    /// Inverse CDF of the continuous law truncated to [d_min, cap] (cap from
    /// d_max when set, otherwise unbounded). u in [0, 1).
    double inverse_cdf(double u) const {
        const double one_minus_gamma = 1.0 - gamma;
        const double lo = std::pow(static_cast<double>(d_min), one_minus_gamma);
        const double hi = d_max ? std::pow(static_cast<double>(*d_max), one_minus_gamma) : 0.0;
        return std::pow(lo - u * (lo - hi), 1.0 / one_minus_gamma);
    }
};

/// Lemma-style closed form for the probability that an ordered node pair has
/// degree ratio above delta: c^2 * delta^(1-gamma) / (2 gamma^2 - 3 gamma + 1).
/// May exceed 1 (vacuous); callers clamp where a probability is required.
double degree_ratio_prob_bound(const DegreeDistribution& dist, double delta);

} // namespace trenddiff
