#pragma once

#include <cstdint>
#include <span>

#include "trenddiff/degree_distribution.hpp"
#include "trenddiff/network.hpp"

namespace trenddiff {

struct GenerateOptions {
    int max_retries = 10;
};

/// Scale-free network by the configuration model: degrees sampled from the
/// truncated power law by inverse-CDF, rounded and clamped into
/// [d_min, min(d_max, n-1)], stubs paired uniformly, self-loops and
/// multi-edges discarded, parity fixed by one extra stub on a random node.
/// Deterministic for a fixed seed. Weights are left at 0.
Network generate_scale_free(NodeId n, const DegreeDistribution& dist, std::uint64_t seed,
                            const GenerateOptions& opts = {});

/// Continuous maximum-likelihood exponent over the m samples >= d_min:
/// gamma_hat = 1 + m / sum(ln(d_i / d_min)). Throws validity_error when the
/// log-sum vanishes (all tail samples equal d_min) and invalid_parameter_error
/// when fewer than min_tail samples reach d_min.
double fit_gamma_mle(std::span<const double> degrees, double d_min, std::size_t min_tail = 10);

struct PairRatioEstimate {
    double p_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Monte Carlo estimate of Prob[deg(u) > delta * deg(v)] over uniformly
/// sampled ordered pairs of distinct nodes. Sampling is split across 64
/// logical streams seeded from (seed, stream), so the estimate is identical
/// for any thread count.
PairRatioEstimate degree_ratio_prob_empirical(const Network& net, double delta,
                                              std::uint64_t samples, std::uint64_t seed,
                                              unsigned threads = 0);

/// Exact value of the same probability over all n*(n-1) ordered pairs.
PairRatioEstimate degree_ratio_prob_exhaustive(const Network& net, double delta);

} // namespace trenddiff
