#include "trenddiff/graph_gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "trenddiff/parallel.hpp"
#include "trenddiff/rng.hpp"

namespace trenddiff {

double normalization_constant(double gamma, double d_min) {
    if (!(gamma > 1.0))
        throw invalid_parameter_error("normalization_constant: gamma must be > 1");
    if (!(d_min >= 1.0))
        throw invalid_parameter_error("normalization_constant: d_min must be >= 1");
    return (gamma - 1.0) * std::pow(d_min, gamma - 1.0);
}

double degree_ratio_prob_bound(const DegreeDistribution& dist, double delta) {
    dist.validate();
    if (!(delta >= 1.0))
        throw invalid_parameter_error("degree_ratio_prob_bound: delta must be >= 1");
    const double denom = 2.0 * dist.gamma * dist.gamma - 3.0 * dist.gamma + 1.0;
    if (denom == 0.0)
        throw invalid_parameter_error("degree_ratio_prob_bound: gamma makes 2g^2-3g+1 vanish");
    return dist.c * dist.c * std::pow(delta, 1.0 - dist.gamma) / denom;
}

namespace {

std::vector<std::uint32_t> sample_degree_sequence(NodeId n, const DegreeDistribution& dist,
                                                  Rng& rng) {
    const std::uint32_t hard_cap = n - 1; // simple graph: degree < n
    const std::uint32_t cap = dist.d_max ? std::min(*dist.d_max, hard_cap) : hard_cap;
    if (cap < dist.d_min)
        throw invalid_parameter_error(
            "generate_scale_free: no integer degree fits in [d_min, min(d_max, n-1)] for n=" +
            std::to_string(n));
    std::vector<std::uint32_t> deg(n);
    for (NodeId v = 0; v < n; ++v) {
        const double d = dist.inverse_cdf(rng.uniform_real());
        const auto k = static_cast<std::uint64_t>(std::llround(d));
        deg[v] = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(k, dist.d_min, cap));
    }
    return deg;
}

} // namespace

Network generate_scale_free(NodeId n, const DegreeDistribution& dist, std::uint64_t seed,
                            const GenerateOptions& opts) {
    dist.validate();
    if (n == 0) throw invalid_parameter_error("generate_scale_free: n must be >= 1");
    if (n == 1) return Network(1, {});

    Rng rng(derive_seed(seed, 0));
    std::string last_failure = "degree sequence infeasible";
    for (int attempt = 0; attempt < std::max(1, opts.max_retries); ++attempt) {
        std::vector<std::uint32_t> deg;
        try {
            deg = sample_degree_sequence(n, dist, rng);
        } catch (const invalid_parameter_error& e) {
            last_failure = e.what();
            continue;
        }

        // Fix degree-sum parity with one extra stub on a random node.
        std::uint64_t stub_total = 0;
        for (auto d : deg) stub_total += d;
        if (stub_total % 2 != 0) {
            deg[rng.uniform_u32(n)] += 1;
            ++stub_total;
        }

        std::vector<NodeId> stubs;
        stubs.reserve(stub_total);
        for (NodeId v = 0; v < n; ++v)
            for (std::uint32_t k = 0; k < deg[v]; ++k) stubs.push_back(v);
        rng.shuffle(std::span<NodeId>(stubs));

        std::unordered_set<std::uint64_t> seen;
        seen.reserve(stubs.size());
        std::vector<Network::Edge> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            NodeId a = stubs[i], b = stubs[i + 1];
            if (a == b) continue; // self-loop
            if (a > b) std::swap(a, b);
            const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
            if (!seen.insert(key).second) continue; // multi-edge
            edges.push_back({a, b, 0.0, 0.0});
        }
        return Network(n, edges);
    }
    throw invalid_parameter_error("generate_scale_free: gave up after retries: " + last_failure);
}

double fit_gamma_mle(std::span<const double> degrees, double d_min, std::size_t min_tail) {
    if (!(d_min >= 1.0))
        throw invalid_parameter_error("fit_gamma_mle: d_min must be >= 1");
    std::size_t m = 0;
    double log_sum = 0.0;
    for (double d : degrees) {
        if (d >= d_min) {
            ++m;
            log_sum += std::log(d / d_min);
        }
    }
    if (m < min_tail)
        throw invalid_parameter_error("fit_gamma_mle: only " + std::to_string(m) +
                                      " samples >= d_min, need " + std::to_string(min_tail));
    if (log_sum <= 0.0)
        throw validity_error("fit_gamma_mle: estimator diverges (all tail samples at d_min)");
    return 1.0 + static_cast<double>(m) / log_sum;
}

PairRatioEstimate degree_ratio_prob_empirical(const Network& net, double delta,
                                              std::uint64_t samples, std::uint64_t seed,
                                              unsigned threads) {
    if (net.node_count() < 2)
        throw invalid_parameter_error("degree_ratio_prob_empirical: need n >= 2");
    if (samples < 1)
        throw invalid_parameter_error("degree_ratio_prob_empirical: need samples >= 1");
    if (!(delta >= 1.0))
        throw invalid_parameter_error("degree_ratio_prob_empirical: delta must be >= 1");

    const NodeId n = net.node_count();
    const std::vector<NodeId> deg = net.degrees();

    // 64 logical streams regardless of thread count.
    constexpr std::uint64_t kStreams = 64;
    std::vector<std::uint64_t> hits(kStreams, 0);
    parallel_for(kStreams, threads, [&](std::size_t stream) {
        const std::uint64_t begin = samples * stream / kStreams;
        const std::uint64_t end = samples * (stream + 1) / kStreams;
        Rng rng(derive_seed(seed, stream));
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const NodeId v = rng.uniform_u32(n);
            NodeId u = rng.uniform_u32(n - 1);
            if (u >= v) ++u; // distinct ordered pair
            if (static_cast<double>(deg[u]) > delta * static_cast<double>(deg[v])) ++local;
        }
        hits[stream] = local;
    });

    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    PairRatioEstimate est;
    est.samples = samples;
    est.p_hat = static_cast<double>(total) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(samples));
    return est;
}

PairRatioEstimate degree_ratio_prob_exhaustive(const Network& net, double delta) {
    if (net.node_count() < 2)
        throw invalid_parameter_error("degree_ratio_prob_exhaustive: need n >= 2");
    if (!(delta >= 1.0))
        throw invalid_parameter_error("degree_ratio_prob_exhaustive: delta must be >= 1");
    const NodeId n = net.node_count();
    const std::vector<NodeId> deg = net.degrees();
    std::uint64_t hits = 0;
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u = 0; u < n; ++u)
            if (u != v && static_cast<double>(deg[u]) > delta * static_cast<double>(deg[v])) ++hits;
    PairRatioEstimate est;
    est.samples = static_cast<std::uint64_t>(n) * (n - 1);
    est.p_hat = static_cast<double>(hits) / static_cast<double>(est.samples);
    est.std_error = 0.0;
    return est;
}

} // namespace trenddiff
