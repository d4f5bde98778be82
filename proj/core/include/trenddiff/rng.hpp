#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "trenddiff/errors.hpp"

namespace trenddiff {

/// SplitMix64 finalizer. Stream seeds are derived from (master, index) with
/// this mixer so that results never depend on thread count or scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for logical stream `stream` under `master`. Documented contract:
/// seed = splitmix64(master ^ splitmix64(stream + 1)).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(master ^ splitmix64(stream + 1));
}

/// mt19937_64 plus hand-rolled distributions. The engine sequence is pinned
/// by the standard; the std:: distribution algorithms are not, and outputs
/// here must be reproducible across standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        if (bound == 0) throw invalid_parameter_error("uniform_u64: bound must be positive");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    std::uint32_t uniform_u32(std::uint32_t bound) {
        return static_cast<std::uint32_t>(uniform_u64(bound));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Poisson by CDF inversion, split into chunks so exp(-lambda) never
    /// underflows. Intended for the small rates used by the diffusion factor.
    std::uint64_t poisson(double lambda) {
        if (lambda < 0 || !std::isfinite(lambda))
            throw invalid_parameter_error("poisson: lambda must be finite and nonnegative");
        std::uint64_t total = 0;
        while (lambda > 500.0) {
            total += poisson_inversion(500.0);
            lambda -= 500.0;
        }
        return total + poisson_inversion(lambda);
    }

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_u64(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::uint64_t poisson_inversion(double lambda) {
        if (lambda == 0.0) return 0;
        const double u = uniform_real();
        double p = std::exp(-lambda);
        double cum = p;
        std::uint64_t k = 0;
        while (u > cum) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cum += p;
            if (p < 1e-300 && k > lambda) break;
        }
        return k;
    }

    std::mt19937_64 engine_;
};

} // namespace trenddiff
