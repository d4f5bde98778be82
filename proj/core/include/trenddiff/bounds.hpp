#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trenddiff/degree_distribution.hpp"
#include "trenddiff/network.hpp"
#include "trenddiff/trend.hpp"

namespace trenddiff {

/// How the free exposure-multiplicity parameter rho is selected.
///  - tightest:      argmax of the bound over the valid grid (any valid rho
///                   yields a correct lower bound, the largest is reported);
///  - paper_literal: argmin, reproducing the printed definition of rho_opt-.
enum class RhoMode { tightest, paper_literal };

/// Exponent used inside sigma-: as_printed keeps exp(-Delta * x); conservative
/// uses exp(-x / Delta), the direction the derivation itself suggests.
enum class SigmaExponent { as_printed, conservative };

struct RhoSearch {
    RhoMode mode = RhoMode::tightest;
    std::optional<double> step;  ///< continuous grid step; default (dt*sigma)/1000
    bool integer_grid = false;   ///< rho in {1, 2, ...} strictly below dt*sigma
    double delta_grid_max = 64.0;
    SigmaExponent sigma_exponent = SigmaExponent::as_printed;
};

/// P_Delta as a function of Delta. Values may exceed 1; sigma_minus clamps.
using PDeltaFn = std::function<double(double)>;

/// Closed-form degree-ratio bound for a power-law distribution.
PDeltaFn p_delta_from_dist(const DegreeDistribution& dist);

/// Empirical degree-ratio probability sampled on a concrete network.
/// Each distinct Delta is sampled once and cached.
PDeltaFn p_delta_from_network(const Network& net, std::uint64_t samples, std::uint64_t seed);

struct SigmaResult {
    double sigma = 0.0;
    double delta_star = 1.0;
};

/// Low temporal resistance: max over a geometric Delta grid in
/// [1, delta_grid_max] of 1 - exp(-Delta * beta^dt * f) * (1 - P_Delta),
/// with P_Delta clamped to [0, 1]. Exponent computed in log space.
SigmaResult sigma_minus(double beta, int delta_t, double seed_fraction, const PDeltaFn& p_delta,
                        double delta_grid_max, SigmaExponent mode = SigmaExponent::as_printed);

/// Chernoff term P~- = exp(-(dt*sigma/2 - rho + rho^2/(2*dt*sigma))).
/// Requires 0 <= rho < dt*sigma and sigma > 0; throws validity_error.
double p_tilde_minus(double rho, int delta_t, double sigma);

/// Standard normal CDF, clamped into the open interval (0, 1).
double normal_cdf(double x);

/// 1 - Phi(sqrt(n) * (eps - p_tilde) / sqrt(p_tilde * (1 - p_tilde))).
/// Degenerate p_tilde in {0, 1} resolves to the limit with a note.
double rho_trend_lower(double n, double epsilon, double p_tilde, std::string* note = nullptr);

/// Theorem-1 P_Local source that recomputes the expectation for each rho.
struct PLocalFromParams {
    const Network* net = nullptr;
    const AdoptionParams* params = nullptr;
};

struct BoundInputs {
    double n = 0.0;              ///< node count
    double seed_fraction = 0.0;  ///< |V_a(t)| / n, in (0, 1]
    double epsilon = 0.0;        ///< target penetration, in (0, 1]
    int delta_t = 1;             ///< horizon in steps
    double beta = 0.0;           ///< diffusion factor
    PDeltaFn p_delta;            ///< degree-ratio probability source
    std::variant<std::monostate, double, PLocalFromParams> p_local; ///< theorem 1
    std::optional<std::pair<double, double>> xi;                    ///< theorem 2: (xi_G, xi_N)
    RhoSearch rho;

    void validate() const;
};

struct BoundResult {
    double value = 0.0;      ///< lower bound, clamped to [0, 1]
    double log_value = 0.0;  ///< natural log of the unclamped product
    double sigma_minus = 0.0;
    double p_tilde = 0.0;
    double rho = 0.0;
    double delta_star = 1.0;
    bool valid = false; ///< rho < dt * sigma- held
    std::string diagnostics;
};

/// Grid search for rho over (0, dt*sigma), exclusive at the top. Ties break
/// toward smaller rho. Throws validity_error when the grid is empty.
double optimize_rho(const std::function<double(double)>& objective, int delta_t, double sigma,
                    const RhoSearch& search);

BoundResult theorem1_bound(const BoundInputs& inputs);
BoundResult theorem2_bound(const BoundInputs& inputs);

/// log of P_Local^(eps*n); exact in log space for tiny first factors.
double theorem1_log_first_factor(double p_local, double eps_times_n);
/// log of exp(-eps*n * xi_G * xi_N^rho).
double theorem2_log_first_factor(double xi_g, double xi_n, double rho, double eps_times_n);

struct SweepRow {
    int delta_t = 0;
    double epsilon = 0.0;
    double bound = 0.0;
    double rho = 0.0;
    double sigma_minus = 0.0;
    double p_tilde = 0.0;
    bool valid = false;
};

/// Evaluates the selected theorem over the (delta_t, epsilon) product grid.
/// Cells are independent; output is ordered by (delta_t, epsilon) regardless
/// of parallelism. Invalid cells carry valid=false instead of aborting.
std::vector<SweepRow> sweep(const BoundInputs& tmpl, std::span<const double> epsilon_grid,
                            std::span<const int> delta_t_list, int theorem, unsigned threads = 0);

} // namespace trenddiff
