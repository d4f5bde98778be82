#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trenddiff/network.hpp"

namespace trenddiff {

/// Advocating members V_a(t) at time step t. Node ids sorted and unique.
struct TrendState {
    std::vector<NodeId> advocates;
    std::uint32_t t = 0;

    void validate(const Network& net) const;
};

/// Per-node susceptibility s_v and the diffusion factor beta. Directed social
/// weights live on the Network itself.
struct AdoptionParams {
    std::vector<double> s; ///< size n; s[v] >= 0
    double beta = 0.0;     ///< average agents spawned per exposed user

    void validate(const Network& net) const;
};

/// Who exposed whom: per node the set of distinct exposing neighbors and the
/// total number of exposure events received.
struct ExposureRecord {
    std::vector<std::vector<NodeId>> exposing_friends; ///< sorted, subset of N_v
    std::vector<std::uint32_t> exposure_count;

    explicit ExposureRecord(NodeId n = 0)
        : exposing_friends(n), exposure_count(n, 0) {}
};

/// Network potential p_a(v): sum of w_{v,u} over the exposing friends u.
/// Every exposing node must be adjacent to v.
double network_potential(const Network& net, NodeId v, std::span<const NodeId> exposing);

/// Local adoption probability 1 - exp(-(s_v + potential)).
double local_adopt_prob(double s_v, double potential);

/// Mean over nodes of 1 - exp(-(s_v + (rho/|N_v|) * sum_u w_{v,u})); nodes
/// with no neighbors contribute 1 - exp(-s_v).
double expected_local_adopt(const Network& net, const AdoptionParams& params, double rho);

/// Adoption factor xi_G = exp(-mean(s)).
double adoption_factor(const Network& net, const AdoptionParams& params);

/// Influence factor xi_N = exp(-(1/n) * sum over edges e(v,u) of
/// (w_{u,v}/|N_v| + w_{v,u}/|N_u|)).
double influence_factor(const Network& net, const AdoptionParams& params);

} // namespace trenddiff
