#include "trenddiff/trend.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trenddiff {

void TrendState::validate(const Network& net) const {
    if (!std::is_sorted(advocates.begin(), advocates.end()))
        throw contract_violation_error("TrendState: advocates must be sorted");
    if (std::adjacent_find(advocates.begin(), advocates.end()) != advocates.end())
        throw contract_violation_error("TrendState: duplicate advocate");
    if (!advocates.empty() && advocates.back() >= net.node_count())
        throw contract_violation_error("TrendState: advocate id outside network");
}

void AdoptionParams::validate(const Network& net) const {
    if (s.size() != net.node_count())
        throw contract_violation_error("AdoptionParams: s must have one entry per node");
    for (double v : s)
        if (!(v >= 0.0))
            throw invalid_parameter_error("AdoptionParams: susceptibilities must be >= 0");
    if (!(beta >= 0.0))
        throw invalid_parameter_error("AdoptionParams: beta must be >= 0");
}

double network_potential(const Network& net, NodeId v, std::span<const NodeId> exposing) {
    double total = 0.0;
    for (NodeId u : exposing) total += net.weight_toward(v, u);
    return total;
}

double local_adopt_prob(double s_v, double potential) {
    if (!(s_v >= 0.0) || !(potential >= 0.0))
        throw invalid_parameter_error("local_adopt_prob: inputs must be >= 0");
    return -std::expm1(-(s_v + potential));
}

double expected_local_adopt(const Network& net, const AdoptionParams& params, double rho) {
    if (!(rho >= 0.0))
        throw invalid_parameter_error("expected_local_adopt: rho must be >= 0");
    params.validate(net);
    const NodeId n = net.node_count();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const NodeId d = net.degree(v);
        const double potential = d == 0 ? 0.0 : rho / static_cast<double>(d) * net.weight_sum_from(v);
        total += local_adopt_prob(params.s[v], potential);
    }
    return total / static_cast<double>(n);
}

double adoption_factor(const Network& net, const AdoptionParams& params) {
    params.validate(net);
    const NodeId n = net.node_count();
    if (n == 0) return 1.0;
    double total = 0.0;
    for (double v : params.s) total += v;
    return std::exp(-total / static_cast<double>(n));
}

double influence_factor(const Network& net, const AdoptionParams& params) {
    params.validate(net);
    const NodeId n = net.node_count();
    if (n == 0) return 1.0;
    double total = 0.0;
    for (const Network::Edge& e : net.edges()) {
        // Term printed as w_{u,v}/|N_v| + w_{v,u}/|N_u|; symmetric in (u, v).
        total += e.w_vu / static_cast<double>(net.degree(e.u)) +
                 e.w_uv / static_cast<double>(net.degree(e.v));
    }
    return std::exp(-total / static_cast<double>(n));
}

} // namespace trenddiff
