#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trenddiff/errors.hpp"

namespace trenddiff {

using NodeId = std::uint32_t;

/// Undirected social graph with directed edge weights w_{v,u} (the weight
/// node v assigns to influence arriving from its neighbor u). Immutable after
/// construction and safe to share across threads.
class Network {
public:
    struct Edge {
        NodeId u = 0;
        NodeId v = 0;
        double w_uv = 0.0; ///< w_{u,v}: u's weight toward exposures coming from v
        double w_vu = 0.0; ///< w_{v,u}: v's weight toward exposures coming from u
    };

    Network() = default;
    Network(NodeId n, std::span<const Edge> edges);

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    NodeId degree(NodeId v) const { return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// w_{v,u}. Throws contract_violation_error when u is not adjacent to v.
    double weight_toward(NodeId v, NodeId u) const;

    /// Sum of w_{v,u} over all neighbors u of v.
    double weight_sum_from(NodeId v) const;

    std::vector<NodeId> degrees() const;

    /// Enumerates undirected edges as (u, v, w_uv, w_vu) with u < v.
    std::vector<Edge> edges() const;

    /// Replaces the weight w_{v,u} on an existing adjacency slot.
    void set_weight(NodeId v, NodeId u, double w);

private:
    std::size_t slot(NodeId v, NodeId u) const; // throws if not adjacent

    NodeId n_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> adj_;      // sorted per node
    std::vector<double> weights_;  // weights_[slot of (v,u)] = w_{v,u}
};

} // namespace trenddiff
