#include "trenddiff/network.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace trenddiff {

Network::Network(NodeId n, std::span<const Edge> edges) : n_(n) {
    std::vector<std::uint32_t> deg(n_, 0);
    for (const Edge& e : edges) {
        if (e.u >= n_ || e.v >= n_)
            throw input_error("Network: edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                              " out of range for n=" + std::to_string(n_));
        if (e.u == e.v)
            throw input_error("Network: self-loop at node " + std::to_string(e.u));
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (NodeId v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(offsets_[n_]);
    weights_.resize(offsets_[n_], 0.0);

    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges) {
        adj_[cursor[e.u]] = e.v;
        weights_[cursor[e.u]++] = e.w_uv;
        adj_[cursor[e.v]] = e.u;
        weights_[cursor[e.v]++] = e.w_vu;
    }

    // Sort each adjacency list (weights follow), then reject duplicates.
    std::vector<std::pair<NodeId, double>> row;
    for (NodeId v = 0; v < n_; ++v) {
        row.clear();
        for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i)
            row.emplace_back(adj_[i], weights_[i]);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i].first == row[i + 1].first)
                throw input_error("Network: duplicate edge {" + std::to_string(v) + "," +
                                  std::to_string(row[i].first) + "}");
        for (std::size_t i = 0; i < row.size(); ++i) {
            adj_[offsets_[v] + i] = row[i].first;
            weights_[offsets_[v] + i] = row[i].second;
        }
    }
}

bool Network::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Network::slot(NodeId v, NodeId u) const {
    if (v >= n_ || u >= n_)
        throw contract_violation_error("Network: node id out of range");
    const auto nbrs = neighbors(v);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
    if (it == nbrs.end() || *it != u)
        throw contract_violation_error("Network: node " + std::to_string(u) +
                                       " is not adjacent to " + std::to_string(v));
    return offsets_[v] + static_cast<std::size_t>(it - nbrs.begin());
}

double Network::weight_toward(NodeId v, NodeId u) const { return weights_[slot(v, u)]; }

void Network::set_weight(NodeId v, NodeId u, double w) { weights_[slot(v, u)] = w; }

double Network::weight_sum_from(NodeId v) const {
    double total = 0.0;
    for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) total += weights_[i];
    return total;
}

std::vector<NodeId> Network::degrees() const {
    std::vector<NodeId> out(n_);
    for (NodeId v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<Network::Edge> Network::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < n_; ++v) {
        for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
            const NodeId u = adj_[i];
            if (v < u) out.push_back({v, u, weights_[i], weight_toward(u, v)});
        }
    }
    return out;
}

} // namespace trenddiff
