#include "hcent/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hcent/errors.hpp"

namespace hcent {

Graph Graph::from_edge_list(std::uint32_t order,
                            std::span<const std::pair<VertexId, VertexId>> edges) {
    if (order < 1)
        throw EmptyGraph("graph order must be at least 1");

    std::vector<std::vector<VertexId>> adjacency(order);
    for (const auto &[u, v] : edges) {
        if (u >= order || v >= order)
            throw InvalidVertex("edge endpoint " + std::to_string(u >= order ? u : v) +
                                " outside [0, " + std::to_string(order) + ")");
        if (u == v)
            throw SelfLoop("self loop at vertex " + std::to_string(u));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }

    std::size_t edge_count = 0;
    for (auto &nbrs : adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count += nbrs.size();
    }
    return Graph(std::move(adjacency), edge_count / 2);
}

Graph Graph::from_edge_list(std::uint32_t order,
                            std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return from_edge_list(order, std::span(edges.begin(), edges.size()));
}

void Graph::check_vertex(VertexId u) const {
    if (u >= order())
        throw InvalidVertex("vertex " + std::to_string(u) + " outside [0, " +
                            std::to_string(order()) + ")");
}

std::span<const VertexId> Graph::neighbors(VertexId u) const {
    check_vertex(u);
    return adjacency_[u];
}

std::vector<VertexId> Graph::closed_neighborhood(VertexId u) const {
    check_vertex(u);
    std::vector<VertexId> closed(adjacency_[u]);
    closed.insert(std::upper_bound(closed.begin(), closed.end(), u), u);
    return closed;
}

std::uint32_t Graph::degree(VertexId u) const {
    check_vertex(u);
    return static_cast<std::uint32_t>(adjacency_[u].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> result;
    result.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

DistanceVector Graph::bfs_distances(VertexId source) const {
    check_vertex(source);
    std::vector<std::uint32_t> dist(order(), DistanceVector::kUnreachable);
    dist[source] = 0;
    std::queue<VertexId> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const VertexId u = frontier.front();
        frontier.pop();
        for (VertexId v : adjacency_[u]) {
            if (dist[v] == DistanceVector::kUnreachable) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return DistanceVector(source, std::move(dist));
}

bool Graph::is_connected() const {
    const DistanceVector dist = bfs_distances(0);
    for (VertexId v = 0; v < order(); ++v)
        if (!dist.reachable(v))
            return false;
    return true;
}

} // namespace hcent
