#ifndef HCENT_GRAPH_HPP
#define HCENT_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hcent {

using VertexId = std::uint32_t;

// Geodesic distances from one source. A vertex with no value is unreachable.
class DistanceVector {
public:
    static constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

    DistanceVector(VertexId source, std::vector<std::uint32_t> dist)
        : source_(source), dist_(std::move(dist)) {}

    VertexId source() const { return source_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(dist_.size()); }

    bool reachable(VertexId v) const { return dist_[v] != kUnreachable; }

    std::optional<std::uint32_t> operator[](VertexId v) const {
        if (dist_[v] == kUnreachable)
            return std::nullopt;
        return dist_[v];
    }

private:
    VertexId source_;
    std::vector<std::uint32_t> dist_;
};

// Immutable simple undirected graph over dense vertex ids [0, order).
// Adjacency lists are sorted ascending and duplicate-free, so neighbor
// iteration (and BFS) visits vertices in ascending id order.
class Graph {
public:
    static Graph from_edge_list(std::uint32_t order,
                                std::span<const std::pair<VertexId, VertexId>> edges);
    static Graph from_edge_list(std::uint32_t order,
                                std::initializer_list<std::pair<VertexId, VertexId>> edges);

    std::uint32_t order() const { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    // Open neighborhood, ascending ids.
    std::span<const VertexId> neighbors(VertexId u) const;

    // Closed neighborhood N[u] = N(u) ∪ {u}, ascending ids.
    std::vector<VertexId> closed_neighborhood(VertexId u) const;

    std::uint32_t degree(VertexId u) const;

    bool has_edge(VertexId u, VertexId v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    DistanceVector bfs_distances(VertexId source) const;

    bool is_connected() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    explicit Graph(std::vector<std::vector<VertexId>> adjacency, std::size_t edge_count)
        : adjacency_(std::move(adjacency)), edge_count_(edge_count) {}

    void check_vertex(VertexId u) const;

    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_;
};

} // namespace hcent

#endif // HCENT_GRAPH_HPP
