#ifndef NETEPI_GRAPH_HPP
#define NETEPI_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace netepi {

struct Edge {
    std::int32_t u;
    std::int32_t v;
    double w;
};

struct Coord {
    double x;
    double y;
};

/// Undirected weighted graph with 0-based node indices. Each edge is stored
/// once as an unordered pair; w(u,v) = w(v,u) implicitly.
class WeightedGraph {
public:
    /// Validates: no self-loops, no duplicate pairs, strictly positive finite
    /// weights, indices in range. Edges are canonicalized (u < v) and sorted.
    WeightedGraph(std::int32_t node_count, std::vector<Edge> edges,
                  std::vector<Coord> coords = {});

    std::int32_t node_count() const { return node_count_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<Coord>& coords() const { return coords_; }

private:
    std::int32_t node_count_;
    std::vector<Edge> edges_;
    std::vector<Coord> coords_;
};

/// True iff a breadth-first traversal from node 0 reaches all nodes.
bool check_connected(const WeightedGraph& g);

/// Hop distances from `source` (unweighted BFS); -1 marks unreachable nodes.
std::vector<std::int32_t> bfs_distances(const WeightedGraph& g, std::int32_t source);

} // namespace netepi

#endif
