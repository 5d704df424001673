#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace netepi {

WeightedGraph::WeightedGraph(std::int32_t node_count, std::vector<Edge> edges,
                             std::vector<Coord> coords)
    : node_count_(node_count), edges_(std::move(edges)), coords_(std::move(coords))
{
    if (node_count_ <= 0)
        fail(ErrorCode::InvalidArgument, "graph needs at least one node");
    if (!coords_.empty() && static_cast<std::int32_t>(coords_.size()) != node_count_)
        fail(ErrorCode::InvalidArgument,
             "coordinate count " + std::to_string(coords_.size()) +
                 " does not match node count " + std::to_string(node_count_));

    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_)
            fail(ErrorCode::InvalidArgument,
                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") out of range for " + std::to_string(node_count_) + " nodes");
        if (e.u == e.v)
            fail(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(e.u));
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            fail(ErrorCode::InvalidArgument,
                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") has non-positive weight " + std::to_string(e.w));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            fail(ErrorCode::InvalidArgument,
                 "duplicate edge (" + std::to_string(edges_[i].u) + "," +
                     std::to_string(edges_[i].v) + ")");
    }
}

namespace {

std::vector<std::vector<std::int32_t>> adjacency_lists(const WeightedGraph& g)
{
    std::vector<std::vector<std::int32_t>> adj(g.node_count());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

} // namespace

bool check_connected(const WeightedGraph& g)
{
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::int32_t d) { return d < 0; });
}

std::vector<std::int32_t> bfs_distances(const WeightedGraph& g, std::int32_t source)
{
    if (source < 0 || source >= g.node_count())
        fail(ErrorCode::InvalidArgument, "BFS source out of range");
    auto adj = adjacency_lists(g);
    std::vector<std::int32_t> dist(g.node_count(), -1);
    std::queue<std::int32_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        auto x = frontier.front();
        frontier.pop();
        for (auto y : adj[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

} // namespace netepi
