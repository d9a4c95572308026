#include "mixbiotic/graph.hpp"

#include <algorithm>
#include <limits>

namespace mixbiotic {

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0)
        throw GraphError("vertex count must be non-negative");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count)
            throw GraphError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for " + std::to_string(vertex_count) + " vertices");
        if (i == j)
            throw GraphError("self-loop on vertex " + std::to_string(i));
        adjacency_[static_cast<std::size_t>(i)].push_back(j);
        adjacency_[static_cast<std::size_t>(j)].push_back(i);
    }
    edge_count_ = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<std::int64_t>(nbrs.size());
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(int i, int j) const {
    if (i < 0 || i >= vertex_count())
        return false;
    const auto& nbrs = adjacency_[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < vertex_count(); ++i)
        for (int j : neighbors(i))
            if (i < j)
                out.emplace_back(i, j);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> queue;
    queue.reserve(dist.size());
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        const int next = dist[static_cast<std::size_t>(v)] + 1;
        for (int w : g.neighbors(v)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw < 0) {
                dw = next;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

double local_clustering(const Graph& g, int v) {
    const auto nbrs = g.neighbors(v);
    const auto k = static_cast<std::int64_t>(nbrs.size());
    if (k < 2)
        return 0.0;
    std::int64_t links = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
            if (g.has_edge(nbrs[a], nbrs[b]))
                ++links;
    return static_cast<double>(2 * links) / static_cast<double>(k * (k - 1));
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    const int n = g.vertex_count();
    s.vertex_count = n;
    s.edge_count = g.edge_count();
    if (n < 2)
        return s;

    const auto pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    s.density = static_cast<double>(g.edge_count()) / pairs;

    double clustering = 0.0;
    for (int v = 0; v < n; ++v)
        clustering += local_clustering(g, v);
    s.mean_clustering = clustering / n;

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::int64_t distance_sum = 0;
    int diameter = 0;
    for (int src = 0; src < n; ++src) {
        const auto dist = bfs_distances(g, src);
        for (int dst = src + 1; dst < n; ++dst) {
            const int d = dist[static_cast<std::size_t>(dst)];
            if (d < 0) {
                s.diameter = inf;
                s.mean_distance = inf;
                return s;
            }
            distance_sum += d;
            diameter = std::max(diameter, d);
        }
    }
    s.diameter = diameter;
    s.mean_distance = static_cast<double>(distance_sum) / pairs;
    return s;
}

} // namespace mixbiotic
