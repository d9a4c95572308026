#ifndef MIXBIOTIC_GRAPH_HPP
#define MIXBIOTIC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixbiotic {

using Edge = std::pair<int, int>;

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph over vertices 0..n-1.
///
/// Neighbour lists are kept sorted, so `has_edge` is a binary search and two
/// graphs built from the same edge set compare equal regardless of input order.
class Graph {
public:
    Graph() = default;

    /// Builds the graph; duplicates (in either orientation) collapse.
    /// Throws GraphError on a self-loop or an out-of-range endpoint.
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int i, int j) const;

    /// Edge list with i < j, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::int64_t edge_count_ = 0;
};

inline Graph build_graph(int vertex_count, std::span<const Edge> edges) { return Graph(vertex_count, edges); }

/// Whole-graph features. Disconnected graphs report infinite diameter and
/// mean distance.
struct GraphStats {
    int vertex_count = 0;
    std::int64_t edge_count = 0;
    double diameter = 0;      ///< integer-valued, or +inf
    double mean_distance = 0; ///< average over unordered distinct pairs, or +inf
    double density = 0;
    double mean_clustering = 0;
};

GraphStats graph_stats(const Graph& g);

/// BFS hop distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Local clustering coefficient; 0 for degree < 2.
double local_clustering(const Graph& g, int v);

} // namespace mixbiotic

#endif // MIXBIOTIC_GRAPH_HPP
