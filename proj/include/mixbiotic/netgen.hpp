#ifndef MIXBIOTIC_NETGEN_HPP
#define MIXBIOTIC_NETGEN_HPP

#include <cstdint>
#include <variant>

#include "mixbiotic/graph.hpp"

namespace mixbiotic {

/// Watts-Strogatz small world: ring lattice of degree k, rewired with probability p.
struct WsParams {
    int n = 100;
    int k = 4;
    double p = 0.7;
};

/// Barabasi-Albert growth from a complete graph on n_a vertices, k edges per new vertex.
struct BaParams {
    int n = 100;
    int n_a = 3;
    int k = 2;
};

using NetworkSpec = std::variant<WsParams, BaParams>;

void validate(const WsParams& params);
void validate(const BaParams& params);

/// Ring lattice edges are visited lap by lap (offset 1..k/2, then vertex
/// 0..n-1). Each edge (u, u+offset) is rewired with probability p by redrawing
/// the far endpoint uniformly; self-loops and existing edges are redrawn, and
/// after n failed draws the original edge is kept. Edge count is always n*k/2.
Graph generate_ws(const WsParams& params, std::uint64_t seed);

/// Each new vertex draws k distinct targets, one at a time, with probability
/// proportional to current degree among the not-yet-chosen existing vertices.
/// Degrees are those of the graph before the new vertex joins.
Graph generate_ba(const BaParams& params, std::uint64_t seed);

Graph generate(const NetworkSpec& spec, std::uint64_t seed);

} // namespace mixbiotic

#endif // MIXBIOTIC_NETGEN_HPP
