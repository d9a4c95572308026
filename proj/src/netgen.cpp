#include "mixbiotic/netgen.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "mixbiotic/rng.hpp"

namespace mixbiotic {

void validate(const WsParams& params) {
    if (params.n < 2)
        throw std::invalid_argument("WS: n must be at least 2");
    if (params.k <= 0 || params.k % 2 != 0 || params.k >= params.n)
        throw std::invalid_argument("WS: k must be even with 0 < k < n (got k=" + std::to_string(params.k) + ")");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("WS: p must lie in [0,1]");
}

void validate(const BaParams& params) {
    if (params.k < 1 || params.n_a < params.k || params.n < params.n_a)
        throw std::invalid_argument("BA: require 1 <= k <= n_a <= n");
}

Graph generate_ws(const WsParams& params, std::uint64_t seed) {
    validate(params);
    const int n = params.n;
    Rng rng(seed);

    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    };
    auto unlink = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].erase(b);
        adj[static_cast<std::size_t>(b)].erase(a);
    };
    for (int offset = 1; offset <= params.k / 2; ++offset)
        for (int u = 0; u < n; ++u)
            link(u, (u + offset) % n);

    for (int offset = 1; offset <= params.k / 2; ++offset) {
        for (int u = 0; u < n; ++u) {
            const int v = (u + offset) % n;
            // The edge may already have been moved away by an earlier rewire.
            if (!adj[static_cast<std::size_t>(u)].contains(v))
                continue;
            if (!rng.bernoulli(params.p))
                continue;
            for (int attempt = 0; attempt < n; ++attempt) {
                const int w = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
                if (w == u || adj[static_cast<std::size_t>(u)].contains(w))
                    continue;
                unlink(u, v);
                link(u, w);
                break;
            }
        }
    }

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w : adj[static_cast<std::size_t>(u)])
            if (u < w)
                edges.emplace_back(u, w);
    return Graph(n, edges);
}

Graph generate_ba(const BaParams& params, std::uint64_t seed) {
    validate(params);
    Rng rng(seed);

    std::vector<Edge> edges;
    std::vector<std::uint64_t> degree(static_cast<std::size_t>(params.n), 0);
    for (int i = 0; i < params.n_a; ++i)
        for (int j = i + 1; j < params.n_a; ++j) {
            edges.emplace_back(i, j);
            ++degree[static_cast<std::size_t>(i)];
            ++degree[static_cast<std::size_t>(j)];
        }

    std::vector<char> chosen(static_cast<std::size_t>(params.n), 0);
    std::vector<int> targets;
    for (int v = params.n_a; v < params.n; ++v) {
        targets.clear();
        std::uint64_t total = 0;
        for (int i = 0; i < v; ++i)
            total += degree[static_cast<std::size_t>(i)];

        for (int draw = 0; draw < params.k; ++draw) {
            int pick = -1;
            if (total == 0) {
                // Degree-zero seed (n_a == 1): fall back to a uniform choice.
                auto r = rng.uniform_below(static_cast<std::uint64_t>(v - draw));
                for (int i = 0; i < v; ++i) {
                    if (chosen[static_cast<std::size_t>(i)])
                        continue;
                    if (r-- == 0) {
                        pick = i;
                        break;
                    }
                }
            } else {
                auto r = rng.uniform_below(total);
                for (int i = 0; i < v; ++i) {
                    if (chosen[static_cast<std::size_t>(i)])
                        continue;
                    const auto w = degree[static_cast<std::size_t>(i)];
                    if (r < w) {
                        pick = i;
                        break;
                    }
                    r -= w;
                }
            }
            chosen[static_cast<std::size_t>(pick)] = 1;
            total -= degree[static_cast<std::size_t>(pick)];
            targets.push_back(pick);
        }

        for (int t : targets) {
            chosen[static_cast<std::size_t>(t)] = 0;
            edges.emplace_back(t, v);
            ++degree[static_cast<std::size_t>(t)];
            ++degree[static_cast<std::size_t>(v)];
        }
    }
    return Graph(params.n, edges);
}

Graph generate(const NetworkSpec& spec, std::uint64_t seed) {
    return std::visit([seed](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, WsParams>)
            return generate_ws(p, seed);
        else
            return generate_ba(p, seed);
    }, spec);
}

} // namespace mixbiotic
