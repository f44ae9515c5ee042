#include "ehrgraph/random_graphs.hpp"

#include <stdexcept>

namespace ehrgraph {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("below(0)");
    return next() % bound;
}

bool SplitMix64::coin() { return next() & 1u; }

Graph random_connected_bipartite(int d, SplitMix64& rng) {
    if (d < 2)
        throw std::invalid_argument("need at least 2 vertices for a connected bipartite graph");
    for (;;) {
        const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d) - 1));
        const int b = d - a;
        std::vector<std::pair<int, int>> edges;
        std::vector<int> degree(static_cast<size_t>(d) + 1, 0);
        for (int i = 1; i <= a; ++i)
            for (int j = a + 1; j <= d; ++j)
                if (rng.coin()) {
                    edges.emplace_back(i, j);
                    ++degree[static_cast<size_t>(i)];
                    ++degree[static_cast<size_t>(j)];
                }
        for (int v = 1; v <= d; ++v) {
            if (degree[static_cast<size_t>(v)] > 0)
                continue;
            const int partner =
                v <= a ? a + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(b)))
                       : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a)));
            edges.emplace_back(std::min(v, partner), std::max(v, partner));
            ++degree[static_cast<size_t>(v)];
            ++degree[static_cast<size_t>(partner)];
        }
        Graph g = Graph::from_edges(d, std::move(edges));
        if (g.is_connected())
            return g;
    }
}

} // namespace ehrgraph
