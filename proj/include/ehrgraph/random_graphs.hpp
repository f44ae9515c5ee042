#pragma once

#include "ehrgraph/graph.hpp"

#include <cstdint>

namespace ehrgraph {

// splitmix64: tiny fixed-constant generator so seeded suites replay
// identically on every platform and standard library.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform-ish in [0, bound)
    bool coin();
};

// Connected bipartite graph on d >= 2 vertices, no isolated vertices:
// part sizes (a, d - a) with a uniform in 1..d-1, each cross edge kept
// with probability 1/2, any degree-0 vertex repaired with one random
// cross edge, the whole draw repeated until connected.
Graph random_connected_bipartite(int d, SplitMix64& rng);

} // namespace ehrgraph
