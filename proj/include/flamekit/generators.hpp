#pragma once

#include <cstdint>
#include <string>

#include "digraph.hpp"

namespace flamekit {

/// splitmix64: the pinned PRNG behind every seeded generator, so instances are
/// reproducible bit-exactly across implementations.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    int next_below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

/// kind: random | fig1 | figure2a | figure2b | figure2c | figure2d | chain | star.
/// Same spec, same digraph: all generators are pure functions of their parameters.
struct InstanceSpec {
    std::string kind;
    int n = 0;
    int n0 = 0, n1 = 0, n2 = 0;  // fig1 layer sizes
    double p = 0.0;              // random edge probability
    std::uint64_t seed = 0;
};

/// figure2 kinds designate source and target sets; empty otherwise.
struct GeneratedInstance {
    RootedDigraph graph;
    VertexSet X;
    VertexSet Y;
};

GeneratedInstance gen(const InstanceSpec& spec);

}  // namespace flamekit
