#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kt/graph.hpp"

namespace kt {

inline constexpr std::uint64_t kDefaultAlphaBudget = 100'000'000;

struct AlphaResult {
    bool complete = false;        // false when the node budget ran out
    int alpha = 0;                // best size found (exact when complete)
    std::vector<Vertex> witness;  // sorted independent set of size alpha
    std::uint64_t nodes_explored = 0;
};

/// Branch and bound for a maximum independent set. Each node branches on a
/// remaining vertex of maximum degree (lowest id on ties), including it
/// before excluding it, and prunes with a greedy clique cover bound.
AlphaResult alpha_exact(const Graph& g, std::uint64_t budget = kDefaultAlphaBudget);

// Throws InputError on an out-of-range vertex.
bool is_independent(const Graph& g, std::span<const Vertex> s);

}  // namespace kt
