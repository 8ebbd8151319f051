#pragma once

#include <cstdint>
#include <vector>

#include "kt/graph.hpp"

namespace kt {

enum class SolveStatus { Found, None, BudgetExceeded };

struct SolveOutcome {
    SolveStatus status = SolveStatus::None;
    Orientation orientation;  // meaningful only when Found
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultSolveBudget = 50'000'000;

struct SolveOptions {
    std::uint64_t budget = kDefaultSolveBudget;
    bool triangle_rule = true;    // reject graphs containing a triangle up front
    bool four_cycle_rule = true;  // every four-cycle must alternate
    bool path_rule = true;        // reject partial orientations with two paths or a cycle
    bool lookahead = true;        // force an edge when one direction fails the path rule
};

/// Complete backtracking search for a KT orientation.
///
/// Edges are branched in a fixed order (most four-cycles first, then edge
/// id), trying low id -> high id first. Connected components are searched
/// independently and share the node budget. Returns None only after the
/// whole tree is refuted.
SolveOutcome solve_exact(const Graph& g, const SolveOptions& options = {});

inline constexpr EdgeId kMaxCountEdges = 24;

/// Brute-force count of KT orientations over all 2^m orientations.
/// Throws InputError when m > kMaxCountEdges.
std::uint64_t count_kt_orientations(const Graph& g);

/// Orients every edge from the lower colour to the higher one. `colors` is
/// indexed by vertex (index 0 ignored) and must be a proper colouring with
/// values >= 1; throws InputError otherwise.
Orientation orient_by_coloring(const Graph& g, const std::vector<int>& colors);

// Number of vertices on a longest directed path (0 for the empty graph).
int longest_path_vertices(const Orientation& d);

}  // namespace kt
