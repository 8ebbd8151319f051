#pragma once

#include <optional>
#include <vector>

#include "kt/graph.hpp"

namespace kt {

struct Witness {
    enum class Kind { DirectedCycle, TwoPaths };
    Kind kind = Kind::TwoPaths;
    std::vector<Vertex> cycle;  // v1 -> v2 -> ... -> vk -> v1
    Vertex u = 0;               // common start of both paths
    Vertex v = 0;               // common end of both paths
    std::vector<Vertex> path_a;
    std::vector<Vertex> path_b;
};

struct VerifyResult {
    bool is_kt = true;
    std::optional<Witness> witness;  // set iff !is_kt
};

struct AcyclicResult {
    bool acyclic = true;
    std::vector<Vertex> order;  // topological order, when acyclic
    std::vector<Vertex> cycle;  // a directed cycle, when not
};

AcyclicResult check_acyclic(const Orientation& d);
inline bool is_acyclic(const Orientation& d) { return check_acyclic(d).acyclic; }

/// Decides whether every pair of vertices is joined by at most one directed
/// path. Path counts from each source are propagated along a topological
/// order and saturate at 2, so the cost is O(n (n + m)) regardless of how
/// many paths the digraph has.
///
/// On failure the witness is either a directed cycle or two internally
/// disjoint directed paths u -> v whose union is an induced cycle. Witnesses
/// are deterministic: the first source (by id) with a doubled count is used.
VerifyResult verify_kt(const Orientation& d);

// Checks a witness against the orientation it was extracted from.
bool witness_replays(const Orientation& d, const Witness& w);

struct SimplifyResult {
    Orientation reduced;           // induced on the surviving vertices, renumbered
    std::vector<Vertex> removed;   // original ids, in removal order
    std::vector<Vertex> kept;      // new id -> original id (index 0 unused)
};

/// Repeatedly deletes a vertex that is a source or a sink and whose
/// neighbours are all sources or sinks. The result is KT iff the input is.
SimplifyResult simplify_source_sink(const Orientation& d);

}  // namespace kt
