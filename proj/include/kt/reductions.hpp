#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kt/graph.hpp"

namespace kt {

/// Monotone NAE-3SAT: every clause lists three distinct variables
/// (1-based) and is satisfied when they are not all equal.
struct Nae3SatInstance {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

using Assignment = std::vector<bool>;  // index i holds variable i + 1

/// File format: `c` comments, header `p nae <nvars> <nclauses>`, then one
/// clause per line as `<i> <j> <k> 0`. Throws InputError with a line number.
Nae3SatInstance parse_nae3sat(std::string_view text);
std::string write_nae3sat(const Nae3SatInstance& inst);

// Throws InputError on a repeated or out-of-range variable.
void validate(const Nae3SatInstance& inst);

// Index of the first clause the assignment violates, if any.
std::optional<std::size_t> first_violated_clause(const Nae3SatInstance& inst, const Assignment& a);

inline constexpr int kMaxBruteForceVars = 30;

/// First satisfying assignment in binary counting order (variable 1 is the
/// lowest bit, False before True), or nullopt.
std::optional<Assignment> nae3sat_bruteforce(const Nae3SatInstance& inst);

enum class ReductionVariant { General, Deg4 };

/// What a decoder needs: the designated edge of every variable and the
/// five-cycle of every clause.
struct ReductionMap {
    std::vector<std::array<Vertex, 2>> var_edges;      // (y_i, z_i)
    std::vector<std::array<Vertex, 5>> clause_cycles;  // v1..v5 of clause j
};

/// One 3-ladder per (clause, slot): roles v1 v2 v3 w1 w2 w3, with v1w1
/// glued to a variable rung and v3w3 to a clause edge.
using LadderRoles = std::array<Vertex, 6>;

struct EncodedReduction {
    ReductionVariant variant = ReductionVariant::General;
    Graph graph;
    ReductionMap map;
    std::vector<LadderRoles> ladders;  // index 3 * clause + slot
    // Deg4 only: per variable, its ladder as v_1..v_k followed by w_1..w_k.
    std::vector<std::vector<Vertex>> var_ladders;
};

/// Vertex numbering: variables first (y_i, z_i; for Deg4 the whole variable
/// ladder, rung by rung), then the five cycle vertices of each clause, then
/// the interior rung (v2, w2) of each clause slot.
///
/// General: |V| = 2n + 11m and |E| = n + 20m.
/// Deg4: variable i with c_i occurrences becomes a ladder with
/// max(1, 2c_i - 1) rungs and its t-th occurrence attaches at rung 2t - 1;
/// the designated variable edge is rung 1. Maximum degree is at most 4.
EncodedReduction encode_general(const Nae3SatInstance& inst);
EncodedReduction encode_deg4(const Nae3SatInstance& inst);

/// Variable i is True iff y_i -> z_i. Throws InputError when the
/// orientation does not contain every designated edge.
Assignment decode_assignment(const ReductionMap& map, const Orientation& d);

/// The KT orientation witnessing a satisfying assignment. Throws InputError
/// naming the first violated clause when `a` is not NAE-satisfying.
Orientation assignment_to_orientation(const EncodedReduction& enc, const Nae3SatInstance& inst, const Assignment& a);

// Sidecar lines `var <i> <y> <z>` and `clause <j> <v1> .. <v5>`.
std::string write_map(const ReductionMap& map);
ReductionMap parse_map(std::string_view text);

}  // namespace kt
