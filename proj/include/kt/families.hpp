#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kt/graph.hpp"

namespace kt {

using Rational = boost::multiprecision::cpp_rational;

// Numerator and denominator roughly double in length per step.
inline constexpr int kMaxExactF = 24;

/// F_1 = 1, F_{k+1} = F_k + 1/F_k, exactly. Requires 1 <= k <= kMaxExactF.
Rational f_sequence(int k);

// Same recurrence in double precision, for large k.
double f_sequence_approx(int k);

/// 2 x k grid: v_i = i, w_i = k + i; rungs v_i w_i, rails v_i v_{i+1} and
/// w_i w_{i+1}.
Graph gen_ladder(int k);

Graph gen_cycle(int n);

/// Known names: cube, k23, k33, k33e, k4, petersen, prism, cubeMinusVertex,
/// cubeMinusEdge, and cycleN for N >= 3. Throws InputError otherwise.
/// The cube family shares one labeling: c = 1, a1..a3 = 2..4,
/// b12 = 5, b13 = 6, b23 = 7, d = 8; cubeMinusEdge lacks d b23.
Graph gen_named(const std::string& name);
std::vector<std::string> named_graphs();

inline constexpr std::int64_t kMaxGeneratedVertices = 10'000'000;
inline constexpr std::int64_t kMaxGeneratedEdges = 50'000'000;

struct CopycutFamily {
    int k = 1;
    Graph graph;
    std::vector<Vertex> branch;  // sorted
    Orientation orientation;     // KT, every branch vertex a source
    std::vector<std::int64_t> d_seq;  // d_1 .. d_{k-1}
    std::int64_t n = 1;
    std::int64_t alpha = 1;  // number of branch vertices
};

/// Canonical d-sequence d_j = n_j - alpha_j for j < k.
std::vector<std::int64_t> canonical_d_sequence(int k);

/// Builds G_k step by step. From G_j with branch vertices b_1 < ... < b_a:
///   1. glue d_j copies of G_j along their branch vertices into c_1..c_a;
///   2. replace each c_r by n_j twins v_1..v_{n_j} with the same neighbours;
///   3. add a fresh copy of G_j per c_r and join v_i to its i-th vertex.
/// The twins become the branch vertices of G_{j+1}. New vertices are
/// numbered in the order: inner vertices of the glued copies (copy by copy),
/// then per r the twins of c_r followed by the fresh copy for c_r.
///
/// `d` may be empty (canonical) or give at least k - 1 values. A zero entry
/// is accepted only when G_j has no inner vertex, where it changes nothing.
/// Throws InputError when the result would exceed kMaxGeneratedVertices
/// or kMaxGeneratedEdges (canonical G_6 has ~2.4e10 edges).
CopycutFamily gen_copycut(int k, const std::vector<std::int64_t>& d = {});

struct TwincutFamily {
    int k = 1;
    Graph graph;
    std::vector<Vertex> branch;
};

// Twincut graphs: each step uses G_j itself in place of the glued copies.
TwincutFamily gen_twincut(int k);

}  // namespace kt
