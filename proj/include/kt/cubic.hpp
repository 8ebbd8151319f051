#pragma once

#include <array>
#include <string>
#include <vector>

#include "kt/graph.hpp"
#include "kt/solve.hpp"

namespace kt {

/// Hypergraph on V(G) with one hyperedge per four-cycle. Components are
/// ordered by their lowest vertex; vertices in no four-cycle are singleton
/// components.
struct FourCycleHypergraph {
    Graph base;
    std::vector<std::array<Vertex, 4>> hyperedges;  // cyclic order, see four_cycles()
    std::vector<int> component_of;                  // per vertex, index 0 unused
    std::vector<std::vector<Vertex>> components;    // sorted vertex lists
    std::vector<std::vector<int>> component_hyperedges;

    bool nontrivial(int c) const { return !component_hyperedges[static_cast<std::size_t>(c)].empty(); }
};

/// Requires a triangle-free graph of maximum degree at most 3; throws
/// InputError otherwise.
FourCycleHypergraph four_cycle_hypergraph(const Graph& g);

enum class ComponentTag {
    CubeMinusEdge,
    CubeMinusVertex,
    Ladder,
    LadderPlusOneEdge,
    K23,
    K33MinusEdge,
    LadderPlusTwoEdges,
    Cube,
    K33,
};

// Which extra edge(s) a ladder carries.
enum class LadderExtra { None, V1Wk, V1Vk, Rails, Cross };

/// One of the nine shapes a four-cycle component can induce, with a
/// labeling of the canonical pattern's roles by base vertices.
///
/// Roles by tag:
///   ladder family   v1..vk, w1..wk                (2k roles)
///   K23             x1 x2 y1 y2 y3
///   K33, K33-e      x1 x2 x3 y1 y2 y3             (K33-e lacks x3y3)
///   cube family     c a1 a2 a3 b12 b13 b23 [d]    (cube-e: d misses b23)
struct ComponentClass {
    ComponentTag tag = ComponentTag::Ladder;
    int k = 0;  // ladder length for the ladder family
    LadderExtra extra = LadderExtra::None;
    std::vector<Vertex> labeling;  // role index -> base vertex

    std::string name() const;
    std::vector<std::string> role_names() const;
    // Pattern edges as role-index pairs.
    std::vector<std::pair<int, int>> pattern_edges() const;
};

/// Classifies a component with at least one hyperedge by growing the
/// shapes in the order of the case analysis: shared-three-vertex pairs
/// (K23 family), then a cube minus a vertex (cube family), then a maximal
/// chain of four-cycles (ladder family). Throws InternalError when the
/// component matches none, which cannot happen for a connected
/// triangle-free subcubic graph.
ComponentClass classify_component(const FourCycleHypergraph& h, int component);

// True iff the labeling maps the pattern exactly onto G[V(component)].
bool labeling_replays(const Graph& g, const ComponentClass& cc);

/// All KT orientations of the labeled shape, as arc lists over base ids.
/// Fixing one four-cycle edge forces every four-cycle edge; at most two
/// edges lie on no four-cycle.
std::vector<std::vector<Arc>> component_kt_orientations(const ComponentClass& cc);

struct ExceptionalEdge {
    Edge edge;
    int component = 0;
    int ladder_length = 0;
};

/// Ladder-plus-one-edge components whose chord is v1vk with k odd or v1wk
/// with k even, and lies on no four-cycle.
std::vector<ExceptionalEdge> find_exceptional_edges(const FourCycleHypergraph& h,
                                                    const std::vector<ComponentClass>& classes);

struct ContractedVertex {
    enum class Kind { Original, Side };
    Kind kind = Kind::Original;
    Vertex original = 0;  // for Original
    int component = -1;   // for Side
    char side = 'A';      // for Side
};

struct ContractedGraph {
    Graph graph;
    std::vector<ContractedVertex> provenance;  // per vertex of graph, index 0 unused
    std::vector<std::array<Vertex, 2>> side_vertex;  // per component: ids of a_C, b_C (0 if deleted or trivial)
    std::vector<std::vector<Vertex>> side_a, side_b;  // per nontrivial component: A_C, B_C in base ids
};

/// Replaces every nontrivial component of h by an edge a_C b_C carrying the
/// outside neighbours of each side of the component's bipartition in
/// `g_star` (the base graph minus exceptional edges), then deletes a side
/// vertex whose only neighbour is its partner.
ContractedGraph contract_components(const Graph& g_star, const FourCycleHypergraph& h);

/// Proper 3-colouring (colours 1..3, index 0 unused) of a graph whose
/// components have maximum degree at most 3 and are not K4.
std::vector<int> brooks_three_color(const Graph& g);

/// Orients each edge from lower to higher colour after checking that the
/// graph is triangle-free, the colouring is proper, and every four-cycle
/// uses exactly two colours.
Orientation orient_two_colored_four_cycles(const Graph& g, const std::vector<int>& colors);

struct CubicTrace {
    struct Piece {
        std::vector<Vertex> vertices;  // base ids
        int hyperedges = 0;
        int components = 0;
        std::string method;  // "trivial", "brute-force" or "contraction"
        std::vector<std::pair<std::string, std::vector<Vertex>>> classes;
        std::vector<Edge> exceptional;
    };
    std::vector<Edge> bridges;
    std::vector<Piece> pieces;
};

/// Decides KT-orientability of a graph with maximum degree at most 3 in
/// polynomial time, returning a verified orientation when one exists.
/// Throws InputError when the maximum degree exceeds 3.
SolveOutcome solve_cubic(const Graph& g, CubicTrace* trace = nullptr);

std::string format_trace(const CubicTrace& trace);

}  // namespace kt
