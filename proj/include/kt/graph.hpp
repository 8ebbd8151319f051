#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kt {

// Vertices are 1-based throughout; index 0 is never a valid vertex.
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;  // u < v once normalized

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Malformed user input: bad files, out-of-range ids, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Should be unreachable on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices 1..n, immutable after construction.
///
/// Edges are stored normalized (u < v) and sorted lexicographically; the
/// edge id of an edge is its position in that order. Adjacency is kept in
/// CSR form with neighbours sorted ascending, so every traversal in the
/// library visits vertices in a deterministic order.
class Graph {
public:
    Graph() = default;

    /// Builds from arbitrary pairs. Duplicates (in either orientation) are
    /// collapsed; self-loops and out-of-range ids throw InputError.
    static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
        return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
    }
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        auto b = offsets_[static_cast<std::size_t>(v)];
        auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {adj_.data() + b, adj_.data() + e};
    }
    // Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const {
        auto b = offsets_[static_cast<std::size_t>(v)];
        auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {adj_edge_.data() + b, adj_edge_.data() + e};
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<EdgeId> adj_edge_;
};

/// A direction for every edge of a base graph.
///
/// forward(e) means the normalized edge (u, v), u < v, is oriented u -> v.
class Orientation {
public:
    Orientation() : base_(std::make_shared<const Graph>()) {}
    Orientation(std::shared_ptr<const Graph> base, std::vector<bool> forward);
    // All edges oriented low id -> high id.
    explicit Orientation(std::shared_ptr<const Graph> base);

    /// Builds the underlying graph from an arc list. Throws InputError on
    /// self-loops, out-of-range ids, or an edge given twice.
    static Orientation from_arcs(Vertex n, std::span<const Arc> arcs);

    const Graph& graph() const { return *base_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return base_; }
    Vertex vertex_count() const { return base_->vertex_count(); }

    bool forward(EdgeId e) const { return forward_[static_cast<std::size_t>(e)]; }
    const std::vector<bool>& directions() const { return forward_; }
    Arc arc(EdgeId e) const {
        const Edge& ed = base_->edge(e);
        return forward(e) ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
    }
    // Arcs sorted lexicographically by (from, to).
    std::vector<Arc> arcs() const;
    bool has_arc(Vertex from, Vertex to) const;

    std::vector<std::vector<Vertex>> out_lists() const;
    std::vector<std::vector<Vertex>> in_lists() const;
    std::vector<int> in_degrees() const;
    std::vector<int> out_degrees() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return *a.base_ == *b.base_ && a.forward_ == b.forward_;
    }

private:
    std::shared_ptr<const Graph> base_;
    std::vector<bool> forward_;
};

struct Bipartition {
    std::vector<Vertex> a;  // class containing the lowest id of each component
    std::vector<Vertex> b;
};

struct Renumbered {
    Graph graph;
    std::vector<Vertex> new_to_old;  // index 0 unused
    std::vector<Vertex> old_to_new;  // 0 for dropped vertices
};

struct GluedOrientation {
    Orientation orientation;
    std::vector<Vertex> map_first;   // old id in d1 -> new id
    std::vector<Vertex> map_second;  // old id in d2 -> new id
};

inline constexpr int kInfiniteGirth = -1;

Graph graph_from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);

Orientation reverse(const Orientation& d);

/// Edges whose removal disconnects their component, via an iterative
/// lowpoint DFS. Sorted by edge id.
std::vector<Edge> bridges(const Graph& g);

/// Length of a shortest cycle, or kInfiniteGirth for forests.
int girth(const Graph& g);

std::optional<Bipartition> bipartition(const Graph& g);

/// Disjoint union of d1 and d2 with arc e1 of d1 identified with arc e2 of
/// d2. Vertices of d1 keep their ids; d2's other vertices follow in order.
GluedOrientation glue_at_edge(const Orientation& d1, Arc e1, const Orientation& d2, Arc e2);

/// Component label per vertex (labels 0.., index 0 unused), in order of
/// the lowest vertex id of each component.
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
int max_degree(const Graph& g);
bool has_triangle(const Graph& g);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

/// Subgraph induced by `vertices`, renumbered in ascending old-id order.
Renumbered induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Orientation induced_orientation(const Orientation& d, std::span<const Vertex> vertices);

Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// Every four-cycle exactly once, as (a, b, c, d) with edges ab, bc, cd, da;
/// a is the smallest vertex and b < d. Sorted lexicographically.
std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g);

}  // namespace kt
