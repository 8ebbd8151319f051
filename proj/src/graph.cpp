#include "kt/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kt {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return from_edges(n, std::span<const Edge>(edges));
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> input) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(input.size());
    for (Edge e : input) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw InputError("vertex out of range in edge " + pair_text(e.u, e.v));
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 2, 0);
    for (const Edge& e : g.edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (Vertex v = 1; v <= n; ++v)
        g.offsets_[static_cast<std::size_t>(v) + 1] = g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    g.adj_.assign(g.edges_.size() * 2, 0);
    g.adj_edge_.assign(g.edges_.size() * 2, 0);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end());
    // Edges are sorted, so both passes emit ascending neighbour lists when
    // the smaller endpoints are inserted first.
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[static_cast<std::size_t>(id)];
        auto& slot = fill[static_cast<std::size_t>(e.v)];
        g.adj_[slot] = e.u;
        g.adj_edge_[slot] = id;
        ++slot;
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[static_cast<std::size_t>(id)];
        auto& slot = fill[static_cast<std::size_t>(e.u)];
        g.adj_[slot] = e.v;
        g.adj_edge_[slot] = id;
        ++slot;
    }
    return g;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

Orientation::Orientation(std::shared_ptr<const Graph> base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
    if (static_cast<EdgeId>(forward_.size()) != base_->edge_count())
        throw InputError("orientation size does not match edge count");
}

Orientation::Orientation(std::shared_ptr<const Graph> base)
    : base_(std::move(base)), forward_(static_cast<std::size_t>(base_->edge_count()), true) {}

Orientation Orientation::from_arcs(Vertex n, std::span<const Arc> arcs) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const Arc& a : arcs) edges.push_back({a.from, a.to});
    auto g = std::make_shared<const Graph>(Graph::from_edges(n, std::span<const Edge>(edges)));
    if (static_cast<std::size_t>(g->edge_count()) != arcs.size())
        throw InputError("edge given more than once in arc list");
    std::vector<bool> fwd(arcs.size());
    for (const Arc& a : arcs) fwd[static_cast<std::size_t>(*g->edge_id(a.from, a.to))] = a.from < a.to;
    return Orientation(std::move(g), std::move(fwd));
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(forward_.size());
    for (EdgeId e = 0; e < base_->edge_count(); ++e) out.push_back(arc(e));
    std::sort(out.begin(), out.end());
    return out;
}

bool Orientation::has_arc(Vertex from, Vertex to) const {
    auto id = base_->edge_id(from, to);
    return id && arc(*id).from == from;
}

std::vector<std::vector<Vertex>> Orientation::out_lists() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(vertex_count()) + 1);
    for (Vertex v = 1; v <= vertex_count(); ++v) {
        auto nb = base_->neighbors(v);
        auto ids = base_->incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (arc(ids[i]).from == v) out[static_cast<std::size_t>(v)].push_back(nb[i]);
    }
    return out;
}

std::vector<std::vector<Vertex>> Orientation::in_lists() const {
    std::vector<std::vector<Vertex>> in(static_cast<std::size_t>(vertex_count()) + 1);
    for (Vertex v = 1; v <= vertex_count(); ++v) {
        auto nb = base_->neighbors(v);
        auto ids = base_->incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (arc(ids[i]).to == v) in[static_cast<std::size_t>(v)].push_back(nb[i]);
    }
    return in;
}

std::vector<int> Orientation::in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()) + 1, 0);
    for (EdgeId e = 0; e < base_->edge_count(); ++e) ++deg[static_cast<std::size_t>(arc(e).to)];
    return deg;
}

std::vector<int> Orientation::out_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()) + 1, 0);
    for (EdgeId e = 0; e < base_->edge_count(); ++e) ++deg[static_cast<std::size_t>(arc(e).from)];
    return deg;
}

Graph graph_from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    return Graph::from_edges(n, pairs);
}

Orientation reverse(const Orientation& d) {
    std::vector<bool> flipped = d.directions();
    flipped.flip();
    return Orientation(d.graph_ptr(), std::move(flipped));
}

std::vector<Edge> bridges(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> disc(n + 1, 0), low(n + 1, 0);
    std::vector<EdgeId> parent_edge(n + 1, -1);
    std::vector<std::size_t> cursor(n + 1, 0);
    std::vector<EdgeId> found;
    int tick = 0;

    for (Vertex root = 1; root <= g.vertex_count(); ++root) {
        if (disc[static_cast<std::size_t>(root)]) continue;
        std::vector<Vertex> stack{root};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++tick;
        while (!stack.empty()) {
            Vertex v = stack.back();
            auto vi = static_cast<std::size_t>(v);
            auto nb = g.neighbors(v);
            auto ids = g.incident_edges(v);
            if (cursor[vi] < nb.size()) {
                std::size_t i = cursor[vi]++;
                Vertex w = nb[i];
                auto wi = static_cast<std::size_t>(w);
                if (ids[i] == parent_edge[vi]) continue;
                if (disc[wi]) {
                    low[vi] = std::min(low[vi], disc[wi]);
                } else {
                    disc[wi] = low[wi] = ++tick;
                    parent_edge[wi] = ids[i];
                    stack.push_back(w);
                }
                continue;
            }
            stack.pop_back();
            if (parent_edge[vi] >= 0) {
                const Edge& pe = g.edge(parent_edge[vi]);
                Vertex p = pe.u == v ? pe.v : pe.u;
                auto pi = static_cast<std::size_t>(p);
                low[pi] = std::min(low[pi], low[vi]);
                if (low[vi] > disc[pi]) found.push_back(parent_edge[vi]);
            }
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<Edge> out;
    out.reserve(found.size());
    for (EdgeId id : found) out.push_back(g.edge(id));
    return out;
}

int girth(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    int best = kInfiniteGirth;
    std::vector<int> dist(n + 1);
    std::vector<Vertex> parent(n + 1);
    for (Vertex root = 1; root <= g.vertex_count(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            int dv = dist[static_cast<std::size_t>(v)];
            // No cycle through root can beat the current best from here on.
            if (best != kInfiniteGirth && 2 * dv + 1 >= best) break;
            for (Vertex w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = dv + 1;
                    parent[wi] = v;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(v)]) {
                    int len = dv + dist[wi] + 1;
                    if (best == kInfiniteGirth || len < best) best = len;
                }
            }
        }
    }
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> side(n + 1, -1);
    for (Vertex root = 1; root <= g.vertex_count(); ++root) {
        if (side[static_cast<std::size_t>(root)] >= 0) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (side[wi] < 0) {
                    side[wi] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[wi] == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? bp.a : bp.b).push_back(v);
    return bp;
}

GluedOrientation glue_at_edge(const Orientation& d1, Arc e1, const Orientation& d2, Arc e2) {
    if (!d1.has_arc(e1.from, e1.to))
        throw InputError("glue: " + pair_text(e1.from, e1.to) + " is not an arc of the first orientation");
    if (!d2.has_arc(e2.from, e2.to))
        throw InputError("glue: " + pair_text(e2.from, e2.to) + " is not an arc of the second orientation");

    const Vertex n1 = d1.vertex_count();
    GluedOrientation out;
    out.map_first.resize(static_cast<std::size_t>(n1) + 1);
    std::iota(out.map_first.begin(), out.map_first.end(), 0);
    out.map_second.assign(static_cast<std::size_t>(d2.vertex_count()) + 1, 0);
    out.map_second[static_cast<std::size_t>(e2.from)] = e1.from;
    out.map_second[static_cast<std::size_t>(e2.to)] = e1.to;
    Vertex next = n1;
    for (Vertex v = 1; v <= d2.vertex_count(); ++v)
        if (!out.map_second[static_cast<std::size_t>(v)]) out.map_second[static_cast<std::size_t>(v)] = ++next;

    std::vector<Arc> arcs = d1.arcs();
    for (const Arc& a : d2.arcs()) {
        if (a == e2) continue;
        arcs.push_back({out.map_second[static_cast<std::size_t>(a.from)], out.map_second[static_cast<std::size_t>(a.to)]});
    }
    out.orientation = Orientation::from_arcs(next, arcs);
    return out;
}

std::vector<int> component_labels(const Graph& g, int* count) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    int next = 0;
    for (Vertex root = 1; root <= g.vertex_count(); ++root) {
        if (label[static_cast<std::size_t>(root)] >= 0) continue;
        label[static_cast<std::size_t>(root)] = next;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    int count = 0;
    auto label = component_labels(g, &count);
    std::vector<std::vector<Vertex>> comps(static_cast<std::size_t>(count));
    for (Vertex v = 1; v <= g.vertex_count(); ++v) comps[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    return comps;
}

bool is_connected(const Graph& g) {
    int count = 0;
    component_labels(g, &count);
    return count <= 1;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        // Sorted lists: a merge finds the smallest common neighbour.
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                std::array<Vertex, 3> t{e.u, e.v, *ia};
                std::sort(t.begin(), t.end());
                return t;
            }
        }
    }
    return std::nullopt;
}

bool has_triangle(const Graph& g) { return find_triangle(g).has_value(); }

Renumbered induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    Renumbered r;
    r.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    r.new_to_old.push_back(0);
    for (Vertex v : sorted) {
        if (!g.has_vertex(v)) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        r.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex v : sorted)
        for (Vertex w : g.neighbors(v))
            if (v < w && r.old_to_new[static_cast<std::size_t>(w)])
                edges.push_back({r.old_to_new[static_cast<std::size_t>(v)], r.old_to_new[static_cast<std::size_t>(w)]});
    r.graph = Graph::from_edges(static_cast<Vertex>(sorted.size()), std::span<const Edge>(edges));
    return r;
}

Orientation induced_orientation(const Orientation& d, std::span<const Vertex> vertices) {
    auto sub = induced_subgraph(d.graph(), vertices);
    auto base = std::make_shared<const Graph>(std::move(sub.graph));
    std::vector<bool> fwd(static_cast<std::size_t>(base->edge_count()));
    for (EdgeId e = 0; e < base->edge_count(); ++e) {
        const Edge& ed = base->edge(e);
        Vertex u = sub.new_to_old[static_cast<std::size_t>(ed.u)];
        Vertex v = sub.new_to_old[static_cast<std::size_t>(ed.v)];
        // Renumbering is monotone, so normalized order is preserved.
        fwd[static_cast<std::size_t>(e)] = d.forward(*d.graph().edge_id(u, v));
    }
    return Orientation(std::move(base), std::move(fwd));
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> drop(removed.begin(), removed.end());
    for (Edge& e : drop)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
    return Graph::from_edges(g.vertex_count(), std::span<const Edge>(kept));
}

std::vector<std::array<Vertex, 4>> four_cycles(const Graph& g) {
    std::vector<std::array<Vertex, 4>> out;
    for (Vertex a = 1; a <= g.vertex_count(); ++a) {
        auto na = g.neighbors(a);
        for (std::size_t i = 0; i < na.size(); ++i) {
            if (na[i] < a) continue;
            for (std::size_t j = i + 1; j < na.size(); ++j) {
                Vertex b = na[i], d = na[j];
                for (Vertex c : g.neighbors(b))
                    if (c > a && c != d && g.adjacent(c, d)) out.push_back({a, b, c, d});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kt
