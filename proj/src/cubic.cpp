#include "kt/cubic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kt/verify.hpp"

namespace kt {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

[[noreturn]] void no_outcome(const std::string& why) {
    throw InternalError("classify_component: " + why);
}

// Role layout helpers for the cube family.
enum CubeRole { kC = 0, kA1, kA2, kA3, kB12, kB13, kB23, kD };

ComponentClass classify_k23_family(const Graph& g, const std::vector<Vertex>& comp, const std::vector<char>& in) {
    // Two vertices with three common neighbours span a K23.
    for (Vertex x1 : comp) {
        std::map<Vertex, int> common;
        for (Vertex y : g.neighbors(x1))
            for (Vertex x2 : g.neighbors(y))
                if (x2 > x1) ++common[x2];
        for (auto [x2, c] : common) {
            if (c < 3) continue;
            std::vector<Vertex> ys(g.neighbors(x1).begin(), g.neighbors(x1).end());
            ComponentClass cc;
            if (comp.size() == 5) {
                cc.tag = ComponentTag::K23;
                cc.labeling = {x1, x2, ys[0], ys[1], ys[2]};
                return cc;
            }
            for (Vertex x3 : comp) {
                if (x3 == x1 || x3 == x2) continue;
                std::vector<Vertex> hit;
                for (Vertex y : ys)
                    if (g.adjacent(x3, y)) hit.push_back(y);
                if (hit.size() < 2) continue;
                if (comp.size() != 6) no_outcome("K23 core inside a component of size " + std::to_string(comp.size()));
                if (hit.size() == 3) {
                    cc.tag = ComponentTag::K33;
                    cc.labeling = {x1, x2, x3, ys[0], ys[1], ys[2]};
                } else {
                    Vertex missing = 0;
                    for (Vertex y : ys)
                        if (!g.adjacent(x3, y)) missing = y;
                    cc.tag = ComponentTag::K33MinusEdge;
                    cc.labeling = {x1, x2, x3, hit[0], hit[1], missing};
                }
                return cc;
            }
            no_outcome("K23 core with no third apex");
        }
    }
    (void)in;
    return {};
}

// Finds a cube minus a vertex centred at the lowest possible vertex.
std::optional<std::vector<Vertex>> find_cube_minus_vertex(const Graph& g, const std::vector<Vertex>& comp,
                                                          const std::vector<char>& in) {
    auto common_other = [&](Vertex a, Vertex b, Vertex not_this) -> Vertex {
        for (Vertex x : g.neighbors(a))
            if (x != not_this && in[ix(x)] && g.adjacent(x, b)) return x;
        return 0;
    };
    for (Vertex c : comp) {
        std::vector<Vertex> a;
        for (Vertex x : g.neighbors(c))
            if (in[ix(x)]) a.push_back(x);
        if (a.size() != 3) continue;
        Vertex b12 = common_other(a[0], a[1], c);
        Vertex b13 = common_other(a[0], a[2], c);
        Vertex b23 = common_other(a[1], a[2], c);
        if (!b12 || !b13 || !b23) continue;
        if (b12 == b13 || b12 == b23 || b13 == b23) continue;
        return std::vector<Vertex>{c, a[0], a[1], a[2], b12, b13, b23};
    }
    return std::nullopt;
}

ComponentClass classify_cube_family(const Graph& g, const std::vector<Vertex>& comp, const std::vector<char>& in,
                                    std::vector<Vertex> x) {
    ComponentClass cc;
    if (comp.size() == 7) {
        cc.tag = ComponentTag::CubeMinusVertex;
        cc.labeling = std::move(x);
        return cc;
    }
    if (comp.size() != 8) no_outcome("cube fragment inside a component of size " + std::to_string(comp.size()));
    std::vector<char> in_x(in.size(), 0);
    for (Vertex v : x) in_x[ix(v)] = 1;
    for (Vertex y : comp) {
        if (in_x[ix(y)]) continue;
        bool h12 = g.adjacent(y, x[kB12]), h13 = g.adjacent(y, x[kB13]), h23 = g.adjacent(y, x[kB23]);
        int hits = h12 + h13 + h23;
        if (hits == 3) {
            cc.tag = ComponentTag::Cube;
            x.push_back(y);
            cc.labeling = std::move(x);
            return cc;
        }
        if (hits != 2) continue;
        // Rename the a's so that y misses b23, i.e. the shared a becomes a1.
        Vertex a1 = h12 && h13 ? x[kA1] : h12 && h23 ? x[kA2] : x[kA3];
        std::vector<Vertex> others;
        for (int r : {kA1, kA2, kA3})
            if (x[static_cast<std::size_t>(r)] != a1) others.push_back(x[static_cast<std::size_t>(r)]);
        auto b_of = [&](Vertex p, Vertex q) {
            for (Vertex b : {x[kB12], x[kB13], x[kB23]})
                if (g.adjacent(b, p) && g.adjacent(b, q)) return b;
            return Vertex{0};
        };
        cc.tag = ComponentTag::CubeMinusEdge;
        cc.labeling = {x[kC], a1, others[0], others[1], b_of(a1, others[0]), b_of(a1, others[1]),
                       b_of(others[0], others[1]), y};
        return cc;
    }
    no_outcome("eighth vertex of a cube fragment not attached to two corners");
}

ComponentClass classify_ladder_family(const FourCycleHypergraph& h, int component) {
    const Graph& g = h.base;
    const auto& comp = h.components[static_cast<std::size_t>(component)];
    const auto& hes = h.component_hyperedges[static_cast<std::size_t>(component)];
    const std::size_t t = hes.size();

    auto cycle_edges = [&](int he) {
        const auto& c = h.hyperedges[static_cast<std::size_t>(he)];
        std::vector<Edge> out;
        for (int i = 0; i < 4; ++i) {
            Vertex a = c[static_cast<std::size_t>(i)], b = c[static_cast<std::size_t>((i + 1) % 4)];
            out.push_back({std::min(a, b), std::max(a, b)});
        }
        return out;
    };
    auto shared_edge = [&](int p, int q) -> std::optional<Edge> {
        auto ep = cycle_edges(p), eq = cycle_edges(q);
        for (const Edge& e : ep)
            if (std::find(eq.begin(), eq.end(), e) != eq.end()) return e;
        return std::nullopt;
    };

    std::vector<std::vector<std::size_t>> link(t);
    {
        std::map<Edge, std::vector<std::size_t>> by_edge;
        for (std::size_t i = 0; i < t; ++i)
            for (const Edge& e : cycle_edges(hes[i])) by_edge[e].push_back(i);
        for (auto& [e, list] : by_edge) {
            if (list.size() > 2) no_outcome("edge on more than two four-cycles outside the cube family");
            if (list.size() == 2) {
                link[list[0]].push_back(list[1]);
                link[list[1]].push_back(list[0]);
            }
        }
    }
    for (const auto& l : link)
        if (l.size() > 2) no_outcome("four-cycle sharing edges with more than two others");

    // Walk the chain of four-cycles, from an end when there is one.
    std::size_t start = 0;
    bool cyclic = true;
    for (std::size_t i = 0; i < t; ++i)
        if (link[i].size() < 2) {
            start = i;
            cyclic = false;
            break;
        }
    std::vector<std::size_t> chain{start};
    std::vector<char> used(t, 0);
    used[start] = 1;
    while (chain.size() < t) {
        std::size_t cur = chain.back();
        std::size_t next = t;
        for (std::size_t nb : link[cur])
            if (!used[nb]) {
                next = nb;
                break;
            }
        if (next == t) no_outcome("four-cycle chain is not a single path or cycle");
        used[next] = 1;
        chain.push_back(next);
    }

    auto opposite = [&](int he, const Edge& e) {
        for (const Edge& f : cycle_edges(he))
            if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) return f;
        no_outcome("four-cycle without an opposite edge");
    };

    std::vector<Edge> rungs;
    auto he_at = [&](std::size_t i) { return hes[chain[i]]; };
    if (cyclic) {
        rungs.push_back(*shared_edge(he_at(t - 1), he_at(0)));
        for (std::size_t i = 0; i + 1 < t; ++i) rungs.push_back(*shared_edge(he_at(i), he_at(i + 1)));
    } else if (t == 1) {
        const auto& c = h.hyperedges[static_cast<std::size_t>(he_at(0))];
        rungs.push_back({std::min(c[0], c[1]), std::max(c[0], c[1])});
        rungs.push_back(opposite(he_at(0), rungs[0]));
    } else {
        Edge second = *shared_edge(he_at(0), he_at(1));
        rungs.push_back(opposite(he_at(0), second));
        for (std::size_t i = 0; i + 1 < t; ++i) rungs.push_back(*shared_edge(he_at(i), he_at(i + 1)));
        rungs.push_back(opposite(he_at(t - 1), rungs.back()));
    }

    const int k = static_cast<int>(rungs.size());
    std::vector<Vertex> v(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(k));
    v[0] = rungs[0].u;
    w[0] = rungs[0].v;
    for (int i = 1; i < k; ++i) {
        const Edge& r = rungs[static_cast<std::size_t>(i)];
        Vertex prev = v[static_cast<std::size_t>(i - 1)];
        if (g.adjacent(prev, r.u) && g.adjacent(w[static_cast<std::size_t>(i - 1)], r.v)) {
            v[static_cast<std::size_t>(i)] = r.u;
            w[static_cast<std::size_t>(i)] = r.v;
        } else if (g.adjacent(prev, r.v) && g.adjacent(w[static_cast<std::size_t>(i - 1)], r.u)) {
            v[static_cast<std::size_t>(i)] = r.v;
            w[static_cast<std::size_t>(i)] = r.u;
        } else {
            no_outcome("consecutive rungs are not joined by rails");
        }
    }
    std::vector<Vertex> all(v);
    all.insert(all.end(), w.begin(), w.end());
    std::vector<Vertex> sorted_all(all);
    std::sort(sorted_all.begin(), sorted_all.end());
    if (std::adjacent_find(sorted_all.begin(), sorted_all.end()) != sorted_all.end() || sorted_all != comp)
        no_outcome("ladder does not cover the component exactly");

    // Extra edges beyond the ladder, among the four corners.
    Vertex v1 = v.front(), w1 = w.front(), vk = v.back(), wk = w.back();
    bool e_v1vk = k > 2 && g.adjacent(v1, vk);
    bool e_v1wk = k > 1 && g.adjacent(v1, wk);
    bool e_w1vk = k > 1 && g.adjacent(w1, vk);
    bool e_w1wk = k > 2 && g.adjacent(w1, wk);
    int induced = 0;
    for (Vertex x : comp)
        for (Vertex y : g.neighbors(x))
            if (x < y && std::binary_search(comp.begin(), comp.end(), y)) ++induced;
    int extras = induced - (3 * k - 2);
    int corner = e_v1vk + e_v1wk + e_w1vk + e_w1wk;
    if (extras != corner) no_outcome("chord of the ladder away from its ends");

    ComponentClass cc;
    cc.k = k;
    if (extras == 0) {
        cc.tag = ComponentTag::Ladder;
    } else if (extras == 1) {
        cc.tag = ComponentTag::LadderPlusOneEdge;
        if (e_w1vk || e_w1wk) std::swap(v, w);  // normalize so the chord leaves v1
        cc.extra = (e_v1vk || e_w1wk) ? LadderExtra::V1Vk : LadderExtra::V1Wk;
    } else if (extras == 2 && e_v1vk && e_w1wk) {
        cc.tag = ComponentTag::LadderPlusTwoEdges;
        cc.extra = LadderExtra::Rails;
    } else if (extras == 2 && e_v1wk && e_w1vk) {
        cc.tag = ComponentTag::LadderPlusTwoEdges;
        cc.extra = LadderExtra::Cross;
    } else {
        no_outcome("ladder with an impossible set of chords");
    }
    cc.labeling = v;
    cc.labeling.insert(cc.labeling.end(), w.begin(), w.end());
    return cc;
}

}  // namespace

FourCycleHypergraph four_cycle_hypergraph(const Graph& g) {
    if (max_degree(g) > 3) throw InputError("four_cycle_hypergraph: maximum degree exceeds 3");
    if (auto t = find_triangle(g))
        throw InputError("four_cycle_hypergraph: triangle " + std::to_string((*t)[0]) + " " +
                         std::to_string((*t)[1]) + " " + std::to_string((*t)[2]));
    FourCycleHypergraph h;
    h.base = g;
    h.hyperedges = four_cycles(g);
    UnionFind uf(ix(g.vertex_count()) + 1);
    for (const auto& c : h.hyperedges)
        for (int i = 1; i < 4; ++i) uf.unite(c[0], c[static_cast<std::size_t>(i)]);
    std::map<int, int> root_to_comp;
    h.component_of.assign(ix(g.vertex_count()) + 1, -1);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        int r = uf.find(v);
        auto [it, fresh] = root_to_comp.try_emplace(r, static_cast<int>(h.components.size()));
        if (fresh) h.components.emplace_back();
        h.component_of[ix(v)] = it->second;
        h.components[static_cast<std::size_t>(it->second)].push_back(v);
    }
    h.component_hyperedges.resize(h.components.size());
    for (std::size_t i = 0; i < h.hyperedges.size(); ++i)
        h.component_hyperedges[static_cast<std::size_t>(h.component_of[ix(h.hyperedges[i][0])])].push_back(static_cast<int>(i));
    return h;
}

std::string ComponentClass::name() const {
    switch (tag) {
        case ComponentTag::CubeMinusEdge: return "cube-minus-edge";
        case ComponentTag::CubeMinusVertex: return "cube-minus-vertex";
        case ComponentTag::Ladder: return "ladder(" + std::to_string(k) + ")";
        case ComponentTag::LadderPlusOneEdge:
            return "ladder(" + std::to_string(k) + ")+" + (extra == LadderExtra::V1Vk ? "v1vk" : "v1wk");
        case ComponentTag::K23: return "K23";
        case ComponentTag::K33MinusEdge: return "K33-e";
        case ComponentTag::LadderPlusTwoEdges:
            return "ladder(" + std::to_string(k) + ")+" + (extra == LadderExtra::Rails ? "rails" : "cross");
        case ComponentTag::Cube: return "cube";
        case ComponentTag::K33: return "K33";
    }
    return "?";
}

std::vector<std::string> ComponentClass::role_names() const {
    switch (tag) {
        case ComponentTag::Ladder:
        case ComponentTag::LadderPlusOneEdge:
        case ComponentTag::LadderPlusTwoEdges: {
            std::vector<std::string> out;
            for (int i = 1; i <= k; ++i) out.push_back("v" + std::to_string(i));
            for (int i = 1; i <= k; ++i) out.push_back("w" + std::to_string(i));
            return out;
        }
        case ComponentTag::K23: return {"x1", "x2", "y1", "y2", "y3"};
        case ComponentTag::K33MinusEdge:
        case ComponentTag::K33: return {"x1", "x2", "x3", "y1", "y2", "y3"};
        case ComponentTag::CubeMinusVertex: return {"c", "a1", "a2", "a3", "b12", "b13", "b23"};
        case ComponentTag::CubeMinusEdge:
        case ComponentTag::Cube: return {"c", "a1", "a2", "a3", "b12", "b13", "b23", "d"};
    }
    return {};
}

std::vector<std::pair<int, int>> ComponentClass::pattern_edges() const {
    std::vector<std::pair<int, int>> e;
    switch (tag) {
        case ComponentTag::Ladder:
        case ComponentTag::LadderPlusOneEdge:
        case ComponentTag::LadderPlusTwoEdges:
            for (int i = 0; i < k; ++i) e.push_back({i, k + i});
            for (int i = 0; i + 1 < k; ++i) {
                e.push_back({i, i + 1});
                e.push_back({k + i, k + i + 1});
            }
            if (extra == LadderExtra::V1Wk || extra == LadderExtra::Cross) e.push_back({0, 2 * k - 1});
            if (extra == LadderExtra::V1Vk || extra == LadderExtra::Rails) e.push_back({0, k - 1});
            if (extra == LadderExtra::Rails) e.push_back({k, 2 * k - 1});
            if (extra == LadderExtra::Cross) e.push_back({k, k - 1});
            break;
        case ComponentTag::K23:
            for (int x = 0; x < 2; ++x)
                for (int y = 2; y < 5; ++y) e.push_back({x, y});
            break;
        case ComponentTag::K33MinusEdge:
        case ComponentTag::K33:
            for (int x = 0; x < 3; ++x)
                for (int y = 3; y < 6; ++y)
                    if (!(tag == ComponentTag::K33MinusEdge && x == 2 && y == 5)) e.push_back({x, y});
            break;
        case ComponentTag::CubeMinusVertex:
        case ComponentTag::CubeMinusEdge:
        case ComponentTag::Cube:
            e = {{kC, kA1}, {kC, kA2}, {kC, kA3}, {kA1, kB12}, {kA2, kB12}, {kA1, kB13}, {kA3, kB13}, {kA2, kB23}, {kA3, kB23}};
            if (tag != ComponentTag::CubeMinusVertex) {
                e.push_back({kD, kB12});
                e.push_back({kD, kB13});
            }
            if (tag == ComponentTag::Cube) e.push_back({kD, kB23});
            break;
    }
    return e;
}

ComponentClass classify_component(const FourCycleHypergraph& h, int component) {
    const auto c = static_cast<std::size_t>(component);
    if (c >= h.components.size() || h.component_hyperedges[c].empty())
        throw InputError("classify_component: component has no four-cycle");
    const Graph& g = h.base;
    const auto& comp = h.components[c];
    std::vector<char> in(ix(g.vertex_count()) + 1, 0);
    for (Vertex v : comp) in[ix(v)] = 1;

    ComponentClass cc;
    bool found = false;
    if (h.component_hyperedges[c].size() >= 2) {
        cc = classify_k23_family(g, comp, in);
        found = !cc.labeling.empty();
        if (!found) {
            if (auto x = find_cube_minus_vertex(g, comp, in)) {
                cc = classify_cube_family(g, comp, in, std::move(*x));
                found = true;
            }
        }
    }
    if (!found) cc = classify_ladder_family(h, component);
    if (!labeling_replays(g, cc)) no_outcome("labeling of " + cc.name() + " does not replay");
    return cc;
}

bool labeling_replays(const Graph& g, const ComponentClass& cc) {
    std::vector<Vertex> verts(cc.labeling);
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
    for (Vertex v : verts)
        if (!g.has_vertex(v)) return false;
    std::vector<Edge> mapped;
    for (auto [a, b] : cc.pattern_edges()) {
        Vertex x = cc.labeling[static_cast<std::size_t>(a)], y = cc.labeling[static_cast<std::size_t>(b)];
        mapped.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(mapped.begin(), mapped.end());
    auto sub = induced_subgraph(g, verts);
    std::vector<Edge> actual;
    for (const Edge& e : sub.graph.edges()) actual.push_back({sub.new_to_old[ix(e.u)], sub.new_to_old[ix(e.v)]});
    std::sort(actual.begin(), actual.end());
    return mapped == actual;
}

std::vector<std::vector<Arc>> component_kt_orientations(const ComponentClass& cc) {
    const auto roles = static_cast<Vertex>(cc.labeling.size());
    std::vector<std::pair<Vertex, Vertex>> pe;
    for (auto [a, b] : cc.pattern_edges()) pe.push_back({a + 1, b + 1});
    auto pattern = std::make_shared<const Graph>(Graph::from_edges(roles, pe));
    const auto m = ix(pattern->edge_count());
    auto cycles = four_cycles(*pattern);
    std::vector<std::vector<std::size_t>> cycles_of(m);
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int i = 0; i < 4; ++i)
            cycles_of[ix(*pattern->edge_id(cycles[c][static_cast<std::size_t>(i)], cycles[c][static_cast<std::size_t>((i + 1) % 4)]))].push_back(c);
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < pattern->edge_count(); ++e)
        if (cycles_of[ix(e)].empty()) free_edges.push_back(e);
    if (free_edges.size() > 2) throw InternalError("component has more than two edges outside four-cycles");

    std::vector<std::vector<Arc>> result;
    if (cycles.empty()) return result;
    const EdgeId seed = *pattern->edge_id(cycles[0][0], cycles[0][1]);
    for (bool seed_forward : {true, false}) {
        std::vector<int> dir(m, -1);
        dir[ix(seed)] = seed_forward;
        std::deque<EdgeId> queue{seed};
        bool ok = true;
        while (ok && !queue.empty()) {
            EdgeId e = queue.front();
            queue.pop_front();
            const Edge& ed = pattern->edge(e);
            Vertex src = dir[ix(e)] ? ed.u : ed.v;
            for (std::size_t c : cycles_of[ix(e)]) {
                const auto& cyc = cycles[c];
                int i = static_cast<int>(std::find(cyc.begin(), cyc.end(), src) - cyc.begin());
                for (int s = 0; s < 4 && ok; ++s) {
                    Vertex x = cyc[static_cast<std::size_t>(s)], y = cyc[static_cast<std::size_t>((s + 1) % 4)];
                    bool x_source = (s - i) % 2 == 0;
                    Vertex from = x_source ? x : y, to = x_source ? y : x;
                    EdgeId f = *pattern->edge_id(x, y);
                    int want = from < to;
                    if (dir[ix(f)] < 0) {
                        dir[ix(f)] = want;
                        queue.push_back(f);
                    } else if (dir[ix(f)] != want) {
                        ok = false;
                    }
                }
            }
        }
        if (!ok) continue;
        for (std::size_t e = 0; e < m; ++e)
            if (dir[e] < 0 && !cycles_of[e].empty()) throw InternalError("four-cycles of a component are not edge-connected");
        for (unsigned mask = 0; mask < (1u << free_edges.size()); ++mask) {
            std::vector<bool> fwd(m);
            for (std::size_t e = 0; e < m; ++e) fwd[e] = dir[e] == 1;
            for (std::size_t j = 0; j < free_edges.size(); ++j) fwd[ix(free_edges[j])] = (mask >> j) & 1u;
            Orientation d(pattern, fwd);
            if (!verify_kt(d).is_kt) continue;
            std::vector<Arc> arcs;
            for (const Arc& a : d.arcs())
                arcs.push_back({cc.labeling[ix(a.from - 1)], cc.labeling[ix(a.to - 1)]});
            std::sort(arcs.begin(), arcs.end());
            result.push_back(std::move(arcs));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<ExceptionalEdge> find_exceptional_edges(const FourCycleHypergraph& h,
                                                    const std::vector<ComponentClass>& classes) {
    std::set<Edge> on_cycle;
    for (const auto& c : h.hyperedges)
        for (int i = 0; i < 4; ++i) {
            Vertex a = c[static_cast<std::size_t>(i)], b = c[static_cast<std::size_t>((i + 1) % 4)];
            on_cycle.insert({std::min(a, b), std::max(a, b)});
        }
    std::vector<ExceptionalEdge> out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& cc = classes[ci];
        if (cc.tag != ComponentTag::LadderPlusOneEdge) continue;
        const int k = cc.k;
        Vertex v1 = cc.labeling[0];
        Vertex other = 0;
        if (k % 2 == 1 && cc.extra == LadderExtra::V1Vk) other = cc.labeling[ix(k - 1)];
        if (k % 2 == 0 && cc.extra == LadderExtra::V1Wk) other = cc.labeling[ix(2 * k - 1)];
        if (!other) continue;
        Edge e{std::min(v1, other), std::max(v1, other)};
        if (on_cycle.count(e)) continue;
        out.push_back({e, h.component_of[ix(v1)], k});
    }
    std::sort(out.begin(), out.end(), [](const ExceptionalEdge& a, const ExceptionalEdge& b) { return a.edge < b.edge; });
    return out;
}

ContractedGraph contract_components(const Graph& g_star, const FourCycleHypergraph& h) {
    const std::size_t nc = h.components.size();
    ContractedGraph out;
    out.side_vertex.assign(nc, {0, 0});
    out.side_a.resize(nc);
    out.side_b.resize(nc);

    // Tentative ids: singletons get one vertex, nontrivial components two.
    std::vector<Vertex> image(ix(g_star.vertex_count()) + 1, 0);
    std::vector<ContractedVertex> prov{ContractedVertex{}};
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& comp = h.components[c];
        if (!h.nontrivial(static_cast<int>(c))) {
            prov.push_back({ContractedVertex::Kind::Original, comp[0], static_cast<int>(c), 'A'});
            image[ix(comp[0])] = static_cast<Vertex>(prov.size() - 1);
            continue;
        }
        auto sub = induced_subgraph(g_star, comp);
        auto bp = bipartition(sub.graph);
        if (!bp || !is_connected(sub.graph))
            throw InternalError("component " + std::to_string(c) + " is not connected and bipartite without exceptional edges");
        for (Vertex v : bp->a) out.side_a[c].push_back(sub.new_to_old[ix(v)]);
        for (Vertex v : bp->b) out.side_b[c].push_back(sub.new_to_old[ix(v)]);
        prov.push_back({ContractedVertex::Kind::Side, 0, static_cast<int>(c), 'A'});
        Vertex a = static_cast<Vertex>(prov.size() - 1);
        prov.push_back({ContractedVertex::Kind::Side, 0, static_cast<int>(c), 'B'});
        Vertex b = static_cast<Vertex>(prov.size() - 1);
        out.side_vertex[c] = {a, b};
        for (Vertex v : out.side_a[c]) image[ix(v)] = a;
        for (Vertex v : out.side_b[c]) image[ix(v)] = b;
    }

    const auto tentative = static_cast<Vertex>(prov.size() - 1);
    std::set<Edge> edges;
    for (std::size_t c = 0; c < nc; ++c)
        if (out.side_vertex[c][0]) edges.insert({out.side_vertex[c][0], out.side_vertex[c][1]});
    for (const Edge& e : g_star.edges()) {
        if (h.component_of[ix(e.u)] == h.component_of[ix(e.v)]) continue;
        Vertex x = image[ix(e.u)], y = image[ix(e.v)];
        edges.insert({std::min(x, y), std::max(x, y)});
    }
    std::vector<std::vector<Vertex>> nbrs(ix(tentative) + 1);
    for (const Edge& e : edges) {
        nbrs[ix(e.u)].push_back(e.v);
        nbrs[ix(e.v)].push_back(e.u);
    }
    std::vector<char> drop(ix(tentative) + 1, 0);
    for (std::size_t c = 0; c < nc; ++c) {
        auto [a, b] = out.side_vertex[c];
        if (!a) continue;
        if (nbrs[ix(a)].size() == 1) drop[ix(a)] = 1;
        if (nbrs[ix(b)].size() == 1) drop[ix(b)] = 1;
        if (drop[ix(a)] && drop[ix(b)]) throw InternalError("component with no outside neighbours during contraction");
    }

    std::vector<Vertex> renum(ix(tentative) + 1, 0);
    out.provenance.push_back({});
    for (Vertex v = 1; v <= tentative; ++v) {
        if (drop[ix(v)]) continue;
        out.provenance.push_back(prov[ix(v)]);
        renum[ix(v)] = static_cast<Vertex>(out.provenance.size() - 1);
    }
    for (auto& sv : out.side_vertex)
        for (auto& x : sv) x = x ? renum[ix(x)] : 0;
    std::vector<Edge> kept;
    for (const Edge& e : edges)
        if (renum[ix(e.u)] && renum[ix(e.v)]) kept.push_back({renum[ix(e.u)], renum[ix(e.v)]});
    out.graph = Graph::from_edges(static_cast<Vertex>(out.provenance.size() - 1), std::span<const Edge>(kept));
    return out;
}

namespace {

// Greedy colouring in the reverse of a BFS order from `root` over the
// vertices marked in `allowed`; earlier-fixed colours in `color` are kept.
void greedy_reverse_bfs(const Graph& g, Vertex root, const std::vector<char>& allowed, std::vector<int>& color) {
    std::vector<Vertex> order{root};
    std::vector<char> seen(ix(g.vertex_count()) + 1, 0);
    seen[ix(root)] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : g.neighbors(order[i]))
            if (allowed[ix(w)] && !seen[ix(w)] && !color[ix(w)]) {
                seen[ix(w)] = 1;
                order.push_back(w);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        bool used[5] = {false, false, false, false, false};
        for (Vertex w : g.neighbors(v))
            if (color[ix(w)]) used[color[ix(w)]] = true;
        int c = 1;
        while (c <= 3 && used[c]) ++c;
        if (c > 3) throw InternalError("brooks_three_color: greedy step ran out of colours");
        color[ix(v)] = c;
    }
}

bool connected_without(const Graph& g, const std::vector<Vertex>& comp, Vertex skip1, Vertex skip2) {
    Vertex start = 0;
    for (Vertex v : comp)
        if (v != skip1 && v != skip2) {
            start = v;
            break;
        }
    if (!start) return true;
    std::vector<char> seen(ix(g.vertex_count()) + 1, 0);
    seen[ix(skip1)] = seen[ix(skip2)] = 1;
    seen[ix(start)] = 1;
    std::vector<Vertex> stack{start};
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[ix(w)]) {
                seen[ix(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == comp.size() - 2;
}

void color_component(const Graph& g, const std::vector<Vertex>& comp, std::vector<int>& color) {
    std::vector<char> allowed(ix(g.vertex_count()) + 1, 0);
    for (Vertex v : comp) allowed[ix(v)] = 1;
    for (Vertex v : comp)
        if (g.degree(v) < 3) {
            greedy_reverse_bfs(g, v, allowed, color);
            return;
        }
    if (comp.size() == 4) throw InputError("brooks_three_color: K4 is not 3-colourable");

    // Cubic with a bridge: colour both sides from the bridge ends, then
    // permute one side so the ends differ.
    auto sub = induced_subgraph(g, comp);
    auto br = bridges(sub.graph);
    if (!br.empty()) {
        Vertex x = sub.new_to_old[ix(br[0].u)], y = sub.new_to_old[ix(br[0].v)];
        Edge cut{x, y};
        Graph split = remove_edges(g, std::span<const Edge>(&cut, 1));
        auto labels = component_labels(split);
        std::vector<Vertex> side_x, side_y;
        for (Vertex v : comp) (labels[ix(v)] == labels[ix(x)] ? side_x : side_y).push_back(v);
        std::vector<char> ax(allowed.size(), 0), ay(allowed.size(), 0);
        for (Vertex v : side_x) ax[ix(v)] = 1;
        for (Vertex v : side_y) ay[ix(v)] = 1;
        greedy_reverse_bfs(split, x, ax, color);
        greedy_reverse_bfs(split, y, ay, color);
        if (color[ix(x)] == color[ix(y)]) {
            int from = color[ix(y)], to = from % 3 + 1;
            for (Vertex v : side_y) {
                if (color[ix(v)] == from)
                    color[ix(v)] = to;
                else if (color[ix(v)] == to)
                    color[ix(v)] = from;
            }
        }
        return;
    }

    // 2-connected cubic, not K4: a vertex r with non-adjacent neighbours
    // u, w such that G - u - w stays connected.
    for (Vertex r : comp) {
        auto nb = g.neighbors(r);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex u = nb[i], w = nb[j];
                if (g.adjacent(u, w) || !connected_without(g, comp, u, w)) continue;
                color[ix(u)] = color[ix(w)] = 1;
                allowed[ix(u)] = allowed[ix(w)] = 0;
                greedy_reverse_bfs(g, r, allowed, color);
                return;
            }
    }
    throw InternalError("brooks_three_color: no admissible root in a 2-connected cubic graph");
}

}  // namespace

std::vector<int> brooks_three_color(const Graph& g) {
    if (max_degree(g) > 3) throw InputError("brooks_three_color: maximum degree exceeds 3");
    std::vector<int> color(ix(g.vertex_count()) + 1, 0);
    for (const auto& comp : connected_components(g)) color_component(g, comp, color);
    for (const Edge& e : g.edges())
        if (color[ix(e.u)] == color[ix(e.v)]) throw InternalError("brooks_three_color produced an improper colouring");
    return color;
}

Orientation orient_two_colored_four_cycles(const Graph& g, const std::vector<int>& colors) {
    if (has_triangle(g)) throw InputError("orient_two_colored_four_cycles: graph has a triangle");
    if (colors.size() < ix(g.vertex_count()) + 1) throw InputError("colouring does not cover every vertex");
    for (const auto& c : four_cycles(g)) {
        std::set<int> used;
        for (Vertex v : c) used.insert(colors[ix(v)]);
        if (used.size() != 2) {
            std::ostringstream msg;
            msg << "four-cycle " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << " uses " << used.size()
                << " colours";
            throw InputError(msg.str());
        }
    }
    return orient_by_coloring(g, colors);
}

namespace {

// Orientation of a connected, bridgeless, triangle-free subcubic graph, or
// nullopt when none exists.
std::optional<std::vector<bool>> solve_bridgeless(const Graph& g, CubicTrace::Piece* piece) {
    auto h = four_cycle_hypergraph(g);
    const int nc = static_cast<int>(h.components.size());
    std::vector<ComponentClass> classes(h.components.size());
    for (int c = 0; c < nc; ++c)
        if (h.nontrivial(c)) classes[static_cast<std::size_t>(c)] = classify_component(h, c);
    if (piece) {
        piece->hyperedges = static_cast<int>(h.hyperedges.size());
        piece->components = nc;
        for (int c = 0; c < nc; ++c)
            piece->classes.push_back({h.nontrivial(c) ? classes[static_cast<std::size_t>(c)].name() : "vertex",
                                      h.components[static_cast<std::size_t>(c)]});
    }

    if (nc <= 4) {
        if (piece) piece->method = "brute-force";
        std::vector<std::vector<std::vector<Arc>>> choices;
        for (int c = 0; c < nc; ++c) {
            if (!h.nontrivial(c)) continue;
            auto list = component_kt_orientations(classes[static_cast<std::size_t>(c)]);
            if (list.empty()) return std::nullopt;
            choices.push_back(std::move(list));
        }
        std::vector<Edge> cross;
        for (const Edge& e : g.edges())
            if (h.component_of[ix(e.u)] != h.component_of[ix(e.v)]) cross.push_back(e);
        if (cross.size() > 8)
            throw InternalError("brute-force case has " + std::to_string(cross.size()) + " edges between components");

        // Depth-first over component choices, then cross-edge directions;
        // partial digraphs that already fail cannot be completed.
        std::vector<Arc> arcs;
        std::function<bool(std::size_t)> go = [&](std::size_t depth) -> bool {
            if (!verify_kt(Orientation::from_arcs(g.vertex_count(), arcs)).is_kt) return false;
            if (depth == choices.size() + cross.size()) return true;
            if (depth < choices.size()) {
                for (const auto& option : choices[depth]) {
                    arcs.insert(arcs.end(), option.begin(), option.end());
                    if (go(depth + 1)) return true;
                    arcs.resize(arcs.size() - option.size());
                }
                return false;
            }
            const Edge& e = cross[depth - choices.size()];
            for (Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
                arcs.push_back(a);
                if (go(depth + 1)) return true;
                arcs.pop_back();
            }
            return false;
        };
        if (!go(0)) return std::nullopt;
        std::vector<bool> fwd(ix(g.edge_count()));
        for (const Arc& a : arcs) fwd[ix(*g.edge_id(a.from, a.to))] = a.from < a.to;
        return fwd;
    }

    if (piece) piece->method = "contraction";
    for (int c = 0; c < nc; ++c) {
        auto tag = classes[static_cast<std::size_t>(c)].tag;
        if (h.nontrivial(c) && (tag == ComponentTag::Cube || tag == ComponentTag::K33 || tag == ComponentTag::LadderPlusTwoEdges))
            throw InternalError("all-degree-3 component " + classes[static_cast<std::size_t>(c)].name() +
                                " alongside other components");
    }
    auto exceptional = find_exceptional_edges(h, classes);
    std::vector<Edge> exc_edges;
    for (const auto& x : exceptional) exc_edges.push_back(x.edge);
    if (piece) piece->exceptional = exc_edges;
    Graph g_star = remove_edges(g, exc_edges);

    auto contracted = contract_components(g_star, h);
    if (max_degree(contracted.graph) > 3) throw InternalError("contracted graph has a vertex of degree above 3");
    if (contracted.graph.vertex_count() <= 4) throw InternalError("contracted graph has at most four vertices");
    if (!is_connected(contracted.graph)) throw InternalError("contracted graph is disconnected");
    auto f = brooks_three_color(contracted.graph);

    std::vector<int> lifted(ix(g.vertex_count()) + 1, 0);
    for (Vertex x = 1; x <= contracted.graph.vertex_count(); ++x) {
        const auto& p = contracted.provenance[ix(x)];
        if (p.kind == ContractedVertex::Kind::Original) lifted[ix(p.original)] = f[ix(x)];
    }
    for (std::size_t c = 0; c < h.components.size(); ++c) {
        if (!h.nontrivial(static_cast<int>(c))) continue;
        auto [a, b] = contracted.side_vertex[c];
        int ca = a ? f[ix(a)] : 0, cb = b ? f[ix(b)] : 0;
        if (!ca) ca = cb == 1 ? 2 : 1;
        if (!cb) cb = ca == 1 ? 2 : 1;
        for (Vertex v : contracted.side_a[c]) lifted[ix(v)] = ca;
        for (Vertex v : contracted.side_b[c]) lifted[ix(v)] = cb;
    }

    Orientation base;
    try {
        base = orient_two_colored_four_cycles(g_star, lifted);
    } catch (const InputError& e) {
        throw InternalError(std::string("lifted colouring rejected: ") + e.what());
    }
    std::vector<bool> fwd(ix(g.edge_count()), true);  // exceptional edges: low id -> high id
    for (EdgeId e = 0; e < g_star.edge_count(); ++e) {
        const Edge& ed = g_star.edge(e);
        fwd[ix(*g.edge_id(ed.u, ed.v))] = base.forward(e);
    }
    return fwd;
}

}  // namespace

SolveOutcome solve_cubic(const Graph& g, CubicTrace* trace) {
    if (max_degree(g) > 3) throw InputError("solve_cubic: maximum degree exceeds 3");
    SolveOutcome out;
    if (has_triangle(g)) return out;

    // A bridge lies on no cycle, so it never closes a second path; the
    // pieces left after deleting every bridge are solved independently.
    auto br = bridges(g);
    if (trace) trace->bridges = br;
    Graph pieces = remove_edges(g, br);
    std::vector<bool> fwd(ix(g.edge_count()), true);
    for (const auto& comp : connected_components(pieces)) {
        if (comp.size() < 2) continue;
        auto sub = induced_subgraph(pieces, comp);
        CubicTrace::Piece* piece = nullptr;
        if (trace) {
            trace->pieces.push_back({});
            piece = &trace->pieces.back();
            piece->vertices = comp;
        }
        auto local = solve_bridgeless(sub.graph, piece);
        if (!local) return out;
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
            const Edge& ed = sub.graph.edge(e);
            fwd[ix(*g.edge_id(sub.new_to_old[ix(ed.u)], sub.new_to_old[ix(ed.v)]))] = (*local)[ix(e)];
        }
    }
    out.orientation = Orientation(std::make_shared<const Graph>(g), std::move(fwd));
    auto check = verify_kt(out.orientation);
    if (!check.is_kt) throw InternalError("solve_cubic produced a non-KT orientation");
    out.status = SolveStatus::Found;
    return out;
}

std::string format_trace(const CubicTrace& trace) {
    std::ostringstream out;
    out << "bridges:";
    for (const Edge& e : trace.bridges) out << ' ' << e.u << '-' << e.v;
    out << '\n';
    for (std::size_t p = 0; p < trace.pieces.size(); ++p) {
        const auto& piece = trace.pieces[p];
        out << "piece " << p + 1 << ": " << piece.vertices.size() << " vertices, " << piece.hyperedges
            << " four-cycles, " << piece.components << " components, " << (piece.method.empty() ? "none" : piece.method)
            << '\n';
        for (std::size_t c = 0; c < piece.classes.size(); ++c) {
            if (piece.classes[c].first == "vertex") continue;
            out << "  component " << c << "  " << piece.classes[c].first << "  {";
            for (std::size_t i = 0; i < piece.classes[c].second.size(); ++i)
                out << (i ? " " : "") << piece.vertices[ix(piece.classes[c].second[i] - 1)];
            out << "}\n";
        }
        for (const Edge& e : piece.exceptional)
            out << "  exceptional " << piece.vertices[ix(e.u - 1)] << '-' << piece.vertices[ix(e.v - 1)] << '\n';
    }
    return out.str();
}

}  // namespace kt
