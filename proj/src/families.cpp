#include "kt/families.hpp"

#include <cmath>

namespace kt {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

Rational f_sequence(int k) {
    if (k < 1 || k > kMaxExactF)
        throw InputError("f_sequence: k must lie in 1.." + std::to_string(kMaxExactF) + ", got " + std::to_string(k));
    Rational f = 1;
    for (int i = 1; i < k; ++i) f += 1 / f;
    return f;
}

double f_sequence_approx(int k) {
    if (k < 1) throw InputError("f_sequence_approx: k must be positive");
    double f = 1.0;
    for (int i = 1; i < k; ++i) f += 1.0 / f;
    return f;
}

Graph gen_ladder(int k) {
    if (k < 1) throw InputError("gen_ladder: k must be positive");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= k; ++i) {
        e.push_back({i, k + i});
        if (i < k) {
            e.push_back({i, i + 1});
            e.push_back({k + i, k + i + 1});
        }
    }
    return Graph::from_edges(2 * k, e);
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("gen_cycle: n must be at least 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= n; ++i) e.push_back({i, i % n + 1});
    return Graph::from_edges(n, e);
}

std::vector<std::string> named_graphs() {
    return {"cube", "cubeMinusEdge", "cubeMinusVertex", "k23", "k33", "k33e", "k4", "petersen", "prism", "cycleN"};
}

Graph gen_named(const std::string& name) {
    const std::vector<std::pair<Vertex, Vertex>> cube_core{{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5},
                                                           {2, 6}, {4, 6}, {3, 7}, {4, 7}};
    if (name == "cubeMinusVertex") return Graph::from_edges(7, cube_core);
    if (name == "cubeMinusEdge" || name == "cube") {
        auto e = cube_core;
        e.push_back({5, 8});
        e.push_back({6, 8});
        if (name == "cube") e.push_back({7, 8});
        return Graph::from_edges(8, e);
    }
    if (name == "k23") return Graph::from_edges(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (name == "k33" || name == "k33e") {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex x = 1; x <= 3; ++x)
            for (Vertex y = 4; y <= 6; ++y)
                if (!(name == "k33e" && x == 3 && y == 6)) e.push_back({x, y});
        return Graph::from_edges(6, e);
    }
    if (name == "k4") return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    if (name == "petersen") {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex i = 1; i <= 5; ++i) {
            e.push_back({i, i % 5 + 1});
            e.push_back({i, i + 5});
            e.push_back({i + 5, (i + 1) % 5 + 6});
        }
        return Graph::from_edges(10, e);
    }
    if (name == "prism") return Graph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}});
    if (name.size() > 5 && name.rfind("cycle", 0) == 0) {
        const std::string digits = name.substr(5);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 7)
            return gen_cycle(std::stoi(digits));
    }
    throw InputError("unknown graph name '" + name + "'");
}

std::vector<std::int64_t> canonical_d_sequence(int k) {
    std::vector<std::int64_t> d;
    std::int64_t n = 1, a = 1;
    for (int j = 1; j < k; ++j) {
        d.push_back(n - a);
        std::int64_t next_n = n * n + a * a;
        a = n * a;
        n = next_n;
        if (n > kMaxGeneratedVertices) break;  // gen_copycut reports the overflow
    }
    return d;
}

CopycutFamily gen_copycut(int k, const std::vector<std::int64_t>& d) {
    if (k < 1) throw InputError("gen_copycut: k must be positive");
    std::vector<std::int64_t> dseq = d.empty() ? canonical_d_sequence(k) : d;
    if (static_cast<int>(dseq.size()) < k - 1)
        throw InputError("gen_copycut: need " + std::to_string(k - 1) + " d values, got " + std::to_string(dseq.size()));
    dseq.resize(static_cast<std::size_t>(k - 1));

    CopycutFamily fam;
    fam.k = 1;
    fam.orientation = Orientation::from_arcs(1, {});
    fam.graph = fam.orientation.graph();
    fam.branch = {1};

    for (int j = 1; j < k; ++j) {
        const std::int64_t dj = dseq[static_cast<std::size_t>(j - 1)];
        const Vertex n = fam.graph.vertex_count();
        const auto a = static_cast<Vertex>(fam.branch.size());
        const Vertex inner = n - a;
        if (dj < 0) throw InputError("gen_copycut: negative d value");
        if (dj == 0 && inner > 0)
            throw InputError("gen_copycut: d_" + std::to_string(j) + " = 0 would drop every inner vertex of G_" +
                             std::to_string(j));
        const __int128 next = static_cast<__int128>(dj) * inner + static_cast<__int128>(2) * n * a;
        if (next > kMaxGeneratedVertices)
            throw InputError("gen_copycut: G_" + std::to_string(j + 1) + " would exceed " +
                             std::to_string(kMaxGeneratedVertices) + " vertices");

        std::vector<char> is_branch(ix(n) + 1, 0);
        for (Vertex b : fam.branch) is_branch[ix(b)] = 1;
        std::int64_t inner_edges = 0;
        for (const Edge& e : fam.graph.edges()) inner_edges += !is_branch[ix(e.u)] && !is_branch[ix(e.v)];
        const __int128 m = fam.graph.edge_count();
        const __int128 next_m = static_cast<__int128>(dj) * inner_edges + static_cast<__int128>(dj) * (m - inner_edges) * n +
                                static_cast<__int128>(a) * m + static_cast<__int128>(a) * n;
        if (next_m > kMaxGeneratedEdges)
            throw InputError("gen_copycut: G_" + std::to_string(j + 1) + " would exceed " +
                             std::to_string(kMaxGeneratedEdges) + " edges");
        std::vector<Vertex> branch_index(ix(n) + 1, -1);
        for (Vertex r = 0; r < a; ++r) branch_index[ix(fam.branch[ix(r)])] = r;

        Vertex next_id = 0;
        const auto copies = static_cast<std::size_t>(dj);
        // star[t * (n + 1) + x]: inner vertex x of glued copy t.
        std::vector<Vertex> star(copies * (ix(n) + 1), 0);
        for (std::size_t t = 0; t < copies; ++t)
            for (Vertex x = 1; x <= n; ++x)
                if (!is_branch[ix(x)]) star[t * (ix(n) + 1) + ix(x)] = ++next_id;
        std::vector<Vertex> twin_base(ix(a)), fresh_base(ix(a));
        for (Vertex r = 0; r < a; ++r) {
            twin_base[ix(r)] = next_id;  // twins are twin_base + 1 .. twin_base + n
            next_id += n;
            fresh_base[ix(r)] = next_id;  // fresh copy of x is fresh_base + x
            next_id += n;
        }

        std::vector<Arc> arcs;
        const auto old_arcs = fam.orientation.arcs();
        for (std::size_t t = 0; t < copies; ++t) {
            const Vertex* s = star.data() + t * (ix(n) + 1);
            for (const Arc& arc : old_arcs) {
                if (is_branch[ix(arc.to)]) throw InternalError("gen_copycut: branch vertex with an in-arc");
                if (is_branch[ix(arc.from)]) {
                    Vertex base = twin_base[ix(branch_index[ix(arc.from)])];
                    for (Vertex i = 1; i <= n; ++i) arcs.push_back({base + i, s[arc.to]});
                } else {
                    arcs.push_back({s[arc.from], s[arc.to]});
                }
            }
        }
        for (Vertex r = 0; r < a; ++r) {
            const Vertex f = fresh_base[ix(r)];
            for (const Arc& arc : old_arcs) arcs.push_back({f + arc.from, f + arc.to});
            for (Vertex i = 1; i <= n; ++i) arcs.push_back({twin_base[ix(r)] + i, f + i});
        }

        fam.branch.clear();
        for (Vertex r = 0; r < a; ++r)
            for (Vertex i = 1; i <= n; ++i) fam.branch.push_back(twin_base[ix(r)] + i);
        fam.orientation = Orientation::from_arcs(next_id, arcs);
        fam.graph = fam.orientation.graph();
        fam.n = next_id;
        fam.alpha = static_cast<std::int64_t>(fam.branch.size());
        fam.k = j + 1;
    }
    fam.d_seq = std::move(dseq);
    return fam;
}

TwincutFamily gen_twincut(int k) {
    if (k < 1) throw InputError("gen_twincut: k must be positive");
    auto fam = gen_copycut(k, std::vector<std::int64_t>(static_cast<std::size_t>(k - 1), 1));
    return {fam.k, std::move(fam.graph), std::move(fam.branch)};
}

}  // namespace kt
