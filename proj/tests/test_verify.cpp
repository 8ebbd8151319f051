#include <doctest.h>

#include <random>

#include "kt/families.hpp"
#include "kt/verify.hpp"
#include "oracles.hpp"

using namespace kt;

namespace {

Orientation arcs(Vertex n, std::vector<Arc> a) { return Orientation::from_arcs(n, a); }

}  // namespace

TEST_CASE("acyclicity") {
    auto tri = check_acyclic(arcs(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK_FALSE(tri.acyclic);
    CHECK(tri.cycle == std::vector<Vertex>{1, 2, 3});

    auto one = check_acyclic(arcs(2, {{1, 2}}));
    CHECK(one.acyclic);
    CHECK(one.order == std::vector<Vertex>{1, 2});

    CHECK(is_acyclic(arcs(4, {{1, 2}, {3, 2}, {3, 4}, {1, 4}})));
}

TEST_CASE("verify_kt on small examples") {
    auto bad = verify_kt(arcs(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK_FALSE(bad.is_kt);
    REQUIRE(bad.witness);
    CHECK(bad.witness->kind == Witness::Kind::TwoPaths);
    CHECK(bad.witness->u == 1);
    CHECK(bad.witness->v == 4);
    CHECK(bad.witness->path_a == std::vector<Vertex>{1, 4});
    CHECK(bad.witness->path_b == std::vector<Vertex>{1, 2, 3, 4});

    CHECK(verify_kt(arcs(4, {{1, 2}, {3, 2}, {3, 4}, {1, 4}})).is_kt);

    // 5-ladder, v_i -> w_i iff i odd (v_i = i, w_i = 5 + i), bipartite chain.
    auto g = gen_ladder(5);
    auto bp = bipartition(g);
    REQUIRE(bp);
    std::vector<int> color(11, 0);
    for (Vertex v : bp->a) color[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : bp->b) color[static_cast<std::size_t>(v)] = 2;
    std::vector<bool> fwd;
    for (const Edge& e : g.edges()) fwd.push_back(color[static_cast<std::size_t>(e.u)] < color[static_cast<std::size_t>(e.v)]);
    Orientation chain(std::make_shared<const Graph>(g), fwd);
    for (Vertex i = 1; i <= 5; ++i) CHECK(chain.has_arc(i, 5 + i) == (i % 2 == 1));
    CHECK(verify_kt(chain).is_kt);

    auto k3 = Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        auto r = verify_kt(Orientation::from_arcs(3, oracle::arcs_of({{1, 2}, {1, 3}, {2, 3}}, mask)));
        CHECK_FALSE(r.is_kt);
    }
    (void)k3;
}

TEST_CASE("verify_kt agrees with path enumeration on all small connected graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& e : oracle::connected_graphs_up_to_iso(n))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
                auto a = oracle::arcs_of(e, mask);
                auto d = Orientation::from_arcs(n, a);
                auto r = verify_kt(d);
                REQUIRE(r.is_kt == oracle::is_kt_by_paths(n, a));
                if (!r.is_kt) REQUIRE(witness_replays(d, *r.witness));
            }
}

TEST_CASE("witnesses replay and are minimal") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        int n = 3 + static_cast<int>(rng() % 8);
        auto e = oracle::normalized(oracle::random_graph(rng, n, 0.4));
        if (e.empty()) continue;
        auto d = Orientation::from_arcs(n, oracle::arcs_of(e, rng()));
        auto r = verify_kt(d);
        if (r.is_kt) continue;
        const Witness& w = *r.witness;
        CHECK(witness_replays(d, w));
        if (w.kind == Witness::Kind::TwoPaths) {
            CHECK(w.path_a != w.path_b);
            CHECK(w.path_a.front() == w.u);
            CHECK(w.path_b.back() == w.v);
            // The union is an induced cycle: no chord between its vertices.
            std::vector<Vertex> cyc(w.path_a.begin(), w.path_a.end());
            cyc.insert(cyc.end(), w.path_b.begin() + 1, w.path_b.end() - 1);
            const auto& g = d.graph();
            int inside = 0;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                for (std::size_t j = i + 1; j < cyc.size(); ++j) inside += g.adjacent(cyc[i], cyc[j]);
            CHECK(inside == static_cast<int>(cyc.size()));
        } else {
            for (std::size_t i = 0; i < w.cycle.size(); ++i)
                CHECK(d.has_arc(w.cycle[i], w.cycle[(i + 1) % w.cycle.size()]));
        }
    }
}

TEST_CASE("reversal and induced sub-orientations preserve KT") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 300; ++t) {
        int n = 4 + static_cast<int>(rng() % 6);
        auto e = oracle::normalized(oracle::random_graph(rng, n, 0.35));
        auto d = Orientation::from_arcs(n, oracle::arcs_of(e, rng()));
        bool kt = verify_kt(d).is_kt;
        CHECK(verify_kt(reverse(d)).is_kt == kt);
        if (!kt) continue;
        std::vector<Vertex> keep;
        for (Vertex v = 1; v <= n; ++v)
            if (rng() % 2) keep.push_back(v);
        CHECK(verify_kt(induced_orientation(d, keep)).is_kt);
    }
}

TEST_CASE("simplify_source_sink") {
    auto c4 = simplify_source_sink(arcs(4, {{1, 2}, {3, 2}, {3, 4}, {1, 4}}));
    CHECK(c4.reduced.vertex_count() == 0);
    CHECK(c4.removed.size() == 4);

    CHECK(simplify_source_sink(arcs(2, {{1, 2}})).reduced.vertex_count() == 0);

    auto path = simplify_source_sink(arcs(3, {{1, 2}, {2, 3}}));
    CHECK(path.reduced.vertex_count() == 3);
    CHECK(path.removed.empty());

    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
        int n = 3 + static_cast<int>(rng() % 8);
        auto e = oracle::normalized(oracle::random_graph(rng, n, 0.3));
        auto d = Orientation::from_arcs(n, oracle::arcs_of(e, rng()));
        CHECK(verify_kt(simplify_source_sink(d).reduced).is_kt == verify_kt(d).is_kt);
    }
}

TEST_CASE("cycle orientations: KT iff at least four sources or sinks") {
    for (int n = 3; n <= 8; ++n) {
        auto g = gen_cycle(n);
        oracle::Pairs e;
        for (const Edge& ed : g.edges()) e.push_back({ed.u, ed.v});
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
            auto d = Orientation::from_arcs(n, oracle::arcs_of(e, mask));
            auto in = d.in_degrees(), out = d.out_degrees();
            int extreme = 0;
            for (Vertex v = 1; v <= n; ++v) extreme += in[static_cast<std::size_t>(v)] == 0 || out[static_cast<std::size_t>(v)] == 0;
            CHECK(verify_kt(d).is_kt == (extreme >= 4));
        }
    }
}
