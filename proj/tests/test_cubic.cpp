#include <doctest.h>

#include <random>
#include <set>

#include "cubic_corpus.hpp"
#include "kt/cubic.hpp"
#include "kt/families.hpp"
#include "kt/solve.hpp"
#include "kt/verify.hpp"
#include "oracles.hpp"

using namespace kt;

namespace {

ComponentClass only_class(const Graph& g) {
    auto h = four_cycle_hypergraph(g);
    for (int c = 0; c < static_cast<int>(h.components.size()); ++c)
        if (h.nontrivial(c)) return classify_component(h, c);
    FAIL("no nontrivial component");
    return {};
}

}  // namespace

TEST_CASE("four_cycle_hypergraph") {
    auto c4 = four_cycle_hypergraph(gen_cycle(4));
    CHECK(c4.hyperedges.size() == 1);
    CHECK(c4.components.size() == 1);

    auto l3 = four_cycle_hypergraph(gen_ladder(3));
    REQUIRE(l3.hyperedges.size() == 2);
    std::set<Vertex> a(l3.hyperedges[0].begin(), l3.hyperedges[0].end());
    int shared = 0;
    for (Vertex v : l3.hyperedges[1]) shared += a.count(v) > 0;
    CHECK(shared == 2);
    CHECK(l3.components.size() == 1);

    auto c5 = four_cycle_hypergraph(gen_cycle(5));
    CHECK(c5.hyperedges.empty());
    CHECK(c5.components.size() == 5);

    CHECK_THROWS_AS(four_cycle_hypergraph(gen_named("prism")), InputError);
    CHECK_THROWS_AS(four_cycle_hypergraph(Graph::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})), InputError);
}

TEST_CASE("classify_component on named shapes") {
    CHECK(only_class(gen_named("cube")).tag == ComponentTag::Cube);
    CHECK(only_class(gen_named("k23")).tag == ComponentTag::K23);
    CHECK(only_class(gen_named("k33")).tag == ComponentTag::K33);
    CHECK(only_class(gen_named("k33e")).tag == ComponentTag::K33MinusEdge);
    CHECK(only_class(gen_named("cubeMinusVertex")).tag == ComponentTag::CubeMinusVertex);
    CHECK(only_class(gen_named("cubeMinusEdge")).tag == ComponentTag::CubeMinusEdge);
    auto c4 = only_class(gen_cycle(4));
    CHECK(c4.tag == ComponentTag::Ladder);
    CHECK(c4.k == 2);
    for (int k = 2; k <= 7; ++k) {
        auto cc = only_class(gen_ladder(k));
        CHECK(cc.tag == ComponentTag::Ladder);
        CHECK(cc.k == k);
    }
    auto one = only_class(corpus::ladder_plus(4, {{1, 8}}));
    CHECK(one.tag == ComponentTag::LadderPlusOneEdge);
    CHECK(one.extra == LadderExtra::V1Wk);
    auto one_w = only_class(corpus::ladder_plus(5, {{6, 10}}));
    CHECK(one_w.tag == ComponentTag::LadderPlusOneEdge);
    CHECK(one_w.extra == LadderExtra::V1Vk);
    auto rails = only_class(corpus::ladder_plus(5, {{1, 5}, {6, 10}}));
    CHECK(rails.tag == ComponentTag::LadderPlusTwoEdges);
    CHECK(rails.extra == LadderExtra::Rails);
    auto cross = only_class(corpus::ladder_plus(5, {{1, 10}, {6, 5}}));
    CHECK(cross.tag == ComponentTag::LadderPlusTwoEdges);
    CHECK(cross.extra == LadderExtra::Cross);
}

TEST_CASE("labelings replay and component orientations match the oracle") {
    for (const auto& [name, g] : corpus::curated_subcubic()) {
        if (has_triangle(g)) continue;
        auto h = four_cycle_hypergraph(g);
        for (int c = 0; c < static_cast<int>(h.components.size()); ++c) {
            if (!h.nontrivial(c)) continue;
            INFO(name);
            auto cc = classify_component(h, c);
            CHECK(labeling_replays(g, cc));
            auto list = component_kt_orientations(cc);
            CHECK(list.size() <= 8);
            auto sub = induced_subgraph(g, h.components[static_cast<std::size_t>(c)]);
            CHECK(list.size() == count_kt_orientations(sub.graph));
            for (const auto& arcs : list) CHECK(verify_kt(Orientation::from_arcs(g.vertex_count(), arcs)).is_kt);
        }
    }
    CHECK(component_kt_orientations(only_class(gen_ladder(5))).size() == 2);
    CHECK(component_kt_orientations(only_class(gen_cycle(4))).size() == 2);
}

TEST_CASE("exceptional edges") {
    auto check = [](const Graph& g) {
        auto h = four_cycle_hypergraph(g);
        std::vector<ComponentClass> classes(h.components.size());
        for (int c = 0; c < static_cast<int>(h.components.size()); ++c)
            if (h.nontrivial(c)) classes[static_cast<std::size_t>(c)] = classify_component(h, c);
        return find_exceptional_edges(h, classes);
    };
    auto four = check(corpus::ladder_plus(4, {{1, 8}}));
    REQUIRE(four.size() == 1);
    CHECK(four[0].edge == Edge{1, 8});
    CHECK(four[0].ladder_length == 4);
    CHECK(check(corpus::ladder_plus(3, {{1, 6}})).empty());
    CHECK(check(gen_ladder(5)).empty());
    auto five = check(corpus::ladder_plus(5, {{1, 5}}));
    REQUIRE(five.size() == 1);
    CHECK(five[0].edge == Edge{1, 5});
    CHECK(check(corpus::ladder_plus(5, {{1, 10}})).empty());
}

TEST_CASE("hypergraph structure on random triangle-free subcubic graphs") {
    std::mt19937_64 rng(41);
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 300; ++t) {
        int n = 4 + static_cast<int>(rng() % 13);
        auto e = t % 2 ? oracle::random_subcubic(rng, n, 3 * n) : corpus::random_composite(rng, 16);
        int nv = 0;
        for (auto [u, v] : e) nv = std::max({nv, u, v});
        if (nv == 0 || oracle::has_triangle(nv, e) || !oracle::connected(nv, e)) continue;
        ++seen;
        auto g = Graph::from_edges(nv, e);
        auto h = four_cycle_hypergraph(g);
        for (std::size_t i = 0; i < h.hyperedges.size(); ++i)
            for (std::size_t j = i + 1; j < h.hyperedges.size(); ++j) {
                std::set<Vertex> a(h.hyperedges[i].begin(), h.hyperedges[i].end());
                int shared = 0;
                for (Vertex v : h.hyperedges[j]) shared += a.count(v) > 0;
                CHECK((shared == 0 || shared == 2 || shared == 3));
            }
        for (int c = 0; c < static_cast<int>(h.components.size()); ++c) {
            if (!h.nontrivial(c)) continue;
            auto cc = classify_component(h, c);
            CHECK(labeling_replays(g, cc));
            if (cc.tag == ComponentTag::Cube || cc.tag == ComponentTag::K33 || cc.tag == ComponentTag::LadderPlusTwoEdges)
                CHECK(h.components.size() == 1);
        }
    }
    CHECK(seen == 300);
}

TEST_CASE("brooks_three_color") {
    CHECK(brooks_three_color(gen_cycle(4)) == std::vector<int>{0, 1, 2, 1, 2});
    CHECK_THROWS_AS(brooks_three_color(gen_named("k4")), InputError);
    for (const char* name : {"petersen", "cube", "k33", "prism", "cubeMinusEdge"}) {
        auto g = gen_named(name);
        auto col = brooks_three_color(g);
        for (const Edge& e : g.edges()) CHECK(col[static_cast<std::size_t>(e.u)] != col[static_cast<std::size_t>(e.v)]);
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            CHECK(col[static_cast<std::size_t>(v)] >= 1);
            CHECK(col[static_cast<std::size_t>(v)] <= 3);
        }
    }
    // Random cubic graphs by the pairing model, including ones with bridges.
    std::mt19937_64 rng(43);
    int cubic = 0;
    for (int t = 0; t < 3000 && cubic < 200; ++t) {
        int n = 2 * (3 + static_cast<int>(rng() % 7));
        std::vector<int> points;
        for (int v = 1; v <= n; ++v)
            for (int i = 0; i < 3; ++i) points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        oracle::Pairs e;
        for (std::size_t i = 0; i < points.size(); i += 2) e.push_back({points[i], points[i + 1]});
        auto norm = oracle::normalized(e);
        bool simple = norm.size() == e.size();
        for (auto [a, b] : norm) simple = simple && a != b;
        if (!simple) continue;
        auto g = Graph::from_edges(n, norm);
        bool k4_part = false;
        for (const auto& comp : connected_components(g)) k4_part = k4_part || comp.size() == 4;
        if (k4_part) continue;
        ++cubic;
        auto col = brooks_three_color(g);
        for (const Edge& ed : g.edges()) CHECK(col[static_cast<std::size_t>(ed.u)] != col[static_cast<std::size_t>(ed.v)]);
    }
    CHECK(cubic == 200);
    // K4 with one edge subdivided, twice, joined at the subdivision vertices.
    auto bridged = Graph::from_edges(10, {{1, 5}, {2, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {6, 10}, {7, 10},
                                          {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}, {5, 10}});
    REQUIRE(bridges(bridged) == std::vector<Edge>{{5, 10}});
    REQUIRE(max_degree(bridged) == 3);
    auto col = brooks_three_color(bridged);
    for (const Edge& ed : bridged.edges()) CHECK(col[static_cast<std::size_t>(ed.u)] != col[static_cast<std::size_t>(ed.v)]);
}

TEST_CASE("orient_two_colored_four_cycles") {
    auto c4 = orient_two_colored_four_cycles(gen_cycle(4), {0, 1, 2, 1, 2});
    CHECK(verify_kt(c4).is_kt);
    CHECK(c4.arcs() == std::vector<Arc>{{1, 2}, {1, 4}, {3, 2}, {3, 4}});

    auto l3 = orient_two_colored_four_cycles(gen_ladder(3), {0, 1, 2, 1, 2, 1, 2});
    for (Vertex i = 1; i <= 3; ++i) CHECK(l3.has_arc(i, 3 + i) == (i % 2 == 1));
    CHECK(verify_kt(l3).is_kt);

    CHECK_THROWS_AS(orient_two_colored_four_cycles(gen_cycle(4), {0, 1, 2, 1, 3}), InputError);
    CHECK_THROWS_AS(orient_two_colored_four_cycles(gen_named("prism"), {0, 1, 2, 3, 2, 3, 1}), InputError);
}

TEST_CASE("solve_cubic examples") {
    CHECK(solve_cubic(gen_cycle(3)).status == SolveStatus::None);
    CHECK(solve_cubic(gen_named("k4")).status == SolveStatus::None);
    for (const char* name : {"petersen", "cube"}) {
        auto out = solve_cubic(gen_named(name));
        REQUIRE(out.status == SolveStatus::Found);
        CHECK(verify_kt(out.orientation).is_kt);
    }
    CHECK_THROWS_AS(solve_cubic(Graph::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})), InputError);
}

TEST_CASE("solve_cubic agrees with solve_exact") {
    for (const auto& [name, g] : corpus::curated_subcubic()) {
        INFO(name);
        auto fast = solve_cubic(g);
        auto slow = solve_exact(g);
        CHECK(fast.status == slow.status);
        if (fast.status == SolveStatus::Found) CHECK(verify_kt(fast.orientation).is_kt);
    }
    std::mt19937_64 rng(47);
    for (int t = 0; t < 400; ++t) {
        int n = 2 + static_cast<int>(rng() % 13);
        auto e = t % 2 ? oracle::random_subcubic(rng, n, static_cast<int>(rng() % (2 * n + 1)))
                       : corpus::random_composite(rng, 14);
        int nv = 0;
        for (auto [u, v] : e) nv = std::max({nv, u, v});
        auto g = Graph::from_edges(nv, e);
        INFO(t);
        auto fast = solve_cubic(g);
        auto slow = solve_exact(g);
        CHECK(fast.status == slow.status);
        if (fast.status == SolveStatus::Found) CHECK(verify_kt(fast.orientation).is_kt);
    }
}

TEST_CASE("explain trace") {
    CubicTrace trace;
    auto out = solve_cubic(corpus::ladder_plus(4, {{1, 8}}), &trace);
    CHECK(out.status == SolveStatus::Found);
    auto text = format_trace(trace);
    CHECK(text.find("ladder(4)+v1wk") != std::string::npos);
}
