#include <doctest.h>

#include <random>

#include "kt/families.hpp"
#include "kt/solve.hpp"
#include "kt/verify.hpp"
#include "oracles.hpp"

using namespace kt;

TEST_CASE("solve_exact examples") {
    CHECK(solve_exact(Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}})).status == SolveStatus::None);
    for (const Graph& g : {gen_cycle(5), gen_ladder(4), gen_named("cube")}) {
        auto out = solve_exact(g);
        REQUIRE(out.status == SolveStatus::Found);
        CHECK(out.orientation.graph() == g);
        CHECK(verify_kt(out.orientation).is_kt);
    }
    CHECK(solve_exact(gen_named("k4")).status == SolveStatus::None);
    CHECK(solve_exact(Graph::from_edges(0, {})).status == SolveStatus::Found);
}

TEST_CASE("solve_exact respects the budget") {
    SolveOptions opts;
    opts.budget = 1;
    opts.lookahead = false;
    auto out = solve_exact(gen_named("petersen"), opts);
    CHECK(out.status == SolveStatus::BudgetExceeded);
}

TEST_CASE("count_kt_orientations") {
    CHECK(count_kt_orientations(gen_cycle(4)) == 2);
    CHECK(count_kt_orientations(gen_cycle(5)) == 10);
    CHECK(count_kt_orientations(Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}})) == 0);
    for (int k = 1; k <= 6; ++k) CHECK(count_kt_orientations(gen_ladder(k)) == 2);
    std::vector<std::pair<Vertex, Vertex>> many;
    for (Vertex i = 1; i <= 25; ++i) many.push_back({i, i + 1});
    CHECK_THROWS_AS(count_kt_orientations(Graph::from_edges(26, many)), InputError);
}

TEST_CASE("solve_exact verdict matches exhaustive counting") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& e : oracle::connected_graphs_up_to_iso(n)) {
            auto g = Graph::from_edges(n, e);
            auto out = solve_exact(g);
            REQUIRE(out.status != SolveStatus::BudgetExceeded);
            CHECK((out.status == SolveStatus::Found) == (count_kt_orientations(g) > 0));
            if (out.status == SolveStatus::Found) CHECK(verify_kt(out.orientation).is_kt);
        }
    std::mt19937_64 rng(29);
    for (int t = 0; t < 500; ++t) {
        int n = 7 + t % 3;
        oracle::Pairs e;
        do e = oracle::random_graph(rng, n, 0.3);
        while (e.size() > 14);
        auto g = Graph::from_edges(n, e);
        auto out = solve_exact(g);
        CHECK((out.status == SolveStatus::Found) == (count_kt_orientations(g) > 0));
    }
}

TEST_CASE("propagation rules never change the verdict") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        int n = 5 + t % 5;
        auto g = Graph::from_edges(n, oracle::random_graph(rng, n, 0.4));
        const auto expect = solve_exact(g).status;
        for (int mask = 0; mask < 16; ++mask) {
            SolveOptions opts;
            opts.triangle_rule = mask & 1;
            opts.four_cycle_rule = mask & 2;
            opts.path_rule = mask & 4;
            opts.lookahead = mask & 8;
            auto out = solve_exact(g, opts);
            CHECK(out.status == expect);
            if (out.status == SolveStatus::Found) CHECK(verify_kt(out.orientation).is_kt);
        }
    }
}

TEST_CASE("orient_by_coloring") {
    auto c4 = orient_by_coloring(gen_cycle(4), {0, 1, 2, 1, 2});
    CHECK(c4.arcs() == std::vector<Arc>{{1, 2}, {1, 4}, {3, 2}, {3, 4}});
    CHECK(verify_kt(c4).is_kt);

    auto c5 = orient_by_coloring(gen_cycle(5), {0, 1, 2, 1, 2, 3});
    auto in = c5.in_degrees(), out = c5.out_degrees();
    int extreme = 0;
    for (Vertex v = 1; v <= 5; ++v) extreme += in[static_cast<std::size_t>(v)] == 0 || out[static_cast<std::size_t>(v)] == 0;
    CHECK(extreme >= 4);
    CHECK(verify_kt(c5).is_kt);

    CHECK_THROWS_AS(orient_by_coloring(gen_cycle(4), {0, 1, 1, 2, 2}), InputError);
    CHECK_THROWS_AS(orient_by_coloring(gen_cycle(4), {0, 1, 2}), InputError);
}

TEST_CASE("colour orientations have short longest paths") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 12);
        auto g = Graph::from_edges(n, oracle::random_graph(rng, n, 0.4));
        // Greedy colouring in id order.
        std::vector<int> col(static_cast<std::size_t>(n) + 1, 0);
        int k = 0;
        for (Vertex v = 1; v <= n; ++v) {
            int c = 1;
            for (bool clash = true; clash;) {
                clash = false;
                for (Vertex w : g.neighbors(v))
                    if (col[static_cast<std::size_t>(w)] == c) {
                        clash = true;
                        ++c;
                        break;
                    }
            }
            col[static_cast<std::size_t>(v)] = c;
            k = std::max(k, c);
        }
        auto d = orient_by_coloring(g, col);
        CHECK(longest_path_vertices(d) <= k);
        const int gi = girth(g);
        if (gi == kInfiniteGirth || gi >= 2 * k - 1) CHECK(verify_kt(d).is_kt);
    }
}
