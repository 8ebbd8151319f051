#include "kt/independence.hpp"

#include <algorithm>
#include <bit>

namespace kt {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

struct BudgetHit {};

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    void and_not(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::uint64_t x = w_[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    }

private:
    std::vector<std::uint64_t> w_;
};

class Search {
public:
    Search(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), adj_(ix(g.vertex_count()) + 1) {
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            adj_[ix(v)] = Bits(ix(g.vertex_count()) + 1);
            for (Vertex w : g.neighbors(v)) adj_[ix(v)].set(ix(w));
        }
    }

    void run(AlphaResult& out) {
        Bits all(ix(g_.vertex_count()) + 1);
        for (Vertex v = 1; v <= g_.vertex_count(); ++v) all.set(ix(v));
        try {
            go(all);
            out.complete = true;
        } catch (const BudgetHit&) {
            out.complete = false;
        }
        out.alpha = static_cast<int>(best_.size());
        out.witness = best_;
        std::sort(out.witness.begin(), out.witness.end());
        out.nodes_explored = nodes_;
    }

private:
    // Greedy clique cover of the remaining vertices, in id order.
    int clique_cover(const Bits& rest) const {
        std::vector<std::vector<std::size_t>> cliques;
        rest.for_each([&](std::size_t v) {
            for (auto& c : cliques)
                if (std::all_of(c.begin(), c.end(), [&](std::size_t u) { return adj_[v].test(u); })) {
                    c.push_back(v);
                    return;
                }
            cliques.push_back({v});
        });
        return static_cast<int>(cliques.size());
    }

    void go(Bits rest) {
        if (++nodes_ > budget_) throw BudgetHit{};
        // Vertices without remaining neighbours always join.
        std::size_t pushed = 0;
        std::size_t pick = 0;
        int pick_deg = -1;
        Bits isolated(ix(g_.vertex_count()) + 1);
        rest.for_each([&](std::size_t v) {
            int deg = adj_[v].count_and(rest);
            if (deg == 0) {
                isolated.set(v);
            } else if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        });
        isolated.for_each([&](std::size_t v) {
            current_.push_back(static_cast<Vertex>(v));
            ++pushed;
        });
        rest.and_not(isolated);

        if (rest.none()) {
            if (current_.size() > best_.size()) best_ = current_;
        } else if (static_cast<int>(current_.size()) + clique_cover(rest) > static_cast<int>(best_.size())) {
            Bits with = rest;
            with.and_not(adj_[pick]);
            with.reset(pick);
            current_.push_back(static_cast<Vertex>(pick));
            go(with);
            current_.pop_back();
            rest.reset(pick);
            go(rest);
        }
        current_.resize(current_.size() - pushed);
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Bits> adj_;
    std::vector<Vertex> current_, best_;
};

}  // namespace

AlphaResult alpha_exact(const Graph& g, std::uint64_t budget) {
    AlphaResult out;
    Search(g, budget).run(out);
    return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw InputError("is_independent: vertex " + std::to_string(v) + " out of range");
    std::vector<char> in(ix(g.vertex_count()) + 1, 0);
    for (Vertex v : s) in[ix(v)] = 1;
    for (const Edge& e : g.edges())
        if (in[ix(e.u)] && in[ix(e.v)]) return false;
    return true;
}

}  // namespace kt
