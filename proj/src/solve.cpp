#include "kt/solve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "kt/verify.hpp"

namespace kt {

namespace {

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

struct BudgetHit {};

// Backtracking search on one connected graph.
//
// State is the set of oriented edges plus, when the path rule is on, the
// transitive closure of the oriented digraph as per-vertex descendant and
// ancestor bitsets. Adding u -> v is legal iff no vertex in anc*(u) already
// reaches a vertex in desc*(v); in that case every new pair gains exactly
// one path, so undo is a plain mask-out of the saved sets.
class Search {
public:
    Search(const Graph& g, const SolveOptions& opt, std::uint64_t& nodes)
        : g_(g), opt_(opt), nodes_(nodes), words_((ix(g.vertex_count()) + 64) / 64) {
        state_.assign(ix(g.edge_count()), kUnset);
        if (opt_.path_rule) {
            desc_.assign((ix(g.vertex_count()) + 1) * words_, 0);
            anc_.assign((ix(g.vertex_count()) + 1) * words_, 0);
        }
        cycles_ = four_cycles(g);
        cycles_of_edge_.resize(ix(g.edge_count()));
        for (std::size_t c = 0; c < cycles_.size(); ++c)
            for (int i = 0; i < 4; ++i)
                cycles_of_edge_[ix(edge_of(cycles_[c][i], cycles_[c][(i + 1) % 4]))].push_back(c);
        order_.resize(ix(g.edge_count()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            return cycles_of_edge_[ix(a)].size() > cycles_of_edge_[ix(b)].size();
        });
    }

    bool run() { return descend(); }

    std::vector<bool> directions() const {
        std::vector<bool> fwd(state_.size());
        for (std::size_t e = 0; e < state_.size(); ++e) fwd[e] = state_[e] == kForward;
        return fwd;
    }

private:
    static constexpr signed char kUnset = -1;
    static constexpr signed char kBackward = 0;
    static constexpr signed char kForward = 1;

    struct TrailEntry {
        EdgeId edge;
        std::size_t pool_offset;  // npos when no closure update was made
    };

    EdgeId edge_of(Vertex a, Vertex b) const { return *g_.edge_id(a, b); }

    std::uint64_t* desc(Vertex v) { return desc_.data() + ix(v) * words_; }
    std::uint64_t* anc(Vertex v) { return anc_.data() + ix(v) * words_; }

    static bool test(const std::uint64_t* bits, Vertex v) { return (bits[ix(v) / 64] >> (ix(v) % 64)) & 1u; }

    template <class F>
    void for_each_bit(const std::uint64_t* bits, F&& f) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = bits[w];
            while (word) {
                int b = std::countr_zero(word);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                word &= word - 1;
            }
        }
    }

    // anc*(from) and desc*(to) into the scratch buffers.
    void closure_sets(Vertex from, Vertex to, std::vector<std::uint64_t>& a, std::vector<std::uint64_t>& b) {
        a.assign(anc(from), anc(from) + words_);
        b.assign(desc(to), desc(to) + words_);
        a[ix(from) / 64] |= std::uint64_t{1} << (ix(from) % 64);
        b[ix(to) / 64] |= std::uint64_t{1} << (ix(to) % 64);
    }

    bool legal(Vertex from, Vertex to) {
        closure_sets(from, to, scratch_a_, scratch_b_);
        for (std::size_t w = 0; w < words_; ++w)
            if (scratch_a_[w] & scratch_b_[w]) return false;
        bool ok = true;
        for_each_bit(scratch_a_.data(), [&](Vertex x) {
            if (!ok) return;
            const std::uint64_t* dx = desc(x);
            for (std::size_t w = 0; w < words_; ++w)
                if (dx[w] & scratch_b_[w]) {
                    ok = false;
                    return;
                }
        });
        return ok;
    }

    Arc arc_for(EdgeId e, signed char dir) const {
        const Edge& ed = g_.edge(e);
        return dir == kForward ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
    }

    // Assigns one edge; false on conflict (nothing recorded in that case).
    bool assign(EdgeId e, signed char dir) {
        if (state_[ix(e)] != kUnset) return state_[ix(e)] == dir;
        Arc a = arc_for(e, dir);
        std::size_t offset = static_cast<std::size_t>(-1);
        if (opt_.path_rule) {
            if (!legal(a.from, a.to)) return false;
            offset = pool_.size();
            pool_.insert(pool_.end(), scratch_a_.begin(), scratch_a_.end());
            pool_.insert(pool_.end(), scratch_b_.begin(), scratch_b_.end());
            const std::uint64_t* as = pool_.data() + offset;
            const std::uint64_t* bs = as + words_;
            for_each_bit(as, [&](Vertex x) {
                std::uint64_t* dx = desc(x);
                for (std::size_t w = 0; w < words_; ++w) dx[w] |= bs[w];
            });
            for_each_bit(bs, [&](Vertex y) {
                std::uint64_t* ay = anc(y);
                for (std::size_t w = 0; w < words_; ++w) ay[w] |= as[w];
            });
        }
        state_[ix(e)] = dir;
        trail_.push_back({e, offset});
        queue_.push_back(e);
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry t = trail_.back();
            trail_.pop_back();
            state_[ix(t.edge)] = kUnset;
            if (t.pool_offset == static_cast<std::size_t>(-1)) continue;
            const std::uint64_t* as = pool_.data() + t.pool_offset;
            const std::uint64_t* bs = as + words_;
            for_each_bit(as, [&](Vertex x) {
                std::uint64_t* dx = desc(x);
                for (std::size_t w = 0; w < words_; ++w) dx[w] &= ~bs[w];
            });
            for_each_bit(bs, [&](Vertex y) {
                std::uint64_t* ay = anc(y);
                for (std::size_t w = 0; w < words_; ++w) ay[w] &= ~as[w];
            });
            pool_.resize(t.pool_offset);
        }
    }

    // A four-cycle has exactly two KT orientations, both alternating, so
    // one oriented edge fixes the other three.
    bool propagate() {
        while (!queue_.empty()) {
            EdgeId e = queue_.back();
            queue_.pop_back();
            if (!opt_.four_cycle_rule) continue;
            Arc a = arc_for(e, state_[ix(e)]);
            for (std::size_t c : cycles_of_edge_[ix(e)]) {
                const auto& cyc = cycles_[c];
                int i = static_cast<int>(std::find(cyc.begin(), cyc.end(), a.from) - cyc.begin());
                // a.from is a source of the cycle: its parity class points outwards.
                for (int k = 0; k < 4; ++k) {
                    Vertex x = cyc[static_cast<std::size_t>(k)];
                    Vertex y = cyc[static_cast<std::size_t>((k + 1) % 4)];
                    bool x_source = (k - i) % 2 == 0;
                    Arc want = x_source ? Arc{x, y} : Arc{y, x};
                    EdgeId f = edge_of(x, y);
                    signed char dir = want.from < want.to ? kForward : kBackward;
                    if (!assign(f, dir)) {
                        queue_.clear();
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool lookahead() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (EdgeId e : order_) {
                if (state_[ix(e)] != kUnset) continue;
                const Edge& ed = g_.edge(e);
                bool fwd_ok = legal(ed.u, ed.v);
                bool bwd_ok = legal(ed.v, ed.u);
                if (!fwd_ok && !bwd_ok) return false;
                if (fwd_ok && bwd_ok) continue;
                if (!assign(e, fwd_ok ? kForward : kBackward) || !propagate()) return false;
                progress = true;
            }
        }
        return true;
    }

    bool descend() {
        if (opt_.path_rule && opt_.lookahead && !lookahead()) return false;
        EdgeId next = -1;
        for (EdgeId e : order_)
            if (state_[ix(e)] == kUnset) {
                next = e;
                break;
            }
        if (next < 0) {
            if (opt_.path_rule) return true;
            auto d = Orientation(std::make_shared<const Graph>(g_), directions());
            return verify_kt(d).is_kt;
        }
        for (signed char dir : {kForward, kBackward}) {
            if (++nodes_ > opt_.budget) throw BudgetHit{};
            std::size_t mark = trail_.size();
            if (assign(next, dir) && propagate() && descend()) return true;
            queue_.clear();
            undo_to(mark);
        }
        return false;
    }

    const Graph& g_;
    const SolveOptions& opt_;
    std::uint64_t& nodes_;
    std::size_t words_;
    std::vector<signed char> state_;
    std::vector<std::uint64_t> desc_, anc_, pool_, scratch_a_, scratch_b_;
    std::vector<std::array<Vertex, 4>> cycles_;
    std::vector<std::vector<std::size_t>> cycles_of_edge_;
    std::vector<EdgeId> order_;
    std::vector<TrailEntry> trail_;
    std::vector<EdgeId> queue_;
};

}  // namespace

SolveOutcome solve_exact(const Graph& g, const SolveOptions& options) {
    SolveOutcome out;
    if (options.triangle_rule && has_triangle(g)) return out;

    std::vector<bool> fwd(ix(g.edge_count()), true);
    try {
        for (const auto& comp : connected_components(g)) {
            if (comp.size() < 2) continue;
            auto sub = induced_subgraph(g, comp);
            Search search(sub.graph, options, out.nodes_explored);
            if (!search.run()) return out;
            auto local = search.directions();
            for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
                const Edge& ed = sub.graph.edge(e);
                EdgeId orig = *g.edge_id(sub.new_to_old[ix(ed.u)], sub.new_to_old[ix(ed.v)]);
                fwd[ix(orig)] = local[ix(e)];
            }
        }
    } catch (const BudgetHit&) {
        out.status = SolveStatus::BudgetExceeded;
        return out;
    }
    out.orientation = Orientation(std::make_shared<const Graph>(g), std::move(fwd));
    if (!verify_kt(out.orientation).is_kt) throw InternalError("solve_exact produced a non-KT orientation");
    out.status = SolveStatus::Found;
    return out;
}

std::uint64_t count_kt_orientations(const Graph& g) {
    if (g.edge_count() > kMaxCountEdges)
        throw InputError("count_kt_orientations: " + std::to_string(g.edge_count()) + " edges exceeds the limit of " +
                         std::to_string(kMaxCountEdges));
    auto base = std::make_shared<const Graph>(g);
    const auto m = ix(g.edge_count());
    std::uint64_t count = 0;
    std::vector<bool> fwd(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (std::size_t e = 0; e < m; ++e) fwd[e] = (mask >> e) & 1u;
        if (verify_kt(Orientation(base, fwd)).is_kt) ++count;
    }
    return count;
}

Orientation orient_by_coloring(const Graph& g, const std::vector<int>& colors) {
    if (colors.size() < ix(g.vertex_count()) + 1) throw InputError("colouring does not cover every vertex");
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (colors[ix(v)] < 1) throw InputError("colour of vertex " + std::to_string(v) + " must be positive");
    std::vector<bool> fwd(ix(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int cu = colors[ix(ed.u)], cv = colors[ix(ed.v)];
        if (cu == cv)
            throw InputError("improper colouring: edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) +
                             " has both ends coloured " + std::to_string(cu));
        fwd[ix(e)] = cu < cv;
    }
    return Orientation(std::make_shared<const Graph>(g), std::move(fwd));
}

int longest_path_vertices(const Orientation& d) {
    auto acyc = check_acyclic(d);
    if (!acyc.acyclic) throw InputError("longest_path_vertices: orientation has a directed cycle");
    auto out = d.out_lists();
    std::vector<int> len(ix(d.vertex_count()) + 1, 1);
    int best = d.vertex_count() > 0 ? 1 : 0;
    for (Vertex v : acyc.order)
        for (Vertex w : out[ix(v)]) {
            len[ix(w)] = std::max(len[ix(w)], len[ix(v)] + 1);
            best = std::max(best, len[ix(w)]);
        }
    return best;
}

}  // namespace kt
