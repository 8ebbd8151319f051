#include "kt/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace kt {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<Vertex> cycle_in_remainder(const Adjacency& in, const std::vector<int>& indeg) {
    std::vector<char> live(indeg.size(), 0);
    Vertex start = 0;
    for (std::size_t v = 1; v < indeg.size(); ++v) {
        if (indeg[v] > 0) {
            live[v] = 1;
            if (!start) start = static_cast<Vertex>(v);
        }
    }
    // Every live vertex has a live in-neighbour; walk backwards until a repeat.
    std::vector<int> seen_at(indeg.size(), -1);
    std::vector<Vertex> walk;
    Vertex x = start;
    while (seen_at[ix(x)] < 0) {
        seen_at[ix(x)] = static_cast<int>(walk.size());
        walk.push_back(x);
        Vertex pred = 0;
        for (Vertex p : in[ix(x)])
            if (live[ix(p)]) {
                pred = p;
                break;
            }
        x = pred;
    }
    std::vector<Vertex> cycle(walk.begin() + seen_at[ix(x)], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    // Rotate so the smallest id leads.
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    return cycle;
}

// Shortens two internally disjoint u -> v paths until their union has no
// chord, following the minimal-counterexample argument: any arc between two
// vertices of the union yields a strictly shorter pair.
void remove_chords(const Orientation& d, const Adjacency& out, std::vector<Vertex>& p, std::vector<Vertex>& q) {
    const auto n = ix(d.vertex_count());
    for (;;) {
        std::vector<int> on_p(n + 1, -1), on_q(n + 1, -1);
        for (std::size_t i = 0; i < p.size(); ++i) on_p[ix(p[i])] = static_cast<int>(i);
        for (std::size_t i = 0; i < q.size(); ++i) on_q[ix(q[i])] = static_cast<int>(i);
        auto is_path_arc = [&](Vertex x, Vertex y) {
            int i = on_p[ix(x)], j = on_p[ix(y)];
            if (i >= 0 && j == i + 1) return true;
            i = on_q[ix(x)];
            j = on_q[ix(y)];
            return i >= 0 && j == i + 1;
        };

        bool changed = false;
        std::vector<Vertex> members(p);
        members.insert(members.end(), q.begin() + 1, q.end() - 1);
        std::sort(members.begin(), members.end());
        for (Vertex x : members) {
            for (Vertex y : out[ix(x)]) {
                if (on_p[ix(y)] < 0 && on_q[ix(y)] < 0) continue;
                if (is_path_arc(x, y)) continue;
                std::vector<Vertex> np, nq;
                if (on_p[ix(x)] >= 0 && on_p[ix(y)] >= 0) {
                    np.assign(p.begin() + on_p[ix(x)], p.begin() + on_p[ix(y)] + 1);
                    nq = {x, y};
                } else if (on_q[ix(x)] >= 0 && on_q[ix(y)] >= 0) {
                    np.assign(q.begin() + on_q[ix(x)], q.begin() + on_q[ix(y)] + 1);
                    nq = {x, y};
                } else if (on_p[ix(x)] >= 0) {
                    np.assign(p.begin(), p.begin() + on_p[ix(x)] + 1);
                    np.push_back(y);
                    nq.assign(q.begin(), q.begin() + on_q[ix(y)] + 1);
                } else {
                    np.assign(q.begin(), q.begin() + on_q[ix(x)] + 1);
                    np.push_back(y);
                    nq.assign(p.begin(), p.begin() + on_p[ix(y)] + 1);
                }
                p = std::move(np);
                q = std::move(nq);
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) return;
    }
}

}  // namespace

AcyclicResult check_acyclic(const Orientation& d) {
    const auto n = ix(d.vertex_count());
    auto out = d.out_lists();
    auto indeg = d.in_degrees();
    AcyclicResult r;
    r.order.reserve(n);
    std::deque<Vertex> ready;
    for (Vertex v = 1; v <= d.vertex_count(); ++v)
        if (indeg[ix(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        Vertex v = ready.front();
        ready.pop_front();
        r.order.push_back(v);
        for (Vertex w : out[ix(v)])
            if (--indeg[ix(w)] == 0) ready.push_back(w);
    }
    if (r.order.size() == n) return r;
    r.acyclic = false;
    r.order.clear();
    r.cycle = cycle_in_remainder(d.in_lists(), indeg);
    return r;
}

VerifyResult verify_kt(const Orientation& d) {
    VerifyResult result;
    auto acyc = check_acyclic(d);
    if (!acyc.acyclic) {
        result.is_kt = false;
        Witness w;
        w.kind = Witness::Kind::DirectedCycle;
        w.cycle = std::move(acyc.cycle);
        result.witness = std::move(w);
        return result;
    }

    const auto n = ix(d.vertex_count());
    auto out = d.out_lists();
    std::vector<int> pos(n + 1);
    for (std::size_t i = 0; i < acyc.order.size(); ++i) pos[ix(acyc.order[i])] = static_cast<int>(i);

    std::vector<std::uint8_t> count(n + 1, 0);
    std::vector<Vertex> via(n + 1, 0);
    for (Vertex s = 1; s <= d.vertex_count(); ++s) {
        std::fill(count.begin(), count.end(), 0);
        count[ix(s)] = 1;
        Vertex bad = 0;
        for (std::size_t i = static_cast<std::size_t>(pos[ix(s)]); i < acyc.order.size(); ++i) {
            Vertex v = acyc.order[i];
            if (!count[ix(v)]) continue;
            if (count[ix(v)] >= 2) {
                bad = v;
                break;
            }
            for (Vertex w : out[ix(v)]) {
                if (count[ix(w)] == 0) via[ix(w)] = v;
                count[ix(w)] = static_cast<std::uint8_t>(std::min(2, count[ix(w)] + count[ix(v)]));
            }
        }
        if (!bad) continue;

        // Every vertex before `bad` in topological order has at most one path
        // from s, so the `via` links form a tree rooted at s. Two in-neighbours
        // of `bad` with a path from s give two tree branches meeting at their
        // lowest common ancestor.
        auto in = d.in_lists();
        std::vector<Vertex> preds;
        for (Vertex p : in[ix(bad)])
            if (count[ix(p)] == 1 && pos[ix(p)] >= pos[ix(s)]) preds.push_back(p);
        if (preds.size() < 2) throw InternalError("verify_kt: inconsistent path counts");
        auto branch = [&](Vertex from) {
            std::vector<Vertex> path{bad, from};
            while (path.back() != s) path.push_back(via[ix(path.back())]);
            std::reverse(path.begin(), path.end());
            return path;
        };
        auto pa = branch(preds[0]);
        auto pb = branch(preds[1]);
        std::size_t common = 0;
        while (common + 1 < pa.size() && common + 1 < pb.size() && pa[common + 1] == pb[common + 1]) ++common;
        std::vector<Vertex> p(pa.begin() + static_cast<std::ptrdiff_t>(common), pa.end());
        std::vector<Vertex> q(pb.begin() + static_cast<std::ptrdiff_t>(common), pb.end());
        remove_chords(d, out, p, q);
        if (q.size() < p.size() || (q.size() == p.size() && q < p)) std::swap(p, q);

        Witness w;
        w.kind = Witness::Kind::TwoPaths;
        w.u = p.front();
        w.v = p.back();
        w.path_a = std::move(p);
        w.path_b = std::move(q);
        result.is_kt = false;
        result.witness = std::move(w);
        return result;
    }
    return result;
}

bool witness_replays(const Orientation& d, const Witness& w) {
    auto is_path = [&](const std::vector<Vertex>& path) {
        if (path.size() < 2) return false;
        std::vector<Vertex> sorted(path);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!d.has_arc(path[i], path[i + 1])) return false;
        return true;
    };
    if (w.kind == Witness::Kind::DirectedCycle) {
        if (w.cycle.size() < 3) return false;
        std::vector<Vertex> closed(w.cycle);
        closed.push_back(w.cycle.front());
        std::vector<Vertex> sorted(w.cycle);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (std::size_t i = 0; i + 1 < closed.size(); ++i)
            if (!d.has_arc(closed[i], closed[i + 1])) return false;
        return true;
    }
    if (!is_path(w.path_a) || !is_path(w.path_b) || w.path_a == w.path_b) return false;
    if (w.path_a.front() != w.u || w.path_b.front() != w.u) return false;
    if (w.path_a.back() != w.v || w.path_b.back() != w.v) return false;
    std::vector<Vertex> ia(w.path_a.begin() + 1, w.path_a.end() - 1);
    std::vector<Vertex> ib(w.path_b.begin() + 1, w.path_b.end() - 1);
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    std::vector<Vertex> shared;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(shared));
    return shared.empty();
}

SimplifyResult simplify_source_sink(const Orientation& d) {
    const auto n = ix(d.vertex_count());
    const Graph& g = d.graph();
    auto indeg = d.in_degrees();
    auto outdeg = d.out_degrees();
    std::vector<char> alive(n + 1, 1);
    auto extreme = [&](Vertex v) { return indeg[ix(v)] == 0 || outdeg[ix(v)] == 0; };

    SimplifyResult r;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 1; v <= d.vertex_count(); ++v) {
            if (!alive[ix(v)] || !extreme(v)) continue;
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (alive[ix(w)] && !extreme(w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            alive[ix(v)] = 0;
            r.removed.push_back(v);
            auto nb = g.neighbors(v);
            auto ids = g.incident_edges(v);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (!alive[ix(nb[i])]) continue;
                if (d.arc(ids[i]).from == v)
                    --indeg[ix(nb[i])];
                else
                    --outdeg[ix(nb[i])];
            }
            changed = true;
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= d.vertex_count(); ++v)
        if (alive[ix(v)]) keep.push_back(v);
    r.reduced = induced_orientation(d, keep);
    r.kept.push_back(0);
    r.kept.insert(r.kept.end(), keep.begin(), keep.end());
    return r;
}

}  // namespace kt
