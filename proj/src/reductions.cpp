#include "kt/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "kt/verify.hpp"
#include "lines.hpp"

namespace kt {

namespace {

using detail::fail;
using detail::LineCursor;
using detail::split_ws;
using detail::to_int;

std::size_t ix(long long v) { return static_cast<std::size_t>(v); }

// Slot l of a clause glues its far rung (v3, w3) to these cycle positions.
constexpr std::array<std::array<int, 2>, 3> kSlotCycleEdge{{{0, 1}, {1, 2}, {4, 3}}};

struct Builder {
    std::vector<std::pair<Vertex, Vertex>> edges;
    void add(Vertex a, Vertex b) { edges.push_back({a, b}); }
};

// Everything after the variable part; `rung_for(i, t)` gives the rung of
// variable i (0-based) used by its t-th occurrence (0-based).
template <class RungFor>
void add_clauses(const Nae3SatInstance& inst, Vertex first_clause_vertex, RungFor&& rung_for, Builder& b,
                 EncodedReduction& enc) {
    const auto m = inst.clauses.size();
    std::vector<int> seen(ix(inst.n_vars), 0);
    Vertex interior = first_clause_vertex + static_cast<Vertex>(5 * m);
    for (std::size_t j = 0; j < m; ++j) {
        std::array<Vertex, 5> cyc{};
        for (int p = 0; p < 5; ++p) cyc[ix(p)] = first_clause_vertex + static_cast<Vertex>(5 * j) + p + 1;
        for (int p = 0; p < 5; ++p) b.add(cyc[ix(p)], cyc[ix((p + 1) % 5)]);
        enc.map.clause_cycles.push_back(cyc);
        for (int l = 0; l < 3; ++l) {
            const int var = inst.clauses[j][ix(l)] - 1;
            auto [y, z] = rung_for(var, seen[ix(var)]++);
            LadderRoles r{y, ++interior, cyc[ix(kSlotCycleEdge[ix(l)][0])],
                          z, ++interior, cyc[ix(kSlotCycleEdge[ix(l)][1])]};
            b.add(r[0], r[1]);
            b.add(r[1], r[2]);
            b.add(r[3], r[4]);
            b.add(r[4], r[5]);
            b.add(r[1], r[4]);
            enc.ladders.push_back(r);
        }
    }
    enc.graph = Graph::from_edges(interior, b.edges);
}

std::vector<int> occurrences(const Nae3SatInstance& inst) {
    std::vector<int> c(ix(inst.n_vars), 0);
    for (const auto& cl : inst.clauses)
        for (int v : cl) ++c[ix(v - 1)];
    return c;
}

}  // namespace

void validate(const Nae3SatInstance& inst) {
    if (inst.n_vars < 0) throw InputError("negative variable count");
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
        const auto& c = inst.clauses[j];
        for (int v : c)
            if (v < 1 || v > inst.n_vars)
                throw InputError("clause " + std::to_string(j + 1) + ": variable " + std::to_string(v) + " out of range");
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw InputError("clause " + std::to_string(j + 1) + ": repeated variable");
    }
}

Nae3SatInstance parse_nae3sat(std::string_view text) {
    LineCursor cur{text};
    std::string_view line;
    bool have_header = false;
    long long m = 0;
    Nae3SatInstance inst;
    while (cur.next(line)) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) fail(cur.number, "duplicate header");
            if (tok.size() != 4 || tok[1] != "nae") fail(cur.number, "malformed header, expected 'p nae <n> <m>'");
            long long n = to_int(tok[2], cur.number);
            m = to_int(tok[3], cur.number);
            if (n < 0 || m < 0 || n > 10'000'000 || m > 10'000'000) fail(cur.number, "bad variable or clause count");
            inst.n_vars = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) fail(cur.number, "data before header");
        if (tok.size() != 4 || tok[3] != "0") fail(cur.number, "expected '<i> <j> <k> 0'");
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) {
            long long v = to_int(tok[ix(i)], cur.number);
            if (v < 1 || v > inst.n_vars) fail(cur.number, "variable " + std::string(tok[ix(i)]) + " out of range");
            c[ix(i)] = static_cast<int>(v);
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) fail(cur.number, "repeated variable in clause");
        inst.clauses.push_back(c);
    }
    if (!have_header) throw InputError("missing 'p nae' header");
    if (static_cast<long long>(inst.clauses.size()) != m)
        throw InputError("header declares " + std::to_string(m) + " clauses, found " + std::to_string(inst.clauses.size()));
    return inst;
}

std::string write_nae3sat(const Nae3SatInstance& inst) {
    std::ostringstream out;
    out << "p nae " << inst.n_vars << ' ' << inst.clauses.size() << '\n';
    for (const auto& c : inst.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

std::optional<std::size_t> first_violated_clause(const Nae3SatInstance& inst, const Assignment& a) {
    if (a.size() != ix(inst.n_vars))
        throw InputError("assignment has " + std::to_string(a.size()) + " values for " + std::to_string(inst.n_vars) +
                         " variables");
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
        const auto& c = inst.clauses[j];
        bool x = a[ix(c[0] - 1)], y = a[ix(c[1] - 1)], z = a[ix(c[2] - 1)];
        if (x == y && y == z) return j;
    }
    return std::nullopt;
}

std::optional<Assignment> nae3sat_bruteforce(const Nae3SatInstance& inst) {
    validate(inst);
    if (inst.n_vars > kMaxBruteForceVars)
        throw InputError("nae3sat_bruteforce: at most " + std::to_string(kMaxBruteForceVars) + " variables");
    std::vector<std::uint32_t> masks;
    for (const auto& c : inst.clauses)
        masks.push_back((1u << (c[0] - 1)) | (1u << (c[1] - 1)) | (1u << (c[2] - 1)));
    const std::uint64_t total = std::uint64_t{1} << inst.n_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto x = static_cast<std::uint32_t>(bits);
        bool ok = true;
        for (std::uint32_t cm : masks) {
            std::uint32_t hit = x & cm;
            if (hit == 0 || hit == cm) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Assignment a(ix(inst.n_vars));
        for (int i = 0; i < inst.n_vars; ++i) a[ix(i)] = (x >> i) & 1u;
        return a;
    }
    return std::nullopt;
}

EncodedReduction encode_general(const Nae3SatInstance& inst) {
    validate(inst);
    EncodedReduction enc;
    enc.variant = ReductionVariant::General;
    Builder b;
    for (Vertex i = 1; i <= inst.n_vars; ++i) {
        enc.map.var_edges.push_back({2 * i - 1, 2 * i});
        b.add(2 * i - 1, 2 * i);
    }
    add_clauses(inst, 2 * inst.n_vars, [&](int var, int) { return enc.map.var_edges[ix(var)]; }, b, enc);
    return enc;
}

EncodedReduction encode_deg4(const Nae3SatInstance& inst) {
    validate(inst);
    EncodedReduction enc;
    enc.variant = ReductionVariant::Deg4;
    Builder b;
    Vertex next = 0;
    // Rung r of variable i is (off + 2r - 1, off + 2r).
    for (int c : occurrences(inst)) {
        const int k = std::max(1, 2 * c - 1);
        std::vector<Vertex> lad(ix(2 * k));
        for (int r = 0; r < k; ++r) {
            lad[ix(r)] = next + 2 * r + 1;
            lad[ix(k + r)] = next + 2 * r + 2;
        }
        for (int r = 0; r < k; ++r) {
            b.add(lad[ix(r)], lad[ix(k + r)]);
            if (r + 1 < k) {
                b.add(lad[ix(r)], lad[ix(r + 1)]);
                b.add(lad[ix(k + r)], lad[ix(k + r + 1)]);
            }
        }
        enc.map.var_edges.push_back({lad[0], lad[ix(k)]});
        enc.var_ladders.push_back(std::move(lad));
        next += 2 * k;
    }
    add_clauses(
        inst, next,
        [&](int var, int t) {
            const auto& lad = enc.var_ladders[ix(var)];
            const auto k = lad.size() / 2;
            return std::array<Vertex, 2>{lad[ix(2 * t)], lad[k + ix(2 * t)]};
        },
        b, enc);
    return enc;
}

Assignment decode_assignment(const ReductionMap& map, const Orientation& d) {
    Assignment a;
    for (std::size_t i = 0; i < map.var_edges.size(); ++i) {
        auto [y, z] = map.var_edges[i];
        if (d.has_arc(y, z))
            a.push_back(true);
        else if (d.has_arc(z, y))
            a.push_back(false);
        else
            throw InputError("orientation has no arc between " + std::to_string(y) + " and " + std::to_string(z) +
                             " (variable " + std::to_string(i + 1) + ")");
    }
    return a;
}

Orientation assignment_to_orientation(const EncodedReduction& enc, const Nae3SatInstance& inst, const Assignment& a) {
    if (enc.map.var_edges.size() != ix(inst.n_vars) || enc.map.clause_cycles.size() != inst.clauses.size())
        throw InputError("encoding does not match the instance");
    if (auto j = first_violated_clause(inst, a))
        throw InputError("assignment violates clause " + std::to_string(*j + 1));

    const Graph& g = enc.graph;
    std::vector<bool> fwd(ix(g.edge_count()));
    std::vector<char> set(ix(g.edge_count()), 0);
    auto put = [&](Vertex from, Vertex to) {
        auto e = g.edge_id(from, to);
        if (!e) throw InternalError("assignment_to_orientation: missing edge");
        fwd[ix(*e)] = from < to;
        set[ix(*e)] = 1;
    };
    // Unique ladder extension: the class holding v_1 points at the other
    // class when the variable is True.
    auto orient_ladder = [&](const std::vector<Vertex>& v, const std::vector<Vertex>& w, bool value) {
        const auto k = v.size();
        auto in_a = [&](bool on_v, std::size_t r) { return on_v == (r % 2 == 0); };
        auto arc = [&](Vertex x, bool x_in_a, Vertex y) {
            if (x_in_a == value)
                put(x, y);
            else
                put(y, x);
        };
        for (std::size_t r = 0; r < k; ++r) {
            arc(v[r], in_a(true, r), w[r]);
            if (r + 1 < k) {
                arc(v[r], in_a(true, r), v[r + 1]);
                arc(w[r], in_a(false, r), w[r + 1]);
            }
        }
    };

    for (int i = 0; i < inst.n_vars; ++i) {
        if (enc.variant == ReductionVariant::Deg4) {
            const auto& lad = enc.var_ladders[ix(i)];
            const auto k = lad.size() / 2;
            orient_ladder({lad.begin(), lad.begin() + static_cast<long>(k)}, {lad.begin() + static_cast<long>(k), lad.end()},
                          a[ix(i)]);
        } else {
            auto [y, z] = enc.map.var_edges[ix(i)];
            a[ix(i)] ? put(y, z) : put(z, y);
        }
    }
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
        std::array<bool, 3> x{};
        for (int l = 0; l < 3; ++l) {
            x[ix(l)] = a[ix(inst.clauses[j][ix(l)] - 1)];
            const auto& r = enc.ladders[3 * j + ix(l)];
            orient_ladder({r[0], r[1], r[2]}, {r[3], r[4], r[5]}, x[ix(l)]);
        }
        // Normal form v1 -> v2 (slot 1 True); the other half is the reverse.
        const bool flip = !x[0];
        if (flip)
            for (bool& b : x) b = !b;
        const auto& c = enc.map.clause_cycles[j];
        std::array<Arc, 2> free_arcs{};
        if (x[1] && !x[2])
            free_arcs = {Arc{c[3], c[2]}, Arc{c[0], c[4]}};
        else
            free_arcs = {Arc{c[0], c[4]}, Arc{c[2], c[3]}};
        for (Arc arc : free_arcs) flip ? put(arc.to, arc.from) : put(arc.from, arc.to);
    }
    if (std::find(set.begin(), set.end(), 0) != set.end())
        throw InternalError("assignment_to_orientation left an edge unoriented");
    Orientation d(std::make_shared<const Graph>(g), std::move(fwd));
    if (!verify_kt(d).is_kt) throw InternalError("assignment_to_orientation produced a non-KT orientation");
    return d;
}

std::string write_map(const ReductionMap& map) {
    std::ostringstream out;
    for (std::size_t i = 0; i < map.var_edges.size(); ++i)
        out << "var " << i + 1 << ' ' << map.var_edges[i][0] << ' ' << map.var_edges[i][1] << '\n';
    for (std::size_t j = 0; j < map.clause_cycles.size(); ++j) {
        out << "clause " << j + 1;
        for (Vertex v : map.clause_cycles[j]) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

ReductionMap parse_map(std::string_view text) {
    LineCursor cur{text};
    std::string_view line;
    ReductionMap map;
    while (cur.next(line)) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        auto vertex = [&](std::size_t i) {
            long long v = to_int(tok[i], cur.number);
            if (v < 1 || v > 100'000'000) fail(cur.number, "vertex id out of range");
            return static_cast<Vertex>(v);
        };
        if (tok[0] == "var") {
            if (tok.size() != 4) fail(cur.number, "expected 'var <i> <y> <z>'");
            if (!map.clause_cycles.empty()) fail(cur.number, "var line after clause lines");
            if (to_int(tok[1], cur.number) != static_cast<long long>(map.var_edges.size() + 1))
                fail(cur.number, "variables must be listed in order");
            map.var_edges.push_back({vertex(2), vertex(3)});
        } else if (tok[0] == "clause") {
            if (tok.size() != 7) fail(cur.number, "expected 'clause <j> <v1> .. <v5>'");
            if (to_int(tok[1], cur.number) != static_cast<long long>(map.clause_cycles.size() + 1))
                fail(cur.number, "clauses must be listed in order");
            std::array<Vertex, 5> c{};
            for (std::size_t p = 0; p < 5; ++p) c[p] = vertex(p + 2);
            map.clause_cycles.push_back(c);
        } else {
            fail(cur.number, "unknown map line '" + std::string(line) + "'");
        }
    }
    return map;
}

}  // namespace kt
