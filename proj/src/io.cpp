#include "kt/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lines.hpp"

namespace kt::io {

namespace {

using detail::fail;
using detail::LineCursor;
using detail::split_ws;
using detail::to_int;

// Shared reader for the two edge-list formats. `require_sorted_pair` is set
// for graph files, where every edge line must already be normalized.
template <class OnPair>
Vertex parse_pairs(std::string_view text, std::string_view kind, char tag, bool require_sorted_pair, OnPair&& on_pair) {
    LineCursor cur{text};
    std::string_view line;
    bool have_header = false;
    long long n = 0, m = 0, seen = 0;
    while (cur.next(line)) {
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) fail(cur.number, "duplicate header");
            if (tok.size() != 4 || tok[1] != kind) fail(cur.number, "malformed header, expected 'p " + std::string(kind) + " <n> <m>'");
            n = to_int(tok[2], cur.number);
            m = to_int(tok[3], cur.number);
            if (n < 0 || m < 0 || n > 100'000'000) fail(cur.number, "bad vertex or edge count");
            have_header = true;
            continue;
        }
        if (!have_header) fail(cur.number, "data before header");
        if (tok[0].size() != 1 || tok[0][0] != tag || tok.size() != 3)
            fail(cur.number, "malformed line '" + std::string(line) + "'");
        long long u = to_int(tok[1], cur.number);
        long long v = to_int(tok[2], cur.number);
        if (u < 1 || u > n || v < 1 || v > n) fail(cur.number, "vertex out of range");
        if (u == v) fail(cur.number, "self-loop");
        if (require_sorted_pair && u > v) fail(cur.number, "edge endpoints must satisfy u < v");
        ++seen;
        on_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_header) throw InputError("missing header");
    if (seen != m) throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return static_cast<Vertex>(n);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<Edge> edges;
    Vertex n = parse_pairs(text, "edge", 'e', true, [&](Vertex u, Vertex v) { edges.push_back({u, v}); });
    auto g = Graph::from_edges(n, std::span<const Edge>(edges));
    if (static_cast<std::size_t>(g.edge_count()) != edges.size()) throw InputError("duplicate edge");
    return g;
}

Orientation parse_orientation(std::string_view text) {
    std::vector<Arc> arcs;
    Vertex n = parse_pairs(text, "arc", 'a', false, [&](Vertex u, Vertex v) { arcs.push_back({u, v}); });
    return Orientation::from_arcs(n, arcs);
}

std::string write_graph(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& c : comments) out << "c " << c << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string write_orientation(const Orientation& d, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "p arc " << d.vertex_count() << ' ' << d.graph().edge_count() << '\n';
    for (const auto& c : comments) out << "c " << c << '\n';
    for (const Arc& a : d.arcs()) out << "a " << a.from << ' ' << a.to << '\n';
    return out.str();
}

std::vector<std::string> read_comments(std::string_view text) {
    LineCursor cur{text};
    std::string_view line;
    std::vector<std::string> out;
    while (cur.next(line)) {
        if (line == "c") {
            out.emplace_back();
        } else if (line.size() >= 2 && line[0] == 'c' && (line[1] == ' ' || line[1] == '\t')) {
            out.emplace_back(line.substr(2));
        }
    }
    return out;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace kt::io
