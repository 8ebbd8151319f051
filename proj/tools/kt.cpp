#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kt/cubic.hpp"
#include "kt/families.hpp"
#include "kt/graph.hpp"
#include "kt/independence.hpp"
#include "kt/io.hpp"
#include "kt/reductions.hpp"
#include "kt/solve.hpp"
#include "kt/verify.hpp"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

constexpr const char* kGrammar = R"(
Commands:
  kt verify FILE.d                         KT (exit 0) or NOT-KT plus a witness (exit 1)
  kt solve --exact [--budget N] FILE.g     orientation file, NONE (1) or BUDGET-EXCEEDED (3)
  kt solve --cubic [--explain] FILE.g      same, polynomial for maximum degree <= 3
  kt count FILE.g                          number of KT orientations (at most 24 edges)
  kt gen ladder K | twincut K | cycle N | named NAME
  kt gen copycut K [--orient] [--d D1,D2,...]
  kt reduce [--deg4] [--map FILE] FILE.nae graph on stdout, map on stderr or FILE
  kt decode FILE.nae MAP FILE.d            T/F per variable; exit 1 if not NAE-satisfying
  kt alpha [--budget N] FILE.g             independence number and a witness

Any FILE may be '-' for standard input.
Exit codes: 0 success, 1 negative answer, 2 usage or input error,
3 budget exceeded, 4 internal error.

File formats:
  graph        p edge N M, then M lines 'e U V' with U < V
  orientation  p arc N M, then M lines 'a U V' for U -> V
  nae          p nae N M, then M lines 'I J K 0'
  Lines starting with 'c' are comments.)";

std::string join(const std::vector<kt::Vertex>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    return out.str();
}

int cmd_verify(const std::string& path) {
    auto d = kt::io::parse_orientation(kt::io::read_text(path));
    auto r = kt::verify_kt(d);
    if (r.is_kt) {
        std::cout << "KT\n";
        return kOk;
    }
    std::cout << "NOT-KT\n";
    const auto& w = *r.witness;
    if (w.kind == kt::Witness::Kind::DirectedCycle) {
        std::cout << "cycle: " << join(w.cycle) << '\n';
    } else {
        std::cout << "paths: " << w.u << ' ' << w.v << '\n' << join(w.path_a) << '\n' << join(w.path_b) << '\n';
    }
    return kNegative;
}

int report(const kt::SolveOutcome& out) {
    switch (out.status) {
        case kt::SolveStatus::Found: std::cout << kt::io::write_orientation(out.orientation); return kOk;
        case kt::SolveStatus::None: std::cout << "NONE\n"; return kNegative;
        case kt::SolveStatus::BudgetExceeded:
            std::cout << "BUDGET-EXCEEDED\n";
            std::cerr << "explored " << out.nodes_explored << " nodes\n";
            return kBudget;
    }
    return kInternal;
}

int cmd_solve(bool cubic, std::uint64_t budget, bool explain, const std::string& path) {
    auto g = kt::io::parse_graph(kt::io::read_text(path));
    if (!cubic) {
        kt::SolveOptions opts;
        opts.budget = budget;
        return report(kt::solve_exact(g, opts));
    }
    kt::CubicTrace trace;
    auto out = kt::solve_cubic(g, &trace);
    if (explain) std::cerr << kt::format_trace(trace);
    return report(out);
}

int cmd_gen(const std::string& family, const std::string& arg, bool orient, const std::vector<std::int64_t>& d) {
    auto number = [&](const std::string& what) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || arg.empty()) throw kt::InputError(what + " must be an integer, got '" + arg + "'");
        return k;
    };
    if ((orient || !d.empty()) && family != "copycut")
        throw kt::InputError("--orient and --d apply to 'gen copycut' only");
    if (family == "ladder") {
        std::cout << kt::io::write_graph(kt::gen_ladder(number("K")));
    } else if (family == "cycle") {
        std::cout << kt::io::write_graph(kt::gen_cycle(number("N")));
    } else if (family == "named") {
        std::cout << kt::io::write_graph(kt::gen_named(arg));
    } else if (family == "twincut") {
        auto t = kt::gen_twincut(number("K"));
        std::cout << kt::io::write_graph(t.graph, {"branch: " + join(t.branch)});
    } else if (family == "copycut") {
        auto fam = kt::gen_copycut(number("K"), d);
        std::vector<std::string> comments{"branch: " + join(fam.branch)};
        if (orient)
            std::cout << kt::io::write_orientation(fam.orientation, comments);
        else
            std::cout << kt::io::write_graph(fam.graph, comments);
    } else {
        throw kt::InputError("unknown family '" + family + "'");
    }
    return kOk;
}

int cmd_reduce(bool deg4, const std::string& map_path, const std::string& path) {
    auto inst = kt::parse_nae3sat(kt::io::read_text(path));
    auto enc = deg4 ? kt::encode_deg4(inst) : kt::encode_general(inst);
    const auto map = kt::write_map(enc.map);
    if (map_path.empty()) {
        std::cerr << map;
    } else {
        std::ofstream f(map_path);
        f << map;
        if (!f) throw kt::InputError("cannot write map file '" + map_path + "'");
    }
    std::cout << kt::io::write_graph(enc.graph);
    return kOk;
}

int cmd_decode(const std::string& nae, const std::string& map_path, const std::string& d_path) {
    if ((nae == "-") + (map_path == "-") + (d_path == "-") > 1) throw kt::InputError("at most one argument may be '-'");
    auto inst = kt::parse_nae3sat(kt::io::read_text(nae));
    auto map = kt::parse_map(kt::io::read_text(map_path));
    auto d = kt::io::parse_orientation(kt::io::read_text(d_path));
    if (map.var_edges.size() != static_cast<std::size_t>(inst.n_vars))
        throw kt::InputError("map lists " + std::to_string(map.var_edges.size()) + " variables, instance has " +
                             std::to_string(inst.n_vars));
    auto a = kt::decode_assignment(map, d);
    for (bool b : a) std::cout << (b ? "T" : "F") << '\n';
    if (auto j = kt::first_violated_clause(inst, a)) {
        std::cerr << "decoded assignment violates clause " << *j + 1 << '\n';
        return kNegative;
    }
    return kOk;
}

int cmd_alpha(std::uint64_t budget, const std::string& path) {
    auto g = kt::io::parse_graph(kt::io::read_text(path));
    auto r = kt::alpha_exact(g, budget);
    if (!r.complete) {
        std::cout << "BUDGET-EXCEEDED\n";
        std::cerr << "best found: " << r.alpha << " after " << r.nodes_explored << " nodes\n";
        return kBudget;
    }
    std::cout << "alpha: " << r.alpha << '\n' << "witness: " << join(r.witness) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KT orientations: verify, solve, count, generate, reduce"};
    app.footer(kGrammar);
    app.require_subcommand(1, 1);

    std::string file;
    auto* verify = app.add_subcommand("verify", "check an orientation file");
    verify->add_option("file", file, "orientation file")->required();

    bool exact = false, cubic = false, explain = false;
    std::uint64_t budget = kt::kDefaultSolveBudget;
    auto* solve = app.add_subcommand("solve", "find a KT orientation");
    auto* exact_flag = solve->add_flag("--exact", exact, "complete backtracking search");
    auto* cubic_flag = solve->add_flag("--cubic", cubic, "polynomial algorithm for maximum degree <= 3");
    exact_flag->excludes(cubic_flag);
    auto* solve_budget = solve->add_option("--budget", budget, "search node limit")->check(CLI::PositiveNumber);
    solve->add_flag("--explain", explain, "print the four-cycle component table to stderr");
    solve->add_option("file", file, "graph file")->required();

    auto* count = app.add_subcommand("count", "count KT orientations by brute force");
    count->add_option("file", file, "graph file")->required();

    std::string family, gen_arg;
    bool orient = false;
    std::vector<std::int64_t> dseq;
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    gen->add_option("family", family, "ladder | copycut | twincut | named | cycle")->required();
    gen->add_option("arg", gen_arg, "index, length or name")->required();
    gen->add_flag("--orient", orient, "copycut: emit the constructive KT orientation");
    gen->add_option("--d", dseq, "copycut: d_1,d_2,...")->delimiter(',');

    bool deg4 = false;
    std::string map_path;
    auto* reduce = app.add_subcommand("reduce", "encode monotone NAE-3SAT as a KT instance");
    reduce->add_flag("--deg4", deg4, "maximum degree 4 variant");
    reduce->add_option("--map", map_path, "write the vertex map here instead of stderr");
    reduce->add_option("file", file, "NAE-3SAT file")->required();

    std::string nae, map_in, d_in;
    auto* decode = app.add_subcommand("decode", "read an assignment off an orientation of an encoding");
    decode->add_option("nae", nae, "NAE-3SAT file")->required();
    decode->add_option("map", map_in, "map file from reduce")->required();
    decode->add_option("orientation", d_in, "orientation file")->required();

    std::uint64_t alpha_budget = kt::kDefaultAlphaBudget;
    auto* alpha = app.add_subcommand("alpha", "exact independence number");
    alpha->add_option("--budget", alpha_budget, "search node limit")->check(CLI::PositiveNumber);
    alpha->add_option("file", file, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(file);
        if (solve->parsed()) {
            if (exact == cubic) throw kt::InputError("solve needs exactly one of --exact or --cubic");
            if (cubic && solve_budget->count() > 0) throw kt::InputError("--budget applies to --exact only");
            if (exact && explain) throw kt::InputError("--explain applies to --cubic only");
            return cmd_solve(cubic, budget, explain, file);
        }
        if (count->parsed()) {
            std::cout << kt::count_kt_orientations(kt::io::parse_graph(kt::io::read_text(file))) << '\n';
            return kOk;
        }
        if (gen->parsed()) return cmd_gen(family, gen_arg, orient, dseq);
        if (reduce->parsed()) return cmd_reduce(deg4, map_path, file);
        if (decode->parsed()) return cmd_decode(nae, map_in, d_in);
        if (alpha->parsed()) return cmd_alpha(alpha_budget, file);
    } catch (const kt::InputError& e) {
        std::cerr << "kt: " << e.what() << '\n';
        return kUsage;
    } catch (const kt::InternalError& e) {
        std::cerr << "kt: internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::bad_alloc&) {
        std::cerr << "kt: out of memory\n";
        return kInternal;
    }
    return kUsage;
}
