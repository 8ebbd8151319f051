#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kt/graph.hpp"

namespace kt::io {

// Graph files:       c <text> | p edge <n> <m> | e <u> <v>   (u < v)
// Orientation files: c <text> | p arc <n> <m>  | a <u> <v>   (u -> v)
//
// The header must be the first non-comment line and appear exactly once.
// Parsers throw InputError with a line number on any violation. Writers
// emit the header, then the given comment lines, then the edges/arcs in
// lexicographic order, so writing a parsed canonical file reproduces it
// byte for byte.

Graph parse_graph(std::string_view text);
Orientation parse_orientation(std::string_view text);

std::string write_graph(const Graph& g, const std::vector<std::string>& comments = {});
std::string write_orientation(const Orientation& d, const std::vector<std::string>& comments = {});

// Text of the `c` lines, without the leading "c ", in file order.
std::vector<std::string> read_comments(std::string_view text);

// Reads a whole file; "-" means standard input.
std::string read_text(const std::string& path);

}  // namespace kt::io
