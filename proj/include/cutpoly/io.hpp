#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/rational.hpp"

namespace cutpoly {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Graph text format: first non-comment line `n m`, then m lines `u v`
// (1-indexed).  `#` starts a comment line.  The parser canonicalizes.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Point format: `x_1 x_2 ... x_m ; alpha`.  Integer-only and rational
// (`p/q`) variants.
struct IntPoint {
    IntVec x;
    long long alpha = 0;
    bool has_alpha = false;
};
IntPoint parse_int_point(const std::string& text);

struct RatPoint {
    RatVec x;
    Rat alpha;
    bool has_alpha = false;
};
RatPoint parse_rat_point(const std::string& text);

// Shore-list format: one shore per line, space-separated vertex labels.
std::vector<std::vector<int>> read_shores(std::istream& in);
std::vector<std::vector<int>> read_shores_file(const std::string& path);

}  // namespace cutpoly
