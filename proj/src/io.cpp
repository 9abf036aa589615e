#include "cutpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace cutpoly {

namespace {

bool next_payload_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_payload_line(in, line, lineno))
        throw ParseError(lineno, "expected header `n m`");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw ParseError(lineno, "malformed header, expected `n m`");
    std::string extra;
    if (header >> extra) throw ParseError(lineno, "trailing tokens after header");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        if (!next_payload_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                         std::to_string(i));
        std::istringstream es_in(line);
        int u = 0, v = 0;
        if (!(es_in >> u >> v)) throw ParseError(lineno, "malformed edge, expected `u v`");
        if (es_in >> extra) throw ParseError(lineno, "trailing tokens after edge");
        es.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(es));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_graph(out, g);
}

IntPoint parse_int_point(const std::string& text) {
    IntPoint p;
    std::string before = text, after;
    auto pos = text.find(';');
    if (pos != std::string::npos) {
        before = text.substr(0, pos);
        after = text.substr(pos + 1);
    }
    std::istringstream xs(before);
    long long v;
    while (xs >> v) p.x.push_back(v);
    if (!xs.eof()) throw std::runtime_error("malformed integer point: " + text);
    if (pos != std::string::npos) {
        std::istringstream as(after);
        if (!(as >> p.alpha)) throw std::runtime_error("malformed alpha in point: " + text);
        std::string extra;
        if (as >> extra) throw std::runtime_error("trailing tokens after alpha: " + text);
        p.has_alpha = true;
    }
    return p;
}

namespace {

Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(tok));
        BigInt num(tok.substr(0, slash));
        BigInt den(tok.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational: " + tok);
    }
}

}  // namespace

RatPoint parse_rat_point(const std::string& text) {
    RatPoint p;
    std::string before = text, after;
    auto pos = text.find(';');
    if (pos != std::string::npos) {
        before = text.substr(0, pos);
        after = text.substr(pos + 1);
    }
    std::istringstream xs(before);
    std::string tok;
    while (xs >> tok) p.x.push_back(parse_rat(tok));
    if (pos != std::string::npos) {
        std::istringstream as(after);
        if (!(as >> tok)) throw std::runtime_error("malformed alpha in point: " + text);
        p.alpha = parse_rat(tok);
        p.has_alpha = true;
    }
    return p;
}

std::vector<std::vector<int>> read_shores(std::istream& in) {
    std::vector<std::vector<int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<int> shore;
        int v;
        while (ls >> v) shore.push_back(v);
        if (!ls.eof()) throw ParseError(lineno, "malformed shore line");
        if (!line.empty() && !shore.empty()) out.push_back(std::move(shore));
    }
    return out;
}

std::vector<std::vector<int>> read_shores_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open shore file: " + path);
    return read_shores(in);
}

}  // namespace cutpoly
