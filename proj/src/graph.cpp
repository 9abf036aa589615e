#include "cutpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cutpoly {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} out of range for n=" + std::to_string(n));
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::pair<int, int> Graph::edge(int index) const {
    if (index < 0 || index >= num_edges())
        throw std::out_of_range("edge index " + std::to_string(index));
    return edges_[index];
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v));
    return adj_[v];
}

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(1, n);
    return Graph(n, std::move(es));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("K_{a,b} needs a,b >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) es.emplace_back(u, v);
    return Graph(a + b, std::move(es));
}

Graph grid_graph(int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("grid needs r,c >= 1");
    auto id = [c](int i, int j) { return i * c + j + 1; };
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c) es.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r) es.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph(r * c, std::move(es));
}

}  // namespace

Graph make_named(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument(name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "K") {
        want(1);
        if (params[0] < 1) throw std::invalid_argument("K_n needs n >= 1");
        return complete(params[0]);
    }
    if (name == "C") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (name == "P") {
        want(1);
        return path_graph(params[0]);
    }
    if (name == "W") {
        want(1);
        return suspension(cycle_graph(params[0]));
    }
    if (name == "Kab") {
        want(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (name == "grid") {
        want(2);
        return grid_graph(params[0], params[1]);
    }
    if (name == "prism") {
        want(0);
        return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}});
    }
    if (name == "V8") {
        want(0);
        return Graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8},
                         {1, 5}, {2, 6}, {3, 7}, {4, 8}});
    }
    if (name == "K5e") {
        want(0);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v)
                if (!(u == 4 && v == 5)) es.emplace_back(u, v);
        return Graph(5, std::move(es));
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

EdgeDeletion delete_edge(const Graph& g, int edge_idx) {
    auto [du, dv] = g.edge(edge_idx);
    std::vector<std::pair<int, int>> es;
    std::vector<int> edge_map(g.num_edges(), -1);
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i == edge_idx) continue;
        edge_map[i] = static_cast<int>(es.size());
        es.push_back(g.edges()[i]);
    }
    (void)du;
    (void)dv;
    return {Graph(g.num_vertices(), std::move(es)), std::move(edge_map)};
}

Graph contract_edge(const Graph& g, int edge_idx) {
    auto [u, v] = g.edge(edge_idx);  // u < v: keep u, drop v
    std::vector<std::pair<int, int>> es;
    auto relabel = [&](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    for (auto [a, b] : g.edges()) {
        int na = relabel(a), nb = relabel(b);
        if (na == nb) continue;  // the contracted edge becomes a loop
        es.emplace_back(na, nb);
    }
    return Graph(g.num_vertices() - 1, std::move(es));
}

Graph suspension(const Graph& g) {
    int n = g.num_vertices();
    auto es = g.edges();
    for (int v = 1; v <= n; ++v) es.emplace_back(v, n + 1);
    return Graph(n + 1, std::move(es));
}

CliqueSumResult clique_sum(const CliqueSumSpec& spec) {
    size_t s = spec.shared.size();
    if (s < 1 || s > 3)
        throw std::invalid_argument("clique sum supports 1 <= s <= 3 shared vertices");
    std::vector<int> sh1, sh2;
    for (auto [v, w] : spec.shared) {
        sh1.push_back(v);
        sh2.push_back(w);
    }
    {
        auto uniq1 = sh1, uniq2 = sh2;
        std::sort(uniq1.begin(), uniq1.end());
        std::sort(uniq2.begin(), uniq2.end());
        if (std::unique(uniq1.begin(), uniq1.end()) != uniq1.end() ||
            std::unique(uniq2.begin(), uniq2.end()) != uniq2.end())
            throw std::invalid_argument("shared vertices must be distinct");
    }
    if (!is_clique(spec.g1, sh1) || !is_clique(spec.g2, sh2))
        throw std::invalid_argument("shared vertices do not form a clique in both parts");

    int n1 = spec.g1.num_vertices();
    std::vector<int> map1(n1 + 1), map2(spec.g2.num_vertices() + 1, 0);
    std::iota(map1.begin(), map1.end(), 0);  // g1 keeps its labels
    for (size_t i = 0; i < s; ++i) map2[sh2[i]] = sh1[i];
    int next = n1 + 1;
    for (int w = 1; w <= spec.g2.num_vertices(); ++w)
        if (map2[w] == 0) map2[w] = next++;

    auto es = spec.g1.edges();
    for (auto [a, b] : spec.g2.edges()) es.emplace_back(map2[a], map2[b]);
    CliqueSumResult res;
    res.glued = Graph(next - 1, std::move(es));
    res.map1 = std::move(map1);
    res.map2 = std::move(map2);
    for (int v : sh1) res.shared_vertices.push_back(v);
    return res;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* keep_map) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> map(g.num_vertices() + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > g.num_vertices())
            throw std::out_of_range("vertex " + std::to_string(sorted[i]));
        map[sorted[i]] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (map[u] && map[v]) es.emplace_back(map[u], map[v]);
    if (keep_map) *keep_map = map;
    return Graph(static_cast<int>(sorted.size()), std::move(es));
}

Graph remove_vertex(const Graph& g, int v, std::vector<int>* keep_map) {
    std::vector<int> keep;
    for (int u = 1; u <= g.num_vertices(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep, keep_map);
}

namespace {

// DFS extension for chordless cycles.  The path starts at its smallest
// vertex r; the second vertex is smaller than the eventual last one, which
// kills the reflection duplicate.  A candidate w may extend the path only
// if its sole path neighbor is the current endpoint, and closes a cycle
// exactly when its only other path neighbor is r.
void chordless_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& on_path,
                   std::vector<Cycle>& out) {
    int r = path.front();
    int last = path.back();
    for (int w : g.neighbors(last)) {
        if (w <= r || on_path[w]) continue;
        bool chord = false;
        bool closes = g.adjacent(w, r);
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (closes) {
            if (path.size() >= 2 && path[1] < w) {
                Cycle c;
                c.vertices = path;
                c.vertices.push_back(w);
                for (size_t i = 0; i < c.vertices.size(); ++i) {
                    int a = c.vertices[i];
                    int b = c.vertices[(i + 1) % c.vertices.size()];
                    c.edge_indices.push_back(g.edge_index(a, b));
                }
                std::sort(c.edge_indices.begin(), c.edge_indices.end());
                out.push_back(std::move(c));
            }
            continue;  // extending past w would leave a chord to r
        }
        path.push_back(w);
        on_path[w] = 1;
        chordless_dfs(g, path, on_path, out);
        on_path[w] = 0;
        path.pop_back();
    }
}

}  // namespace

std::vector<Cycle> induced_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<char> on_path(g.num_vertices() + 1, 0);
    for (int r = 1; r <= g.num_vertices(); ++r) {
        for (int a : g.neighbors(r)) {
            if (a <= r) continue;
            std::vector<int> path = {r, a};
            on_path[r] = on_path[a] = 1;
            chordless_dfs(g, path, on_path, out);
            on_path[r] = on_path[a] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
        if (x.vertices.size() != y.vertices.size())
            return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return out;
}

std::vector<Cycle> cycles_through_edge(const Graph& g, int edge_idx) {
    g.edge(edge_idx);  // range check
    std::vector<Cycle> out;
    for (auto& c : induced_cycles(g))
        if (std::binary_search(c.edge_indices.begin(), c.edge_indices.end(), edge_idx))
            out.push_back(c);
    return out;
}

std::vector<Cycle> cycle_basis(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> parent(n + 1, 0), depth(n + 1, -1);
    std::vector<char> tree_edge(g.num_edges(), 0);
    for (int root = 1; root <= n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (depth[v] >= 0) continue;
                depth[v] = depth[u] + 1;
                parent[v] = u;
                tree_edge[g.edge_index(u, v)] = 1;
                stack.push_back(v);
            }
        }
    }
    std::vector<Cycle> out;
    for (int i = 0; i < g.num_edges(); ++i) {
        if (tree_edge[i]) continue;
        auto [u, v] = g.edges()[i];
        // tree path u..v
        std::vector<int> pu, pv;
        int a = u, b = v;
        while (depth[a] > depth[b]) {
            pu.push_back(a);
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            pv.push_back(b);
            b = parent[b];
        }
        while (a != b) {
            pu.push_back(a);
            pv.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        Cycle c;
        c.vertices = pu;
        c.vertices.push_back(a);
        for (auto it = pv.rbegin(); it != pv.rend(); ++it) c.vertices.push_back(*it);
        for (size_t k = 0; k < c.vertices.size(); ++k) {
            int x = c.vertices[k];
            int y = c.vertices[(k + 1) % c.vertices.size()];
            c.edge_indices.push_back(g.edge_index(x, y));
        }
        std::sort(c.edge_indices.begin(), c.edge_indices.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<int>> out;
    for (int root = 1; root <= n; ++root) {
        if (comp[root] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack = {root};
        comp[root] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace cutpoly
