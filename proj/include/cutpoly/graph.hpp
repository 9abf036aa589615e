#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutpoly {

// Undirected simple graph on vertices 1..n with a canonical edge list:
// pairs {u,v}, u < v, sorted lexicographically.  Edge indices are positions
// in this list and every vector over E in the system uses this order.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int index) const;

    // -1 if {u,v} is not an edge.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;   // 1-based; adj_[0] unused
};

// A cycle of the host graph: cyclic vertex sequence plus the matching edge
// index set.  Canonical form: smallest vertex first, smaller neighbor second.
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices;

    int length() const { return static_cast<int>(vertices.size()); }
};

struct EdgeDeletion {
    Graph graph;
    // old edge index -> new edge index, deleted edge maps to -1
    std::vector<int> edge_map;
};

// Gluing instructions for G1 # G2: `shared` lists s pairs (v in G1, w in G2)
// identifying the common clique, 1 <= s <= 3.
struct CliqueSumSpec {
    Graph g1;
    Graph g2;
    std::vector<std::pair<int, int>> shared;
};

struct CliqueSumResult {
    Graph glued;
    std::vector<int> map1;     // vertex of g1 -> vertex of glued (1-based)
    std::vector<int> map2;     // vertex of g2 -> vertex of glued
    std::vector<int> shared_vertices;  // images of the shared clique, in spec order
};

Graph make_named(const std::string& name, const std::vector<int>& params = {});

EdgeDeletion delete_edge(const Graph& g, int edge_idx);
Graph contract_edge(const Graph& g, int edge_idx);
Graph suspension(const Graph& g);
CliqueSumResult clique_sum(const CliqueSumSpec& spec);

// Induced subgraph on the kept vertices (relabeled densely, order preserved).
// keep_map, when non-null, receives old vertex -> new vertex (0 = dropped).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* keep_map = nullptr);
Graph remove_vertex(const Graph& g, int v, std::vector<int>* keep_map = nullptr);

// All chordless cycles, each once, in a deterministic order.
std::vector<Cycle> induced_cycles(const Graph& g);
std::vector<Cycle> cycles_through_edge(const Graph& g, int edge_idx);

// Fundamental cycles of a spanning forest, one per non-tree edge.
std::vector<Cycle> cycle_basis(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_clique(const Graph& g, const std::vector<int>& vs);

}  // namespace cutpoly
