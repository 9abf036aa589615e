#include "cutpoly/minors.hpp"

#include <algorithm>
#include <numeric>

namespace cutpoly {

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> pat_order;              // pattern vertices, degree-desc then label
    std::vector<std::vector<int>> branch;    // branch[k] = set for pat_order[k]
    std::vector<char> used;                  // host vertex taken by some branch set
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    // blocked[k][v]: v declined for branch set k at an enclosing growth step;
    // it stays available for later branch sets.
    std::vector<std::vector<char>> blocked;

    MinorSearch(const Graph& h, const Graph& p, long long b) : host(h), pattern(p), budget(b) {
        pat_order.resize(pattern.num_vertices());
        std::iota(pat_order.begin(), pat_order.end(), 1);
        std::sort(pat_order.begin(), pat_order.end(), [&](int a, int c) {
            if (pattern.degree(a) != pattern.degree(c)) return pattern.degree(a) > pattern.degree(c);
            return a < c;
        });
        used.assign(host.num_vertices() + 1, 0);
        blocked.assign(pattern.num_vertices(), std::vector<char>(host.num_vertices() + 1, 0));
    }

    bool tick() {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        return true;
    }

    bool touches(const std::vector<int>& set, int k_prev) const {
        for (int a : set)
            for (int b : host.neighbors(a))
                for (int c : branch[k_prev])
                    if (b == c) return true;
        return false;
    }

    bool adjacency_ok(size_t k) const {
        int pv = pat_order[k];
        for (size_t j = 0; j < k; ++j)
            if (pattern.adjacent(pv, pat_order[j]) && !touches(branch[k], j)) return false;
        return true;
    }

    bool assign(size_t k) {
        if (k == pat_order.size()) return true;
        int free_hosts = 0;
        for (int v = 1; v <= host.num_vertices(); ++v)
            if (!used[v]) ++free_hosts;
        int needed = static_cast<int>(pat_order.size() - k);
        if (free_hosts < needed) return false;
        int max_size = free_hosts - (needed - 1);
        // roots in ascending label order; a set's root is its minimum, which
        // makes the enumeration duplicate-free
        for (int r = 1; r <= host.num_vertices(); ++r) {
            if (used[r]) continue;
            std::fill(blocked[k].begin(), blocked[k].end(), 0);
            branch[k] = {r};
            used[r] = 1;
            if (grow(k, r, max_size)) return true;
            used[r] = 0;
            branch[k].clear();
            if (exceeded) return false;
        }
        return false;
    }

    // Extend branch[k] (min vertex r) by candidates > r.  Declining a
    // candidate blocks it for the rest of this growth subtree, which makes
    // the connected-subset enumeration duplicate-free.
    bool grow(size_t k, int r, int max_size) {
        if (!tick()) return false;
        if (adjacency_ok(k) && assign(k + 1)) return true;
        if (exceeded) return false;
        if (static_cast<int>(branch[k].size()) >= max_size) return false;
        std::vector<int> cands;
        for (int a : branch[k])
            for (int b : host.neighbors(a))
                if (b > r && !used[b] && !blocked[k][b] &&
                    std::find(cands.begin(), cands.end(), b) == cands.end())
                    cands.push_back(b);
        std::sort(cands.begin(), cands.end());
        std::vector<int> declined;
        for (int c : cands) {
            branch[k].push_back(c);
            used[c] = 1;
            if (grow(k, r, max_size)) return true;
            branch[k].pop_back();
            used[c] = 0;
            blocked[k][c] = 1;
            declined.push_back(c);
            if (exceeded) break;
        }
        for (int c : declined) blocked[k][c] = 0;
        return false;
    }
};

}  // namespace

MinorResult has_minor(const Graph& host, const Graph& pattern, long long budget) {
    MinorResult res;
    if (pattern.num_vertices() == 0) {
        res.outcome = SearchOutcome::Found;
        res.witness = MinorWitness{};
        return res;
    }
    if (pattern.num_vertices() > host.num_vertices() ||
        pattern.num_edges() > host.num_edges())
        return res;
    MinorSearch search(host, pattern, budget);
    search.branch.resize(pattern.num_vertices());
    if (search.assign(0)) {
        MinorWitness w;
        for (size_t k = 0; k < search.pat_order.size(); ++k) {
            auto set = search.branch[k];
            std::sort(set.begin(), set.end());
            w.branch_sets[search.pat_order[k]] = std::move(set);
        }
        res.outcome = SearchOutcome::Found;
        res.witness = std::move(w);
    } else if (search.exceeded) {
        res.outcome = SearchOutcome::BudgetExceeded;
    }
    return res;
}

bool verify_minor_witness(const Graph& host, const Graph& pattern, const MinorWitness& w) {
    std::vector<char> seen(host.num_vertices() + 1, 0);
    for (int pv = 1; pv <= pattern.num_vertices(); ++pv) {
        auto it = w.branch_sets.find(pv);
        if (it == w.branch_sets.end() || it->second.empty()) return false;
        for (int v : it->second) {
            if (v < 1 || v > host.num_vertices() || seen[v]) return false;
            seen[v] = 1;
        }
        // connectivity of the induced branch set
        const auto& set = it->second;
        std::vector<int> stack = {set[0]};
        std::vector<char> vis(host.num_vertices() + 1, 0);
        vis[set[0]] = 1;
        size_t reached = 1;
        auto in_set = [&](int v) {
            return std::find(set.begin(), set.end(), v) != set.end();
        };
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : host.neighbors(u))
                if (in_set(v) && !vis[v]) {
                    vis[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != set.size()) return false;
    }
    for (auto [a, b] : pattern.edges()) {
        const auto& sa = w.branch_sets.at(a);
        const auto& sb = w.branch_sets.at(b);
        bool edge_found = false;
        for (int u : sa) {
            for (int v : sb)
                if (host.adjacent(u, v)) {
                    edge_found = true;
                    break;
                }
            if (edge_found) break;
        }
        if (!edge_found) return false;
    }
    return true;
}

MinorProfile minor_profile(const Graph& g, long long budget) {
    auto run = [&](const Graph& pattern) {
        auto r = has_minor(g, pattern, budget);
        if (r.outcome == SearchOutcome::BudgetExceeded) throw BudgetExceededError();
        return r.found();
    };
    MinorProfile p;
    p.k4_free = !run(make_named("K", {4}));
    p.k5e_free = p.k4_free ? true : !run(make_named("K5e"));
    p.k5_free = p.k5e_free ? true : !run(make_named("K", {5}));
    return p;
}

}  // namespace cutpoly
