#include "oracles.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace oracles {

using cutpoly::BigInt;
using cutpoly::Graph;

namespace {

// g = gcd(a, b) = s*a + t*b
void ext_gcd(BigInt a, BigInt b, BigInt& g, BigInt& s, BigInt& t) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        a = b;
        b = r;
        BigInt ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    g = a;
    s = s0;
    t = t0;
}

}  // namespace

std::vector<std::vector<int>> brute_induced_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    int n = g.num_vertices();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) vs.push_back(v);
        if (vs.size() < 3) continue;
        bool two_regular = true;
        for (int v : vs) {
            int d = 0;
            for (int w : vs)
                if (v != w && g.adjacent(v, w)) ++d;
            if (d != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular) continue;
        // connectivity within the subset
        std::vector<int> stack = {vs[0]};
        std::vector<char> vis(n + 1, 0);
        vis[vs[0]] = 1;
        size_t cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : vs)
                if (!vis[w] && g.adjacent(u, w)) {
                    vis[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt == vs.size()) out.push_back(vs);
    }
    return out;
}

void IntLattice::add(const std::vector<BigInt>& v) {
    std::vector<BigInt> cur = v;
    for (size_t pos = 0; pos < cur.size(); ++pos) {
        if (cur[pos] == 0) continue;
        auto it = std::find_if(basis_.begin(), basis_.end(), [&](const auto& b) {
            for (size_t i = 0; i < pos; ++i)
                if (b[i] != 0) return false;
            return b[pos] != 0;
        });
        if (it == basis_.end()) {
            basis_.push_back(cur);
            return;
        }
        // replace pivot pair with (gcd combination, reduced vector)
        BigInt a = (*it)[pos], c = cur[pos];
        BigInt g_, s, t;
        ext_gcd(a, c, g_, s, t);
        std::vector<BigInt> comb(cur.size()), red(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) {
            comb[i] = s * (*it)[i] + t * cur[i];
            red[i] = (a / g_) * cur[i] - (c / g_) * (*it)[i];
        }
        *it = comb;
        cur = red;
    }
}

bool IntLattice::contains(std::vector<BigInt> v) const {
    for (size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos] == 0) continue;
        auto it = std::find_if(basis_.begin(), basis_.end(), [&](const auto& b) {
            for (size_t i = 0; i < pos; ++i)
                if (b[i] != 0) return false;
            return b[pos] != 0;
        });
        if (it == basis_.end()) return false;
        if (v[pos] % (*it)[pos] != 0) return false;
        BigInt f = v[pos] / (*it)[pos];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= f * (*it)[i];
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

bool lattice_member_rowreduce(const Graph& g, const cutpoly::IntVec& x, long long alpha) {
    auto basis = cutpoly::cut_generators(g);
    IntLattice lat;
    for (const auto& gen : basis.generators) {
        std::vector<BigInt> v;
        for (long long c : gen.coords) v.emplace_back(c);
        v.emplace_back(1);
        lat.add(v);
    }
    std::vector<BigInt> target;
    for (long long c : x) target.emplace_back(c);
    target.emplace_back(alpha);
    return lat.contains(std::move(target));
}

bool brute_has_minor(const Graph& host, const Graph& pattern) {
    int n = host.num_vertices(), p = pattern.num_vertices();
    if (p == 0) return true;
    if (p > n) return false;
    std::vector<int> assign(n, 0);  // 0 = unused, 1..p = branch set
    auto connected = [&](int cls) {
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if (assign[v - 1] == cls) vs.push_back(v);
        if (vs.empty()) return false;
        std::vector<int> stack = {vs[0]};
        std::vector<char> vis(n + 1, 0);
        vis[vs[0]] = 1;
        size_t cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : vs)
                if (!vis[w] && host.adjacent(u, w)) {
                    vis[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == vs.size();
    };
    while (true) {
        bool ok = true;
        for (int cls = 1; cls <= p && ok; ++cls) ok = connected(cls);
        if (ok) {
            for (auto [a, b] : pattern.edges()) {
                bool covered = false;
                for (int u = 1; u <= n && !covered; ++u)
                    for (int v = 1; v <= n && !covered; ++v)
                        if (assign[u - 1] == a && assign[v - 1] == b && host.adjacent(u, v))
                            covered = true;
                if (!covered) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        int i = 0;
        while (i < n && assign[i] == p) assign[i++] = 0;
        if (i == n) return false;
        ++assign[i];
    }
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    int n = a.num_vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u - 1], perm[v - 1])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Graph> graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
    std::vector<Graph> reps;
    for (unsigned long long mask = 0; mask < (1ULL << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (size_t i = 0; i < all_edges.size(); ++i)
            if ((mask >> i) & 1) es.push_back(all_edges[i]);
        Graph g(n, std::move(es));
        bool fresh = std::none_of(reps.begin(), reps.end(),
                                  [&](const Graph& r) { return is_isomorphic(g, r); });
        if (fresh) reps.push_back(std::move(g));
    }
    return reps;
}

Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

cutpoly::HomPoint random_combination(const Graph& g, int degree, std::mt19937& rng,
                                     std::vector<std::vector<int>>* shores) {
    cutpoly::HomPoint p;
    p.x.assign(g.num_edges(), 0);
    p.alpha = degree;
    std::uniform_int_distribution<unsigned long long> pick(
        0, g.num_vertices() >= 1 ? (1ULL << (g.num_vertices() - 1)) - 1 : 0);
    for (int k = 0; k < degree; ++k) {
        unsigned long long mask = pick(rng);
        std::vector<int> shore = {1};
        for (int v = 2; v <= g.num_vertices(); ++v)
            if ((mask >> (v - 2)) & 1) shore.push_back(v);
        auto cv = cutpoly::cut_vector(g, shore);
        for (int e = 0; e < g.num_edges(); ++e) p.x[e] += cv.coords[e];
        if (shores) shores->push_back(cv.shore);
    }
    return p;
}

BruteGamma brute_gamma(const Graph& g, int e0, const cutpoly::IntVec& x, long long alpha) {
    auto del = cutpoly::delete_edge(g, e0);
    // x' on g with 0 at e0
    cutpoly::IntVec xp(g.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (e != e0) xp[e] = x[del.edge_map[e]];
    BruteGamma b;
    b.x_max = LLONG_MIN;
    b.x_min = LLONG_MAX;
    for (const auto& vs : brute_induced_cycles(g)) {
        // recover the cyclic order to get edges; use subset edge scan instead
        std::vector<int> es;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                int idx = g.edge_index(vs[i], vs[j]);
                if (idx >= 0) es.push_back(idx);
            }
        if (std::find(es.begin(), es.end(), e0) == es.end()) continue;
        b.has_cycle = true;
        int len = static_cast<int>(es.size());
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            if (__builtin_popcount(mask) % 2 == 0) continue;
            long long fsz = __builtin_popcount(mask);
            bool e0_in_f = false;
            long long val = 0;
            for (int i = 0; i < len; ++i) {
                bool in_f = (mask >> i) & 1;
                if (es[i] == e0) {
                    e0_in_f = in_f;
                    continue;
                }
                val += in_f ? xp[es[i]] : -xp[es[i]];
            }
            if (!e0_in_f)
                b.x_max = std::max(b.x_max, val - alpha * (fsz - 1));
            else
                b.x_min = std::min(b.x_min, -val + alpha * (fsz - 1));
        }
    }
    return b;
}

Graph named(const std::string& name) {
    if (name == "prism" || name == "V8" || name == "K5e") return cutpoly::make_named(name);
    if (name == "K33") return cutpoly::make_named("Kab", {3, 3});
    char kind = name[0];
    int k = std::stoi(name.substr(1));
    switch (kind) {
        case 'K': return cutpoly::make_named("K", {k});
        case 'C': return cutpoly::make_named("C", {k});
        case 'P': return cutpoly::make_named("P", {k});
        case 'W': return cutpoly::make_named("W", {k});
        default: throw std::invalid_argument("unknown test graph: " + name);
    }
}

}  // namespace oracles
