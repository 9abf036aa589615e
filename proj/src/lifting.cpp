#include "cutpoly/lifting.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "cutpoly/minors.hpp"

namespace cutpoly {

namespace {

// x' over the edges of g: the deleted-graph coordinates shifted into place,
// with slot e0 left at zero (gamma is handled separately by the caller).
IntVec embed_deleted(const Graph& g, int e0, const EdgeDeletion& del, const IntVec& x) {
    IntVec xp(g.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (e != e0) xp[e] = x[del.edge_map[e]];
    return xp;
}

}  // namespace

GammaBounds gamma_bounds(const Graph& g, int e0, const IntVec& x, long long alpha) {
    g.edge(e0);
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    auto k5 = has_minor(g, make_named("K", {5}));
    if (k5.outcome == SearchOutcome::BudgetExceeded) throw BudgetExceededError();
    if (k5.found()) throw K5MinorError(*k5.witness);
    auto del = delete_edge(g, e0);
    if (static_cast<int>(x.size()) != del.graph.num_edges())
        throw std::invalid_argument("point dimension mismatch with g minus e0");
    HomPoint p{x, alpha};
    if (!in_lattice(del.graph, p))
        throw std::invalid_argument("point is not in the lattice of g minus e0");
    if (!ConeOracle(del.graph).contains(p))
        throw std::invalid_argument("point is not in the cone of g minus e0");

    IntVec xp = embed_deleted(g, e0, del, x);
    GammaBounds b;
    b.upper = alpha;
    auto cycles = cycles_through_edge(g, e0);
    if (cycles.empty()) return b;

    b.has_cycle = true;
    long long x_max = LLONG_MIN, x_min = LLONG_MAX;
    for (const auto& c : cycles) {
        int len = c.length();
        const auto& es = c.edge_indices;
        int pos0 = static_cast<int>(std::find(es.begin(), es.end(), e0) - es.begin());
        for (unsigned long long mask = 0; mask < (1ULL << len); ++mask) {
            if (__builtin_popcountll(mask) % 2 == 0) continue;
            bool e0_in_f = (mask >> pos0) & 1;
            long long f_size = __builtin_popcountll(mask);
            long long val = 0;
            for (int i = 0; i < len; ++i) {
                if (es[i] == e0) continue;
                if ((mask >> i) & 1)
                    val += xp[es[i]];
                else
                    val -= xp[es[i]];
            }
            if (!e0_in_f)
                x_max = std::max(x_max, val - alpha * (f_size - 1));
            else
                x_min = std::min(x_min, -val + alpha * (f_size - 1));
        }
    }
    b.x_max = x_max;
    b.x_min = x_min;
    b.lower = std::max(0LL, x_max);
    b.upper = std::min(alpha, x_min);
    // parity from the canonically smallest cycle through e0; the lattice
    // hypothesis makes it independent of the cycle
    long long par = 0;
    for (int e : cycles.front().edge_indices)
        if (e != e0) par += xp[e];
    b.parity_constrained = true;
    b.parity = static_cast<int>(par % 2);
    for (const auto& c : cycles) {
        long long s = 0;
        for (int e : c.edge_indices)
            if (e != e0) s += xp[e];
        if (s % 2 != b.parity)
            throw std::logic_error("cycle parity disagrees across cycles through e0");
    }
    return b;
}

HomPoint lift_deletion(const Graph& g, int e0, const IntVec& x, long long alpha) {
    auto b = gamma_bounds(g, e0, x, alpha);
    long long gamma = b.lower;
    if (b.parity_constrained && (gamma % 2) != b.parity) ++gamma;
    if (gamma > b.upper)
        throw std::logic_error(
            "no feasible gamma; precondition violated or internal contradiction");
    auto del = delete_edge(g, e0);
    IntVec xp = embed_deleted(g, e0, del, x);
    xp[e0] = gamma;
    return HomPoint{std::move(xp), alpha};
}

namespace {

int designated(const CliqueSumSpec& spec, bool second) {
    return second ? spec.shared[0].second : spec.shared[0].first;
}

std::vector<int> canonical_shore(const Graph& g, std::vector<int> shore, int anchor) {
    std::sort(shore.begin(), shore.end());
    shore.erase(std::unique(shore.begin(), shore.end()), shore.end());
    for (int v : shore)
        if (v < 1 || v > g.num_vertices())
            throw std::invalid_argument("shore vertex out of range: " + std::to_string(v));
    if (std::binary_search(shore.begin(), shore.end(), anchor)) return shore;
    // delta(S) = delta(V \ S): flip to the side holding the anchor
    std::vector<int> flipped;
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (!std::binary_search(shore.begin(), shore.end(), v)) flipped.push_back(v);
    return flipped;
}

}  // namespace

int shared_pattern(const Graph& g, const std::vector<int>& shore,
                   const std::vector<int>& shared) {
    (void)g;
    auto raw = [&](int v) {
        return std::find(shore.begin(), shore.end(), v) != shore.end();
    };
    // complement-invariant: classify relative to the side holding shared[0]
    const bool anchor_side = raw(shared[0]);
    auto has = [&](int v) { return raw(v) == anchor_side; };
    if (shared.size() == 1) return 0;
    if (shared.size() == 2) return has(shared[1]) ? 0 : 1;
    // s = 3: z0 both in, z1 only i2, z2 only i3, z3 neither
    bool in2 = has(shared[1]), in3 = has(shared[2]);
    if (in2 && in3) return 0;
    if (in2) return 1;
    if (in3) return 2;
    return 3;
}

std::vector<std::vector<int>> merge_clique_sum(const CliqueSumSpec& spec,
                                               const std::vector<std::vector<int>>& dec1,
                                               const std::vector<std::vector<int>>& dec2) {
    auto cs = clique_sum(spec);
    if (dec1.size() != dec2.size())
        throw std::invalid_argument("decompositions must have equal degree");
    std::vector<int> sh1, sh2;
    for (auto [v, w] : spec.shared) {
        sh1.push_back(v);
        sh2.push_back(w);
    }
    const int nclasses = spec.shared.size() == 3 ? 4 : (spec.shared.size() == 2 ? 2 : 1);
    std::vector<std::vector<std::vector<int>>> by_class1(nclasses), by_class2(nclasses);
    for (const auto& s : dec1) {
        auto shore = canonical_shore(spec.g1, s, designated(spec, false));
        by_class1[shared_pattern(spec.g1, shore, sh1)].push_back(std::move(shore));
    }
    for (const auto& s : dec2) {
        auto shore = canonical_shore(spec.g2, s, designated(spec, true));
        by_class2[shared_pattern(spec.g2, shore, sh2)].push_back(std::move(shore));
    }
    for (int c = 0; c < nclasses; ++c)
        if (by_class1[c].size() != by_class2[c].size())
            throw std::invalid_argument(
                "pattern class counts disagree; the decompositions are inconsistent");
    std::vector<std::vector<int>> merged;
    for (int c = 0; c < nclasses; ++c) {
        std::sort(by_class1[c].begin(), by_class1[c].end());
        std::sort(by_class2[c].begin(), by_class2[c].end());
        for (size_t i = 0; i < by_class1[c].size(); ++i) {
            std::set<int> shore;
            for (int v : by_class1[c][i]) shore.insert(cs.map1[v]);
            for (int v : by_class2[c][i]) shore.insert(cs.map2[v]);
            merged.emplace_back(shore.begin(), shore.end());
        }
    }
    return merged;
}

}  // namespace cutpoly
