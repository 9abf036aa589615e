#include "cutpoly/cutlattice.hpp"

#include <algorithm>

#include "cutpoly/simplex.hpp"

namespace cutpoly {

CutVector cut_vector(const Graph& g, const std::vector<int>& shore) {
    std::vector<char> in_s(g.num_vertices() + 1, 0);
    for (int v : shore) {
        if (v < 1 || v > g.num_vertices())
            throw std::out_of_range("shore vertex " + std::to_string(v));
        in_s[v] = 1;
    }
    // canonical shore contains vertex 1
    bool flip = g.num_vertices() >= 1 && !in_s[1];
    CutVector cv;
    cv.coords.reserve(g.num_edges());
    for (auto [u, v] : g.edges()) cv.coords.push_back(in_s[u] != in_s[v] ? 1 : 0);
    for (int v = 1; v <= g.num_vertices(); ++v) {
        bool member = flip ? !in_s[v] : static_cast<bool>(in_s[v]);
        if (member) cv.shore.push_back(v);
    }
    return cv;
}

CutBasis cut_generators(const Graph& g, int max_n) {
    int n = g.num_vertices();
    if (n > max_n)
        throw std::invalid_argument("cut generator list has 2^" + std::to_string(n - 1) +
                                    " entries; raise the vertex limit to proceed");
    CutBasis basis;
    basis.graph = g;
    long long count = n == 0 ? 1 : (1LL << (n - 1));
    basis.generators.reserve(static_cast<size_t>(count));
    for (long long mask = 0; mask < count; ++mask) {
        // mask bit (v-2) set: vertex v on the far shore; mask 0 gives S = V
        std::vector<int> shore = {1};
        for (int v = 2; v <= n; ++v)
            if (!((mask >> (v - 2)) & 1)) shore.push_back(v);
        if (n == 0) shore.clear();
        basis.generators.push_back(cut_vector(g, shore));
    }
    return basis;
}

bool in_lattice(const Graph& g, const HomPoint& p) {
    if (static_cast<int>(p.x.size()) != g.num_edges())
        throw std::invalid_argument("point dimension mismatch");
    return in_lattice_nonhomogeneous(g, p.x);
}

bool in_lattice_nonhomogeneous(const Graph& g, const IntVec& x) {
    if (static_cast<int>(x.size()) != g.num_edges())
        throw std::invalid_argument("point dimension mismatch");
    // parity over a fundamental cycle basis is equivalent to parity over
    // every cycle
    for (const auto& c : cycle_basis(g)) {
        long long sum = 0;
        for (int e : c.edge_indices) sum += x[e];
        if (sum % 2 != 0) return false;
    }
    return true;
}

FacetSystem facet_inequalities(const Graph& g) {
    auto k5 = has_minor(g, make_named("K", {5}));
    if (k5.outcome == SearchOutcome::BudgetExceeded) throw BudgetExceededError();
    if (k5.found()) throw K5MinorError(*k5.witness);
    FacetSystem sys;
    sys.num_box = 2 * g.num_edges();
    for (const auto& c : induced_cycles(g)) {
        int len = c.length();
        // every odd subset F of the cycle's edges
        for (unsigned long long mask = 0; mask < (1ULL << len); ++mask) {
            if (__builtin_popcountll(mask) % 2 == 0) continue;
            CycleInequality iq;
            iq.cycle = c;
            for (int i = 0; i < len; ++i)
                if ((mask >> i) & 1) iq.odd_set.push_back(c.edge_indices[i]);
            sys.cycle_inequalities.push_back(std::move(iq));
        }
    }
    return sys;
}

namespace {

bool facet_check(const FacetSystem& sys, const Graph& g, const RatVec& x, const Rat& alpha) {
    if (alpha < 0) return false;
    for (const auto& xe : x)
        if (xe < 0 || xe > alpha) return false;
    (void)g;
    for (const auto& iq : sys.cycle_inequalities) {
        Rat lhs(0);
        for (int e : iq.cycle.edge_indices) lhs -= x[e];
        for (int e : iq.odd_set) lhs += 2 * x[e];
        if (lhs > alpha * (static_cast<long long>(iq.odd_set.size()) - 1)) return false;
    }
    return true;
}

std::vector<RatVec> homogenized_columns(const Graph& g, int max_n) {
    auto basis = cut_generators(g, max_n);
    std::vector<RatVec> cols;
    cols.reserve(basis.generators.size());
    for (const auto& gen : basis.generators) {
        RatVec col;
        col.reserve(gen.coords.size() + 1);
        for (long long c : gen.coords) col.emplace_back(c);
        col.emplace_back(1);
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

ConeOracle::ConeOracle(const Graph& g, int max_n) : graph_(g) {
    auto k5 = has_minor(g, make_named("K", {5}));
    if (k5.outcome == SearchOutcome::BudgetExceeded) throw BudgetExceededError();
    if (!k5.found())
        facets_ = facet_inequalities(g);
    else
        columns_ = homogenized_columns(g, max_n);
}

bool ConeOracle::contains(const RatVec& x, const Rat& alpha) const {
    if (static_cast<int>(x.size()) != graph_.num_edges())
        throw std::invalid_argument("point dimension mismatch");
    if (alpha < 0) return false;
    if (facets_) return facet_check(*facets_, graph_, x, alpha);
    RatVec b = x;
    b.push_back(alpha);
    return rational_feasible(columns_, b);
}

bool ConeOracle::contains(const HomPoint& p) const {
    RatVec x;
    x.reserve(p.x.size());
    for (long long v : p.x) x.emplace_back(v);
    return contains(x, Rat(p.alpha));
}

bool in_cone(const Graph& g, const HomPoint& p) { return ConeOracle(g).contains(p); }

bool in_cone_generators(const Graph& g, const HomPoint& p, int max_n) {
    if (static_cast<int>(p.x.size()) != g.num_edges())
        throw std::invalid_argument("point dimension mismatch");
    if (p.alpha < 0) return false;
    auto cols = homogenized_columns(g, max_n);
    RatVec b;
    b.reserve(p.x.size() + 1);
    for (long long v : p.x) b.emplace_back(v);
    b.emplace_back(p.alpha);
    return rational_feasible(cols, b);
}

bool in_cone_nonhomogeneous(const Graph& g, const RatVec& x, int max_n) {
    if (static_cast<int>(x.size()) != g.num_edges())
        throw std::invalid_argument("point dimension mismatch");
    for (const auto& xe : x)
        if (xe < 0) return false;
    auto basis = cut_generators(g, max_n);
    std::vector<RatVec> cols;
    for (const auto& gen : basis.generators) {
        RatVec col;
        for (long long c : gen.coords) col.emplace_back(c);
        cols.push_back(std::move(col));
    }
    return rational_feasible(cols, x);
}

}  // namespace cutpoly
