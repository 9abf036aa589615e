#pragma once

#include <vector>

#include "cutpoly/cutlattice.hpp"
#include "cutpoly/graph.hpp"

namespace cutpoly {

// Feasible range for the coordinate gamma restoring a deleted edge: the
// cone forces max(0, x_max) <= gamma <= min(alpha, x_min); the lattice
// forces a parity residue.  For a point in the lattice and cone of the
// deleted graph the range always contains a value of the right parity.
struct GammaBounds {
    bool has_cycle = false;       // some induced cycle of g contains e0
    long long x_max = 0;          // valid only when has_cycle
    long long x_min = 0;
    long long lower = 0;          // max(0, x_max), or 0 without cycles
    long long upper = 0;          // min(alpha, x_min), or alpha
    bool parity_constrained = false;
    int parity = 0;               // required residue of gamma mod 2
};

// x is indexed by the canonical edges of g \ e0.
GammaBounds gamma_bounds(const Graph& g, int e0, const IntVec& x, long long alpha);

// Extends x across the deleted edge with the smallest feasible gamma; the
// result lies in Z(X_g) n Q_+(X_g).
HomPoint lift_deletion(const Graph& g, int e0, const IntVec& x, long long alpha);

// Pattern classes of a shore on the shared clique: for s = 3 the four
// restrictions z0..z3 to the clique edges, for s = 2 the two sides, for
// s = 1 a single class.
int shared_pattern(const Graph& g, const std::vector<int>& shore,
                   const std::vector<int>& shared);

// Merges degree-matched decompositions of the two summands into one for the
// clique sum: shores are classified by pattern, class counts must agree,
// and classes are paired in canonical sorted order.  Inputs are shore lists
// over g1/g2 labels; the result is a shore list over the glued graph.
std::vector<std::vector<int>> merge_clique_sum(const CliqueSumSpec& spec,
                                               const std::vector<std::vector<int>>& dec1,
                                               const std::vector<std::vector<int>>& dec2);

}  // namespace cutpoly
