#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/minors.hpp"
#include "cutpoly/rational.hpp"

namespace cutpoly {

// One cut semimetric: 0/1 coordinates per edge, plus the canonical shore
// (the side of the cut containing vertex 1).
struct CutVector {
    IntVec coords;
    std::vector<int> shore;
};

struct CutBasis {
    std::vector<CutVector> generators;  // 2^{n-1} entries, canonical order
    Graph graph;
};

// A candidate element of the degree-alpha slice: x over E, appended degree.
struct HomPoint {
    IntVec x;
    long long alpha = 0;
};

// x(F) - x(C\F) <= alpha (|F|-1) for an induced cycle C and odd F subset C.
struct CycleInequality {
    Cycle cycle;
    std::vector<int> odd_set;  // edge indices, subset of cycle.edge_indices
};

struct FacetSystem {
    std::vector<CycleInequality> cycle_inequalities;
    int num_box = 0;  // 2|E| bounds 0 <= x_e <= alpha
};

struct K5MinorError : std::runtime_error {
    explicit K5MinorError(MinorWitness w)
        : std::runtime_error("graph has a K5 minor; the cycle-inequality description does not apply"),
          witness(std::move(w)) {}
    MinorWitness witness;
};

inline constexpr int kDefaultMaxCutVertices = 16;

CutVector cut_vector(const Graph& g, const std::vector<int>& shore);
CutBasis cut_generators(const Graph& g, int max_n = kDefaultMaxCutVertices);

// Lattice membership: every cycle has even x-sum; alpha is unconstrained.
bool in_lattice(const Graph& g, const HomPoint& p);
bool in_lattice_nonhomogeneous(const Graph& g, const IntVec& x);

// Throws K5MinorError when g has a K5 minor.
FacetSystem facet_inequalities(const Graph& g);

// Cone membership oracle for Q_+(X_G).  Built once per graph: uses the
// cycle-inequality description when g is K5-minor-free and otherwise falls
// back to exact LP feasibility over the 2^{n-1} generators.
class ConeOracle {
public:
    explicit ConeOracle(const Graph& g, int max_n = kDefaultMaxCutVertices);

    bool contains(const HomPoint& p) const;
    bool contains(const RatVec& x, const Rat& alpha) const;
    bool uses_facets() const { return facets_.has_value(); }
    const FacetSystem& facets() const { return *facets_; }

private:
    Graph graph_;
    std::optional<FacetSystem> facets_;
    std::vector<RatVec> columns_;  // homogenized generators, when LP backend
};

bool in_cone(const Graph& g, const HomPoint& p);
bool in_cone_generators(const Graph& g, const HomPoint& p,
                        int max_n = kDefaultMaxCutVertices);

// Q_+(A_G): nonnegative rational combinations of the cut vectors, no
// degree constraint.
bool in_cone_nonhomogeneous(const Graph& g, const RatVec& x,
                            int max_n = kDefaultMaxCutVertices);

}  // namespace cutpoly
