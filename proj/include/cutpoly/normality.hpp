#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutpoly/cutlattice.hpp"
#include "cutpoly/graph.hpp"
#include "cutpoly/minors.hpp"

namespace cutpoly {

inline constexpr long long kDefaultSearchBudget = 2'000'000'000;

struct SearchOptions {
    long long budget = kDefaultSearchBudget;
    int threads = 0;  // 0 = library default (all available)
};

// Multiset of generator indices into cut_generators(g) summing to the
// target homogenized point; |parts| = degree.
struct Decomposition {
    std::vector<int> parts;
    long long degree = 0;
};

struct DecomposeResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::optional<Decomposition> decomposition;

    bool found() const { return outcome == SearchOutcome::Found; }
};

DecomposeResult decompose(const Graph& g, const HomPoint& p,
                          long long budget = kDefaultSearchBudget);

// A point of Z(X_G) n Q_+(X_G) outside Z_+(X_G).
struct Hole {
    HomPoint point;
};

struct HoleSearchResult {
    enum class Status { Clean, Found, BudgetExceeded } status = Status::Clean;
    std::optional<Hole> hole;
    long long degree_exhausted = 0;  // highest degree fully scanned
};

// Scans degrees 2..max_degree, candidates in lexicographic order; returns
// the scan-order-minimal hole.  The parallel scan partitions candidate
// blocks across workers; results are identical to the serial reference.
HoleSearchResult find_hole(const Graph& g, long long max_degree,
                           const SearchOptions& opts = {});
HoleSearchResult find_hole_serial(const Graph& g, long long max_degree,
                                  const SearchOptions& opts = {});

struct NormalityVerdict {
    enum class Status { NormalCertified, NormalUpToDegree, NotNormal, Unknown };
    Status status = Status::Unknown;
    std::vector<std::string> rules_fired;
    long long search_degree = 0;  // highest degree exhausted by search
    std::optional<Hole> hole;                  // point witness, when found
    std::optional<MinorWitness> minor_witness; // K5 witness, classifier rule 1
};

struct NormalityMode {
    bool full = false;
    long long bound = 3;  // used when !full

    static NormalityMode bounded(long long d) { return {false, d}; }
    static NormalityMode full_certification() { return {true, 0}; }
};

NormalityVerdict verify_normality(const Graph& g, const NormalityMode& mode,
                                  const SearchOptions& opts = {});

// Theorem-based rule engine; never runs a hole search.
NormalityVerdict classify_normality(const Graph& g,
                                    long long budget = kDefaultMinorBudget);

struct HilbertResult {
    enum class Status { NoViolationUpTo, Violation, BudgetExceeded } status =
        Status::NoViolationUpTo;
    long long bound = 0;
    std::optional<IntVec> witness;  // x in Z(A_G) n Q_+(A_G) \ Z_+(A_G)
};

HilbertResult hilbert_check(const Graph& g, long long max_degree,
                            const SearchOptions& opts = {});

}  // namespace cutpoly
