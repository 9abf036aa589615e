#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cutpoly/graph.hpp"

namespace cutpoly {

// Branch sets of a minor embedding: pattern vertex -> connected, pairwise
// disjoint host vertex set; every pattern edge is covered by a host edge
// between the corresponding sets.
struct MinorWitness {
    std::map<int, std::vector<int>> branch_sets;
};

enum class SearchOutcome { Found, NotFound, BudgetExceeded };

struct MinorResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::optional<MinorWitness> witness;

    bool found() const { return outcome == SearchOutcome::Found; }
};

inline constexpr long long kDefaultMinorBudget = 50'000'000;

// Exhaustive branch-and-bound search; a budget overrun is a third outcome,
// never silently "no".
MinorResult has_minor(const Graph& host, const Graph& pattern,
                      long long budget = kDefaultMinorBudget);

bool verify_minor_witness(const Graph& host, const Graph& pattern,
                          const MinorWitness& w);

struct MinorProfile {
    bool k4_free = false;
    bool k5e_free = false;
    bool k5_free = false;
};

struct BudgetExceededError : std::runtime_error {
    BudgetExceededError() : std::runtime_error("search budget exceeded") {}
};

// Throws BudgetExceededError if any sub-search overruns.
MinorProfile minor_profile(const Graph& g, long long budget = kDefaultMinorBudget);

}  // namespace cutpoly
