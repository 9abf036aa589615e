#include "cutpoly/simplex.hpp"

#include <stdexcept>

namespace cutpoly {

bool rational_feasible(const std::vector<RatVec>& columns, const RatVec& b) {
    const size_t rows = b.size();
    const size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != rows) throw std::invalid_argument("column dimension mismatch");

    // Tableau over structural columns, artificial columns and rhs.
    // Rows are sign-flipped so the rhs is nonnegative; the artificial basis
    // is then feasible and phase-1 minimizes the sum of artificials.
    const size_t total = n + rows;
    std::vector<RatVec> t(rows, RatVec(total + 1, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        bool flip = b[i] < 0;
        for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -columns[j][i] : columns[j][i];
        t[i][n + i] = 1;
        t[i][total] = flip ? -b[i] : b[i];
    }
    std::vector<size_t> basis(rows);
    RatVec cost(total + 1, Rat(0));
    for (size_t i = 0; i < rows; ++i) {
        basis[i] = n + i;
        // reduced costs: artificials cost 1, subtract basic rows
        for (size_t j = 0; j <= total; ++j) cost[j] -= t[i][j];
    }
    for (size_t j = 0; j < rows; ++j) cost[n + j] += 1;

    while (true) {
        // Bland: entering = smallest index with negative reduced cost
        size_t enter = total;
        for (size_t j = 0; j < total; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;
        // ratio test, ties broken by smallest basis index (Bland)
        size_t leave = rows;
        Rat best;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error("phase-1 objective unbounded");  // cannot happen
        Rat piv = t[leave][enter];
        for (size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (size_t j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // feasible iff all artificials are driven to zero
    Rat objective(0);
    for (size_t i = 0; i < rows; ++i)
        if (basis[i] >= n) objective += t[i][total];
    return objective == 0;
}

}  // namespace cutpoly
