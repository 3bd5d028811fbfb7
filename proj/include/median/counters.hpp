#pragma once

#include <cstdint>

namespace median {

// Elementary-operation tallies for one run. Passed by pointer to the
// routines that do the work; a null pointer disables counting.
struct OpCounter {
    std::uint64_t dp_cells = 0;
    std::uint64_t distance_evals = 0;
    std::uint64_t stat_updates = 0;
    std::uint64_t rep_updates = 0;

    std::uint64_t total() const { return dp_cells + stat_updates + rep_updates; }

    OpCounter& operator+=(const OpCounter& o) {
        dp_cells += o.dp_cells;
        distance_evals += o.distance_evals;
        stat_updates += o.stat_updates;
        rep_updates += o.rep_updates;
        return *this;
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace median
