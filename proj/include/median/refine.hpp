#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "median/counters.hpp"
#include "median/scoring.hpp"
#include "median/string_set.hpp"

namespace median {

double sum_distances(const Sequence& candidate, const StringSet& set, const CostModel& model,
                     OpCounter* counter = nullptr);

// Member with the smallest distance sum; ties go to the smallest id.
Sequence set_median(const StringSet& set, const CostModel& model, OpCounter* counter = nullptr);

struct RefineConfig {
    Scorer scorer = Scorer::repercussion;
    bool positive_only = false;
    bool deletion_repercussion = true;
    std::size_t max_iterations = 0;  // accepted ops; 0 = unbounded
    std::uint64_t seed = 0;          // reserved, not used by the deterministic queue
};

// One entry per outer iteration. `candidate`/`sum` describe the state the
// iteration started from; `counters` is the cumulative tally when it ended.
struct TraceEntry {
    Sequence candidate;
    double sum = 0.0;
    std::size_t ops_tested = 0;
    std::optional<EditOp> accepted;
    OpCounter counters;
    double wall_ms = 0.0;
};

struct RefinementTrace {
    std::vector<TraceEntry> iterations;
};

struct RefineResult {
    Sequence median;
    double sum = 0.0;
    RefinementTrace trace;
};

// Ranked-queue refinement: gather statistics on the candidate, rank the
// demanded ops with the chosen scorer, try them in order and keep the first
// that strictly lowers the distance sum. Stops after an iteration in which
// no queued op helps.
RefineResult refine(const StringSet& set, const Sequence& init, const CostModel& model,
                    const RefineConfig& config = {});

// Exhaustive baseline: per pass, tries every substitution, then every
// deletion, then every insertion, moving to the best strictly improving
// candidate of each family. Repeats until a full pass changes nothing.
RefineResult hinarejos_sweep(const StringSet& set, const Sequence& init, const CostModel& model);

}  // namespace median
