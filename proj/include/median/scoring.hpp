#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "median/statistics.hpp"

namespace median {

enum class Scorer { frequency, frequency_cost, repercussion };

const char* to_string(Scorer s);
// Accepts "frequency", "frequency_cost" / "freqcost", "repercussion".
Scorer parse_scorer(std::string_view name);

struct ScoredOp {
    EditOp op;
    double direct_gain = 0.0;
    double indirect_delta = 0.0;
    double total_score = 0.0;
    std::vector<std::size_t> supporters;        // demand the op itself
    std::vector<std::size_t> lemma_supporters;  // provably no worse after the op
};

// Canonical queue order: total_score descending, then direct_gain
// descending, then position, kind, and target symbol ascending.
bool ranks_before(const ScoredOp& a, const ScoredOp& b);
void sort_ranked(std::vector<ScoredOp>& ops);

// Score = number of members demanding the op.
std::vector<ScoredOp> score_frequency(const PositionStats& stats, const CostModel& model,
                                      OpCounter* counter = nullptr);

// Score = op cost times number of members demanding it.
std::vector<ScoredOp> score_frequency_cost(const PositionStats& stats, const CostModel& model,
                                           OpCounter* counter = nullptr);

// True iff cost(applied.to -> other.to) <= cost(applied.from -> other.to):
// a member demanding `other` is then no further from the candidate after
// `applied`. Both ops must share kind and position.
bool lemma1_holds(const EditOp& applied, const EditOp& other, const CostModel& model);

struct RepercussionOptions {
    // Let a deletion at j also credit members substituting at j, who could
    // insert their symbol instead.
    bool deletion_repercussion = true;
};

// Direct gain plus the estimated effect on members demanding a competing op
// of the same kind at the same coordinate, each weighted by how many
// members demand it.
std::vector<ScoredOp> score_repercussion(const PositionStats& stats, const CostModel& model,
                                         RepercussionOptions options = {},
                                         OpCounter* counter = nullptr);

std::vector<ScoredOp> score(Scorer scorer, const PositionStats& stats, const CostModel& model,
                            RepercussionOptions options = {}, OpCounter* counter = nullptr);

}  // namespace median
