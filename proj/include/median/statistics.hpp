#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "median/cost_model.hpp"
#include "median/counters.hpp"
#include "median/edit_distance.hpp"
#include "median/string_set.hpp"

namespace median {

// Bucket key for a demanded perturbation of the candidate. For
// substitutions and deletions `position` is a symbol index of the
// candidate; for insertions it is a gap index.
struct OpKey {
    OpKind kind = OpKind::substitution;
    std::size_t position = 0;
    Symbol to = 0;

    friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

// Per-position tallies of the operations members' optimal scripts demand of
// the candidate. Each member lands in at most one symbol bucket and at most
// one gap bucket per coordinate.
class PositionStats {
public:
    PositionStats() = default;
    PositionStats(Sequence candidate, Symbol epsilon)
        : candidate_(std::move(candidate)), epsilon_(epsilon) {}

    const Sequence& candidate() const { return candidate_; }
    Symbol epsilon() const { return epsilon_; }

    void add(const OpKey& key, std::size_t member);

    std::size_t count(const OpKey& key) const;
    const std::vector<std::size_t>& supporters(const OpKey& key) const;

    EditOp to_op(const OpKey& key) const;

    bool empty() const { return buckets_.empty(); }
    const std::map<OpKey, std::vector<std::size_t>>& buckets() const { return buckets_; }

    // Sum of counts over the substitution and deletion buckets at a symbol
    // position, or over the insertion buckets at a gap.
    std::size_t total_at(bool gap, std::size_t position) const;

private:
    Sequence candidate_;
    Symbol epsilon_ = 0;
    std::map<OpKey, std::vector<std::size_t>> buckets_;
};

struct CollectedStats {
    PositionStats stats;
    double sum = 0.0;
    std::vector<EditScript> scripts;  // one per member, transforming the candidate into it
};

// Runs a traceback from the candidate to every member and tallies each
// cost-bearing op by candidate coordinate. When a member's script inserts
// several symbols into one gap, only the first is tallied.
CollectedStats collect_stats(const Sequence& candidate, const StringSet& set,
                             const CostModel& model, OpCounter* counter = nullptr);

}  // namespace median
