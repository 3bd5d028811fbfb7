#include "median/statistics.hpp"

namespace median {

namespace {
const std::vector<std::size_t> kNoMembers;
}

void PositionStats::add(const OpKey& key, std::size_t member) {
    buckets_[key].push_back(member);
}

std::size_t PositionStats::count(const OpKey& key) const {
    auto it = buckets_.find(key);
    return it == buckets_.end() ? 0 : it->second.size();
}

const std::vector<std::size_t>& PositionStats::supporters(const OpKey& key) const {
    auto it = buckets_.find(key);
    return it == buckets_.end() ? kNoMembers : it->second;
}

EditOp PositionStats::to_op(const OpKey& key) const {
    switch (key.kind) {
        case OpKind::substitution:
            return substitution_op(key.position, candidate_.at(key.position), key.to);
        case OpKind::deletion:
            return deletion_op(key.position, candidate_.at(key.position), epsilon_);
        case OpKind::insertion:
            return insertion_op(key.position, key.to, epsilon_);
    }
    return {};
}

std::size_t PositionStats::total_at(bool gap, std::size_t position) const {
    std::size_t total = 0;
    for (const auto& [key, ids] : buckets_) {
        if (key.position == position && (key.kind == OpKind::insertion) == gap) {
            total += ids.size();
        }
    }
    return total;
}

CollectedStats collect_stats(const Sequence& candidate, const StringSet& set,
                             const CostModel& model, OpCounter* counter) {
    CollectedStats out;
    out.stats = PositionStats(candidate, model.epsilon());
    out.scripts.reserve(set.size());
    for (std::size_t id = 0; id < set.size(); ++id) {
        auto [cost, script] = distance_with_script(candidate, set[id], model, counter);
        out.sum += cost;
        bool have_gap = false;
        std::size_t last_gap = 0;
        for (const EditOp& op : script.ops) {
            if (op.kind == OpKind::insertion) {
                if (have_gap && last_gap == op.position) {
                    continue;
                }
                have_gap = true;
                last_gap = op.position;
            }
            const Symbol to = op.kind == OpKind::deletion ? model.epsilon() : op.to;
            out.stats.add({op.kind, op.position, to}, id);
            if (counter != nullptr) {
                ++counter->stat_updates;
            }
        }
        out.scripts.push_back(std::move(script));
    }
    return out;
}

}  // namespace median
