#include "median/scoring.hpp"

#include <algorithm>

#include "median/errors.hpp"

namespace median {

const char* to_string(Scorer s) {
    switch (s) {
        case Scorer::frequency: return "frequency";
        case Scorer::frequency_cost: return "frequency_cost";
        case Scorer::repercussion: return "repercussion";
    }
    return "?";
}

Scorer parse_scorer(std::string_view name) {
    if (name == "frequency") return Scorer::frequency;
    if (name == "frequency_cost" || name == "freqcost") return Scorer::frequency_cost;
    if (name == "repercussion") return Scorer::repercussion;
    throw InputError("unknown heuristic '" + std::string(name) + "'");
}

bool ranks_before(const ScoredOp& a, const ScoredOp& b) {
    if (!costs_equal(a.total_score, b.total_score)) return a.total_score > b.total_score;
    if (!costs_equal(a.direct_gain, b.direct_gain)) return a.direct_gain > b.direct_gain;
    if (a.op.position != b.op.position) return a.op.position < b.op.position;
    if (a.op.kind != b.op.kind) return a.op.kind < b.op.kind;
    return a.op.to < b.op.to;
}

void sort_ranked(std::vector<ScoredOp>& ops) {
    std::stable_sort(ops.begin(), ops.end(), ranks_before);
}

namespace {

ScoredOp direct_only(const OpKey& key, const std::vector<std::size_t>& ids,
                     const PositionStats& stats, const CostModel& model) {
    ScoredOp s;
    s.op = stats.to_op(key);
    s.supporters = ids;
    s.direct_gain = op_cost(s.op, model) * static_cast<double>(ids.size());
    return s;
}

}  // namespace

std::vector<ScoredOp> score_frequency(const PositionStats& stats, const CostModel& model,
                                      OpCounter* /*counter*/) {
    std::vector<ScoredOp> out;
    for (const auto& [key, ids] : stats.buckets()) {
        ScoredOp s = direct_only(key, ids, stats, model);
        s.total_score = static_cast<double>(ids.size());
        out.push_back(std::move(s));
    }
    sort_ranked(out);
    return out;
}

std::vector<ScoredOp> score_frequency_cost(const PositionStats& stats, const CostModel& model,
                                           OpCounter* /*counter*/) {
    std::vector<ScoredOp> out;
    for (const auto& [key, ids] : stats.buckets()) {
        ScoredOp s = direct_only(key, ids, stats, model);
        s.total_score = s.direct_gain;
        out.push_back(std::move(s));
    }
    sort_ranked(out);
    return out;
}

bool lemma1_holds(const EditOp& applied, const EditOp& other, const CostModel& model) {
    if (applied.kind != other.kind) {
        throw InputError("lemma check needs operations of the same kind");
    }
    if (applied.position != other.position) {
        throw InputError("lemma check needs operations at the same position");
    }
    if (applied.from != other.from) {
        throw InputError("lemma check needs operations on the same source symbol");
    }
    return model.cost(applied.to, other.to) <= model.cost(applied.from, other.to) + kCostTolerance;
}

std::vector<ScoredOp> score_repercussion(const PositionStats& stats, const CostModel& model,
                                         RepercussionOptions options, OpCounter* counter) {
    const auto& buckets = stats.buckets();
    const Symbol eps = stats.epsilon();
    std::vector<ScoredOp> out;
    out.reserve(buckets.size());

    // Buckets sharing kind and position are contiguous in key order.
    auto same_slot = [&](OpKind kind, std::size_t pos) {
        auto lo = buckets.lower_bound(OpKey{kind, pos, 0});
        auto hi = lo;
        while (hi != buckets.end() && hi->first.kind == kind && hi->first.position == pos) {
            ++hi;
        }
        return std::pair{lo, hi};
    };

    for (const auto& [key, ids] : buckets) {
        ScoredOp s = direct_only(key, ids, stats, model);
        const Symbol from = s.op.from;
        const Symbol to = s.op.to;

        // A member demanding (from -> c) here could instead take (to -> c)
        // after the op; the difference is its estimated change in distance.
        auto credit = [&](OpKind kind, Symbol replacement_from) {
            auto [lo, hi] = same_slot(kind, key.position);
            for (auto it = lo; it != hi; ++it) {
                if (it->first == key) {
                    continue;
                }
                const Symbol c = it->first.to;
                const double before = model.cost(from, c);
                const double after = model.cost(replacement_from, c);
                s.indirect_delta += static_cast<double>(it->second.size()) * (before - after);
                if (after <= before + kCostTolerance) {
                    s.lemma_supporters.insert(s.lemma_supporters.end(), it->second.begin(),
                                              it->second.end());
                }
                if (counter != nullptr) {
                    ++counter->rep_updates;
                }
            }
        };

        if (key.kind == OpKind::deletion) {
            if (options.deletion_repercussion) {
                credit(OpKind::substitution, eps);
            }
        } else {
            credit(key.kind, to);
        }
        std::sort(s.lemma_supporters.begin(), s.lemma_supporters.end());
        s.total_score = s.direct_gain + s.indirect_delta;
        out.push_back(std::move(s));
    }
    sort_ranked(out);
    return out;
}

std::vector<ScoredOp> score(Scorer scorer, const PositionStats& stats, const CostModel& model,
                            RepercussionOptions options, OpCounter* counter) {
    switch (scorer) {
        case Scorer::frequency: return score_frequency(stats, model, counter);
        case Scorer::frequency_cost: return score_frequency_cost(stats, model, counter);
        case Scorer::repercussion: return score_repercussion(stats, model, options, counter);
    }
    return {};
}

}  // namespace median
