#include "median/refine.hpp"

#include <chrono>
#include <limits>

#include "median/errors.hpp"

namespace median {

double sum_distances(const Sequence& candidate, const StringSet& set, const CostModel& model,
                     OpCounter* counter) {
    double total = 0.0;
    for (const Sequence& member : set.members) {
        total += distance(candidate, member, model, counter);
    }
    return total;
}

Sequence set_median(const StringSet& set, const CostModel& model, OpCounter* counter) {
    if (set.empty()) {
        throw InputError("set median of an empty set");
    }
    std::size_t best = 0;
    double best_sum = std::numeric_limits<double>::infinity();
    for (std::size_t id = 0; id < set.size(); ++id) {
        const double s = sum_distances(set[id], set, model, counter);
        if (s < best_sum - kCostTolerance) {
            best_sum = s;
            best = id;
        }
    }
    return set[best];
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_valid(const StringSet& set, const Sequence& init, const CostModel& model) {
    if (set.empty()) {
        throw InputError("cannot refine a median for an empty set");
    }
    check_sequence(init, model);
    for (const Sequence& m : set.members) {
        check_sequence(m, model);
    }
}

}  // namespace

RefineResult refine(const StringSet& set, const Sequence& init, const CostModel& model,
                    const RefineConfig& config) {
    require_valid(set, init, model);
    const auto start = Clock::now();
    const RepercussionOptions rep_options{config.deletion_repercussion};

    OpCounter counter;
    RefineResult result;
    Sequence candidate = init;
    std::size_t accepted_count = 0;

    while (true) {
        TraceEntry entry;
        entry.candidate = candidate;

        if (config.max_iterations != 0 && accepted_count >= config.max_iterations) {
            entry.sum = sum_distances(candidate, set, model, &counter);
            entry.counters = counter;
            entry.wall_ms = elapsed_ms(start);
            result.trace.iterations.push_back(std::move(entry));
            break;
        }

        const CollectedStats collected = collect_stats(candidate, set, model, &counter);
        entry.sum = collected.sum;
        std::vector<ScoredOp> queue =
            score(config.scorer, collected.stats, model, rep_options, &counter);

        for (const ScoredOp& scored : queue) {
            if (config.positive_only && !(scored.total_score > kCostTolerance)) {
                break;  // queue is sorted, nothing positive follows
            }
            ++entry.ops_tested;
            Sequence next = apply_op(candidate, scored.op);
            const double s = sum_distances(next, set, model, &counter);
            if (s < collected.sum - kCostTolerance) {
                entry.accepted = scored.op;
                candidate = std::move(next);
                break;
            }
        }
        entry.counters = counter;
        entry.wall_ms = elapsed_ms(start);
        const bool improved = entry.accepted.has_value();
        result.trace.iterations.push_back(std::move(entry));
        if (!improved) {
            break;
        }
        ++accepted_count;
    }

    result.median = candidate;
    result.sum = result.trace.iterations.back().sum;
    return result;
}

RefineResult hinarejos_sweep(const StringSet& set, const Sequence& init, const CostModel& model) {
    require_valid(set, init, model);
    const auto start = Clock::now();
    const Symbol eps = model.epsilon();
    const auto sigma = static_cast<Symbol>(model.alphabet_size());

    OpCounter counter;
    RefineResult result;
    Sequence candidate = init;
    double current = sum_distances(candidate, set, model, &counter);
    std::size_t tested = 0;

    auto record = [&](std::optional<EditOp> accepted) {
        TraceEntry entry;
        entry.candidate = candidate;
        entry.sum = current;
        entry.ops_tested = tested;
        entry.accepted = accepted;
        entry.counters = counter;
        entry.wall_ms = elapsed_ms(start);
        result.trace.iterations.push_back(std::move(entry));
        tested = 0;
    };

    // Best strictly improving op of one family, first found on ties.
    auto best_of = [&](OpKind kind) -> std::optional<std::pair<EditOp, double>> {
        std::optional<std::pair<EditOp, double>> best;
        double best_sum = current - kCostTolerance;
        auto consider = [&](const EditOp& op) {
            ++tested;
            const double s = sum_distances(apply_op(candidate, op), set, model, &counter);
            if (s < best_sum) {
                best_sum = s;
                best = std::pair{op, s};
            }
        };
        const std::size_t len = candidate.size();
        switch (kind) {
            case OpKind::substitution:
                for (std::size_t p = 0; p < len; ++p) {
                    for (Symbol c = 0; c < sigma; ++c) {
                        if (c != candidate[p]) consider(substitution_op(p, candidate[p], c));
                    }
                }
                break;
            case OpKind::deletion:
                for (std::size_t p = 0; p < len; ++p) consider(deletion_op(p, candidate[p], eps));
                break;
            case OpKind::insertion:
                for (std::size_t g = 0; g <= len; ++g) {
                    for (Symbol c = 0; c < sigma; ++c) consider(insertion_op(g, c, eps));
                }
                break;
        }
        return best;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (OpKind kind : {OpKind::substitution, OpKind::deletion, OpKind::insertion}) {
            if (auto best = best_of(kind)) {
                record(best->first);
                candidate = apply_op(candidate, best->first);
                current = best->second;
                changed = true;
            }
        }
    }
    record(std::nullopt);

    result.median = candidate;
    result.sum = current;
    return result;
}

}  // namespace median
