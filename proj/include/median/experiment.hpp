#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "median/counters.hpp"
#include "median/datasets.hpp"
#include "median/io.hpp"
#include "median/refine.hpp"

namespace median {

enum class Heuristic { frequency, frequency_cost, repercussion, sweep };

const char* to_string(Heuristic h);
// Accepts the scorer names plus "sweep"; "freqcost" is an alias.
Heuristic parse_heuristic(std::string_view name);

// Resolves "builtin:table1", "builtin:unit", "builtin:circular[:<indel>]"
// or a cost-matrix file path against the dataset alphabet. The circular
// default indel is the smallest integer keeping the model a metric.
CostModel resolve_cost_model(const std::string& source, const Alphabet& alphabet);

// "setmedian" or "literal:<string>" (a fixed starting string over the
// dataset alphabet).
Sequence resolve_init(const std::string& init, const Alphabet& alphabet, const StringSet& set,
                      const CostModel& model);

struct ExperimentConfig {
    std::optional<DatasetSpec> dataset;          // generated data ...
    std::optional<std::filesystem::path> input;  // ... or a string-set file
    std::string costs = "builtin:unit";
    std::string init = "setmedian";
    std::vector<Heuristic> heuristics{Heuristic::repercussion, Heuristic::frequency_cost};
    std::vector<std::size_t> set_sizes;  // empty: the whole dataset
    std::size_t repetitions = 1;
    std::uint64_t seed = 1;
    bool positive_only = false;
    bool deletion_repercussion = true;
    std::size_t max_iterations = 0;
    std::size_t threads = 0;  // 0: hardware concurrency
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> plots;
};

// Flat "key = value" lines; '#' starts a comment. Keys: dataset (a dataset
// spec string), input, costs, init, heuristics, sizes, repetitions, seed,
// positive_only, deletion_repercussion, max_iterations, threads, out, plots.
// Relative paths resolve against `base_dir`.
ExperimentConfig parse_experiment_config(std::istream& in,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct MetricsRow {
    std::string heuristic;
    std::size_t set_size = 0;
    std::size_t rep = 0;
    std::size_t iteration = 0;
    double sum = 0.0;
    OpCounter counters;
    double wall_ms = 0.0;
};

struct RunRecord {
    std::string heuristic;
    std::size_t set_size = 0;
    std::size_t rep = 0;
    std::string median;
    double init_sum = 0.0;
    double final_sum = 0.0;
    std::vector<MetricsRow> rows;

    const OpCounter& final_counters() const { return rows.back().counters; }
    // Sum after the first outer iteration, or the final sum if it stopped
    // immediately.
    double sum_after_first_iteration() const;
};

struct SummaryRow {
    std::string heuristic;
    std::size_t set_size = 0;
    std::size_t runs = 0;
    double mean_final_sum = 0.0;
    double mean_total_ops = 0.0;
    double mean_distance_evals = 0.0;
    double mean_iterations = 0.0;
};

struct RunReport {
    std::vector<RunRecord> runs;  // sorted by (heuristic, set size, rep)
    std::vector<SummaryRow> summary;

    bool empty() const { return runs.empty(); }
    const SummaryRow* find(std::string_view heuristic, std::size_t set_size) const;
};

// One run per (heuristic, set size, repetition). Each repetition draws its
// own dataset (generated with seed + rep) and a shuffled member order;
// the size-k subset is the first k members, so smaller subsets nest in
// larger ones. Every run starts from `init` (by default the subset's set
// median).
RunReport run_experiment(const ExperimentConfig& config);

// Rows for one refinement trace.
std::vector<MetricsRow> rows_from_trace(std::string_view heuristic, std::size_t set_size,
                                        std::size_t rep, const RefinementTrace& trace);

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs);

}  // namespace median
