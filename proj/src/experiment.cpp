#include "median/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "median/errors.hpp"
#include "median/rng.hpp"

namespace median {

const char* to_string(Heuristic h) {
    switch (h) {
        case Heuristic::frequency: return "frequency";
        case Heuristic::frequency_cost: return "frequency_cost";
        case Heuristic::repercussion: return "repercussion";
        case Heuristic::sweep: return "sweep";
    }
    return "?";
}

Heuristic parse_heuristic(std::string_view name) {
    if (name == "sweep") return Heuristic::sweep;
    switch (parse_scorer(name)) {
        case Scorer::frequency: return Heuristic::frequency;
        case Scorer::frequency_cost: return Heuristic::frequency_cost;
        case Scorer::repercussion: return Heuristic::repercussion;
    }
    return Heuristic::repercussion;
}

CostModel resolve_cost_model(const std::string& source, const Alphabet& alphabet) {
    constexpr std::string_view kBuiltin = "builtin:";
    if (source.rfind(kBuiltin, 0) != 0) {
        return load_cost_matrix(source, alphabet);
    }
    const std::string name = source.substr(kBuiltin.size());
    if (name == "table1") {
        auto [table_alphabet, model] = builtin_table1();
        if (!(table_alphabet == alphabet)) {
            throw InputError("builtin:table1 needs the alphabet '" + table_alphabet.chars() + "'");
        }
        return model;
    }
    if (name == "unit") {
        return CostModel::unit(alphabet.size());
    }
    if (name.rfind("circular", 0) == 0) {
        // Smallest integral indel cost that keeps the model a metric: the
        // largest substitution (half way round) must not beat delete+insert.
        const std::size_t half_turn = alphabet.size() / 2;
        double indel = static_cast<double>(std::max<std::size_t>(1, (half_turn + 1) / 2));
        if (name.size() > 8) {
            if (name[8] != ':') throw InputError("unknown cost model '" + source + "'");
            const char* first = name.data() + 9;
            const char* last = name.data() + name.size();
            auto [ptr, ec] = std::from_chars(first, last, indel);
            if (ec != std::errc{} || ptr != last) {
                throw InputError("bad indel cost in '" + source + "'");
            }
        }
        return CostModel::circular(alphabet.size(), indel);
    }
    throw InputError("unknown cost model '" + source + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        auto item = trim(s.substr(start, comma - start));
        if (!item.empty()) out.push_back(std::move(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("bad value '" + text + "' for '" + key + "'");
    }
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw InputError("bad boolean '" + text + "' for '" + key + "'");
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in, const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "dataset") config.dataset = parse_dataset_spec(value);
            else if (key == "input") config.input = resolve(value);
            else if (key == "costs") {
                config.costs = value.rfind("builtin:", 0) == 0 ? value : resolve(value).string();
            } else if (key == "init") {
                config.init = value;
            } else if (key == "heuristics") {
                config.heuristics.clear();
                for (const auto& h : split_list(value)) config.heuristics.push_back(parse_heuristic(h));
            } else if (key == "sizes") {
                config.set_sizes.clear();
                for (const auto& s : split_list(value)) config.set_sizes.push_back(parse_number<std::size_t>(key, s));
            } else if (key == "repetitions") config.repetitions = parse_number<std::size_t>(key, value);
            else if (key == "seed") config.seed = parse_number<std::uint64_t>(key, value);
            else if (key == "positive_only") config.positive_only = parse_bool(key, value);
            else if (key == "deletion_repercussion") config.deletion_repercussion = parse_bool(key, value);
            else if (key == "max_iterations") config.max_iterations = parse_number<std::size_t>(key, value);
            else if (key == "threads") config.threads = parse_number<std::size_t>(key, value);
            else if (key == "out") config.out = resolve(value);
            else if (key == "plots") config.plots = resolve(value);
            else throw InputError("unknown key '" + key + "'");
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return parse_experiment_config(in, path.parent_path());
}

double RunRecord::sum_after_first_iteration() const {
    return rows.size() > 1 ? rows[1].sum : rows.back().sum;
}

const SummaryRow* RunReport::find(std::string_view heuristic, std::size_t set_size) const {
    for (const auto& s : summary) {
        if (s.heuristic == heuristic && s.set_size == set_size) return &s;
    }
    return nullptr;
}

std::vector<MetricsRow> rows_from_trace(std::string_view heuristic, std::size_t set_size,
                                        std::size_t rep, const RefinementTrace& trace) {
    std::vector<MetricsRow> rows;
    rows.reserve(trace.iterations.size());
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        const TraceEntry& e = trace.iterations[k];
        // Microsecond resolution, so the CSV's three decimals are exact.
        const double wall_ms = std::round(e.wall_ms * 1000.0) / 1000.0;
        rows.push_back({std::string(heuristic), set_size, rep, k, e.sum, e.counters, wall_ms});
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs) {
    std::map<std::pair<std::string, std::size_t>, SummaryRow> acc;
    for (const auto& run : runs) {
        auto& s = acc[{run.heuristic, run.set_size}];
        s.heuristic = run.heuristic;
        s.set_size = run.set_size;
        s.runs += 1;
        s.mean_final_sum += run.final_sum;
        s.mean_total_ops += static_cast<double>(run.final_counters().total());
        s.mean_distance_evals += static_cast<double>(run.final_counters().distance_evals);
        s.mean_iterations += static_cast<double>(run.rows.size());
    }
    std::vector<SummaryRow> out;
    for (auto& [key, s] : acc) {
        const auto n = static_cast<double>(s.runs);
        s.mean_final_sum /= n;
        s.mean_total_ops /= n;
        s.mean_distance_evals /= n;
        s.mean_iterations /= n;
        out.push_back(s);
    }
    return out;
}

namespace {

struct RepData {
    Alphabet alphabet;
    CostModel model;
    StringSet shuffled;
};

RepData prepare_rep(const ExperimentConfig& config, std::size_t rep) {
    LoadedStrings loaded;
    if (config.dataset) {
        DatasetSpec spec = *config.dataset;
        spec.seed = spec.seed + rep;
        auto generated = gen_dataset(spec);
        loaded = {generated.alphabet, std::move(generated.set)};
    } else {
        loaded = load_strings(*config.input);
    }
    std::vector<std::size_t> order(loaded.set.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(config.seed, rep));
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.uniform_int(0, i - 1)]);
    }
    CostModel model = resolve_cost_model(config.costs, loaded.alphabet);
    return {loaded.alphabet, std::move(model), loaded.set.subset(order)};
}

RunRecord run_cell(Heuristic heuristic, std::size_t size, std::size_t rep, const RepData& data,
                   const ExperimentConfig& config) {
    std::vector<std::size_t> ids(size);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    const StringSet subset = data.shuffled.subset(ids);
    const Sequence init = resolve_init(config.init, data.alphabet, subset, data.model);

    RefineResult result;
    if (heuristic == Heuristic::sweep) {
        result = hinarejos_sweep(subset, init, data.model);
    } else {
        RefineConfig rc;
        rc.scorer = parse_scorer(to_string(heuristic));
        rc.positive_only = config.positive_only;
        rc.deletion_repercussion = config.deletion_repercussion;
        rc.max_iterations = config.max_iterations;
        rc.seed = config.seed;
        result = refine(subset, init, data.model, rc);
    }
    RunRecord record;
    record.heuristic = to_string(heuristic);
    record.set_size = size;
    record.rep = rep;
    record.median = data.alphabet.decode(result.median);
    record.init_sum = result.trace.iterations.front().sum;
    record.final_sum = result.sum;
    record.rows = rows_from_trace(record.heuristic, size, rep, result.trace);
    return record;
}

}  // namespace

Sequence resolve_init(const std::string& init, const Alphabet& alphabet, const StringSet& set,
                      const CostModel& model) {
    if (init == "setmedian") return set_median(set, model);
    constexpr std::string_view prefix = "literal:";
    if (init.rfind(prefix, 0) == 0) {
        try {
            return alphabet.encode(init.substr(prefix.size()));
        } catch (const InputError& e) {
            throw InputError("init string: " + std::string(e.what()));
        }
    }
    throw InputError("unknown init '" + init + "' (expected setmedian or literal:<string>)");
}

RunReport run_experiment(const ExperimentConfig& config) {
    if (config.dataset.has_value() == config.input.has_value()) {
        throw InputError("experiment needs exactly one of a dataset spec or an input file");
    }
    if (config.repetitions < 1) throw InputError("repetitions must be >= 1");
    if (config.heuristics.empty()) throw InputError("no heuristics selected");

    std::vector<RepData> reps;
    reps.reserve(config.repetitions);
    for (std::size_t r = 0; r < config.repetitions; ++r) {
        reps.push_back(prepare_rep(config, r));
    }

    std::vector<std::size_t> sizes = config.set_sizes;
    if (sizes.empty()) sizes.push_back(reps.front().shuffled.size());
    for (std::size_t s : sizes) {
        if (s < 1) throw InputError("set sizes must be >= 1");
        for (const auto& r : reps) {
            if (s > r.shuffled.size()) {
                throw InputError("set size " + std::to_string(s) + " exceeds dataset size " +
                                 std::to_string(r.shuffled.size()));
            }
        }
    }

    struct Cell {
        Heuristic heuristic;
        std::size_t size;
        std::size_t rep;
    };
    std::vector<Cell> cells;
    for (Heuristic h : config.heuristics) {
        for (std::size_t s : sizes) {
            for (std::size_t r = 0; r < config.repetitions; ++r) cells.push_back({h, s, r});
        }
    }

    std::vector<RunRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                const Cell& c = cells[i];
                records[i] = run_cell(c.heuristic, c.size, c.rep, reps[c.rep], config);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, cells.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.heuristic, a.set_size, a.rep) < std::tie(b.heuristic, b.set_size, b.rep);
    });
    RunReport report;
    report.runs = std::move(records);
    report.summary = summarize(report.runs);
    return report;
}

}  // namespace median
