// median: approximate median strings by ranked-perturbation refinement.
//
//   median compute --input set.txt --builtin-table1 --heuristic repercussion --out run.csv
//   median bench --config experiment.cfg
//   median gen --gen kind=perturbed_cluster,count=20 --out set.txt

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

#include "median/errors.hpp"
#include "median/experiment.hpp"
#include "median/report.hpp"

namespace {

using namespace median;

struct ComputeOptions {
    std::string input;
    std::string gen;
    std::string costs;
    bool builtin_table1 = false;
    std::string cost_model;
    std::string init = "setmedian";
    std::string heuristic = "repercussion";
    bool positive_only = false;
    bool no_del_rep = false;
    std::size_t max_iterations = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string plots;
};

int run_compute(const ComputeOptions& opt) {
    LoadedStrings data;
    if (!opt.gen.empty()) {
        DatasetSpec spec = parse_dataset_spec(opt.gen);
        if (opt.seed != 0) spec.seed = opt.seed;
        auto generated = gen_dataset(spec);
        data = {generated.alphabet, std::move(generated.set)};
    } else {
        data = load_strings(opt.input);
    }
    if (data.set.empty()) throw InputError("input set is empty");

    std::string source = "builtin:unit";
    if (opt.builtin_table1) source = "builtin:table1";
    else if (!opt.costs.empty()) source = opt.costs;
    else if (!opt.cost_model.empty()) source = "builtin:" + opt.cost_model;
    const CostModel model = resolve_cost_model(source, data.alphabet);
    if (!model.metric_validated()) {
        std::cerr << "warning: cost model is not a metric";
        for (const auto& v : validate_cost_model(model)) std::cerr << "; " << to_string(v);
        std::cerr << '\n';
    }

    const Sequence init = resolve_init(opt.init, data.alphabet, data.set, model);
    const Heuristic heuristic = parse_heuristic(opt.heuristic);
    RefineResult result;
    if (heuristic == Heuristic::sweep) {
        result = hinarejos_sweep(data.set, init, model);
    } else {
        RefineConfig rc;
        rc.scorer = parse_scorer(opt.heuristic);
        rc.positive_only = opt.positive_only;
        rc.deletion_repercussion = !opt.no_del_rep;
        rc.max_iterations = opt.max_iterations;
        rc.seed = opt.seed;
        result = refine(data.set, init, model, rc);
    }

    RunRecord run;
    run.heuristic = to_string(heuristic);
    run.set_size = data.set.size();
    run.median = data.alphabet.decode(result.median);
    run.init_sum = result.trace.iterations.front().sum;
    run.final_sum = result.sum;
    run.rows = rows_from_trace(run.heuristic, run.set_size, 0, result.trace);
    RunReport report;
    report.runs.push_back(run);
    report.summary = summarize(report.runs);

    std::cout << "median\t" << run.median << '\n'
              << "sum\t" << format_number(run.final_sum) << '\n'
              << "init_sum\t" << format_number(run.init_sum) << '\n'
              << "iterations\t" << run.rows.size() << '\n'
              << "total_ops\t" << run.final_counters().total() << '\n'
              << "distance_evals\t" << run.final_counters().distance_evals << '\n';
    if (!opt.out.empty()) emit_csv(report, opt.out);
    if (!opt.plots.empty()) emit_plots(report, opt.plots);
    return 0;
}

int run_bench(const std::string& config_path, const std::string& out_override,
              const std::string& plots_override) {
    ExperimentConfig config = load_experiment_config(config_path);
    if (!out_override.empty()) config.out = out_override;
    if (!plots_override.empty()) config.plots = plots_override;
    const RunReport report = run_experiment(config);

    std::cout << std::left << std::setw(16) << "heuristic" << std::setw(8) << "size"
              << std::setw(14) << "final_sum" << std::setw(16) << "total_ops"
              << "distance_evals\n";
    for (const auto& s : report.summary) {
        std::cout << std::left << std::setw(16) << s.heuristic << std::setw(8) << s.set_size
                  << std::setw(14) << s.mean_final_sum << std::setw(16) << s.mean_total_ops
                  << s.mean_distance_evals << '\n';
    }
    if (config.out) emit_csv(report, *config.out);
    if (config.plots) emit_plots(report, *config.plots);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate median strings by ranked-perturbation refinement"};
    app.require_subcommand(1);

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "Refine a median for one string set");
    auto* input = compute->add_option("--input", copt.input, "String-set file");
    auto* gen = compute->add_option("--gen", copt.gen, "Dataset spec, e.g. kind=perturbed_cluster,count=20");
    input->excludes(gen);
    auto* costs = compute->add_option("--costs", copt.costs, "Cost matrix file");
    auto* table1 = compute->add_flag("--builtin-table1", copt.builtin_table1, "Use the built-in {0,1,2,4} table");
    auto* cost_model = compute->add_option("--cost-model", copt.cost_model, "Built-in model: unit | circular[:<indel>]");
    costs->excludes(table1)->excludes(cost_model);
    table1->excludes(cost_model);
    compute->add_option("--init", copt.init, "Initial string: setmedian or literal:<string>");
    compute->add_option("--heuristic", copt.heuristic, "repercussion | frequency | freqcost | sweep")
        ->check(CLI::IsMember({"repercussion", "frequency", "freqcost", "frequency_cost", "sweep"}));
    compute->add_flag("--positive-only", copt.positive_only, "Only try ops with a positive score");
    compute->add_flag("--no-del-rep", copt.no_del_rep, "Disable the deletion repercussion term");
    compute->add_option("--max-iterations", copt.max_iterations, "Cap on accepted ops (0 = none)");
    compute->add_option("--seed", copt.seed, "Dataset seed override for --gen");
    compute->add_option("--out", copt.out, "Metrics CSV path");
    compute->add_option("--plots", copt.plots, "Directory for SVG plots");

    std::string config_path, bench_out, bench_plots;
    auto* bench = app.add_subcommand("bench", "Run a heuristic comparison experiment");
    bench->add_option("--config", config_path, "key=value experiment file")->required();
    bench->add_option("--out", bench_out, "Override the CSV path");
    bench->add_option("--plots", bench_plots, "Override the plot directory");

    std::string gen_spec, gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic string set");
    gen_cmd->add_option("--gen", gen_spec, "Dataset spec")->required();
    gen_cmd->add_option("--out", gen_out, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            if (copt.input.empty() && copt.gen.empty()) {
                throw InputError("compute needs --input or --gen");
            }
            return run_compute(copt);
        }
        if (*bench) return run_bench(config_path, bench_out, bench_plots);
        if (*gen_cmd) {
            auto generated = gen_dataset(parse_dataset_spec(gen_spec));
            save_strings(gen_out, generated.alphabet, generated.set);
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
