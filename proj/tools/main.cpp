// actinfo command-line tool.
//
// Subcommands: measure, regime, sweep, markov, finetune. Structured reports
// go to standard output as JSON; sweep and trajectory data go to CSV files.
// Warnings and run notes go to standard error only, so data outputs are
// byte-identical across repeated runs.
//
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 I/O error.

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actinfo/io.hpp"

namespace {

using namespace actinfo;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct MeasureArgs {
    std::string p1_file, p2_file, target_file, base_flag = "2";
};

struct RegimeArgs {
    double p = 0.0, q = 0.0;
    std::string base_flag = "2";
};

struct SweepArgs {
    std::string kind, out_path, base_flag = "2";
    double grid_min = 0.0, grid_max = 0.0;
    std::size_t grid_steps = 0;
};

struct MarkovArgs {
    std::string graph_file, p1_file, target_file, out_path, base_flag = "2";
    std::size_t steps = 0;
    double laziness = -1.0;  // <0 means "not set": use the graph default
};

struct FinetuneArgs {
    std::string family_file, base_flag = "2";
    std::vector<double> target;  // [a, b]
    double delta = 0.0;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output path: " + path);
    return out;
}

void run_measure(const MeasureArgs& args) {
    const LogBase base = LogBase::from_flag(args.base_flag);
    FiniteDistribution p1 = load_distribution(args.p1_file);
    FiniteDistribution p2 = load_distribution(args.p2_file);
    Event target = load_event(args.target_file, p1.size());

    if (!p1.same_labels(p2)) {
        const std::vector<std::string> original_labels = p1.labels();
        auto [m1, m2] = merge_spaces(p1, p2);
        target = remap_event(target, original_labels, m1);
        p1 = std::move(m1);
        p2 = std::move(m2);
        std::cerr << "note: label sets differ; both distributions were extended to the "
                  << p1.size() << "-outcome union space\n";
    }
    const MeasureReport report = full_report(p1, p2, target, base);
    std::cout << measure_report_json(report).dump(2) << '\n';
}

void run_regime(const RegimeArgs& args) {
    const LogBase base = LogBase::from_flag(args.base_flag);
    const RegimeReport report = regime_report(args.p, args.q, base);
    if (args.p > kTargetFractionWarnAbove)
        std::cerr << "warning: p = " << args.p
                  << " is large; the regime classification assumes a small target fraction "
                     "(p well below 1/2)\n";
    std::cout << regime_report_json(report).dump(2) << '\n';
}

void run_sweep(const SweepArgs& args) {
    static const std::map<std::string, SweepKind> kinds = {
        {"total_info_curve", SweepKind::TotalInfoCurve},
        {"entropy_curve", SweepKind::EntropyCurve},
        {"cai_surface", SweepKind::CaiSurface},
        {"kl_surface", SweepKind::KlSurface},
    };
    const SweepSpec spec{kinds.at(args.kind),
                         SweepGrid{args.grid_min, args.grid_max, args.grid_steps},
                         LogBase::from_flag(args.base_flag)};

    spec.grid.validate();
    auto out = open_output(args.out_path);
    if (is_curve(spec.kind))
        write_curve_csv(out, bernoulli_curve(spec.kind, spec.grid, spec.base));
    else
        write_surface_csv(out, bernoulli_surface(spec.kind, spec.grid, spec.base));
    std::cerr << "wrote " << args.out_path << '\n';
}

void run_markov(const MarkovArgs& args) {
    const LogBase base = LogBase::from_flag(args.base_flag);
    const RegularGraph graph = load_graph(args.graph_file);
    const FiniteDistribution start = load_distribution(args.p1_file);
    const Event target = load_event(args.target_file, graph.vertex_count());

    WalkConfig config;
    config.steps = args.steps;
    config.laziness = args.laziness < 0.0 ? default_laziness(graph) : args.laziness;
    if (args.laziness < 0.0 && config.laziness > 0.0)
        std::cerr << "note: graph is bipartite; using laziness " << config.laziness
                  << " to make the walk aperiodic\n";

    const auto points = trajectory(start, graph, target, config, base);
    auto out = open_output(args.out_path);
    write_trajectory_csv(out, points);
    std::cerr << "wrote " << args.out_path << '\n';
}

void run_finetune(const FinetuneArgs& args) {
    const LogBase base = LogBase::from_flag(args.base_flag);
    const ParamFamily family = load_family(args.family_file);
    const Event target = target_event(family, args.target.at(0), args.target.at(1));
    const TuningResult result = fine_tuning_report(family, target, args.delta, base);
    std::cout << tuning_result_json(result).dump(2) << '\n';
}

void add_base_flag(CLI::App* cmd, std::string& flag) {
    cmd->add_option("--base", flag, "log base: 2, e, or 10")
        ->check(CLI::IsMember({"2", "e", "10"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "information measures over finite discrete distributions:\n"
        "active information, total information, conserved active information,\n"
        "divergences, knowledge regimes, random-walk trajectories, and\n"
        "fine-tuning estimation"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    auto* measure = app.add_subcommand(
        "measure", "full measure report for a baseline/informed pair and a target event");
    measure->add_option("--p1", measure_args.p1_file, "baseline distribution JSON")->required();
    measure->add_option("--p2", measure_args.p2_file, "informed distribution JSON")->required();
    measure
        ->add_option("--target", measure_args.target_file,
                     "target event JSON (indices into the p1 label list)")
        ->required();
    add_base_flag(measure, measure_args.base_flag);

    RegimeArgs regime_args;
    auto* regime =
        app.add_subcommand("regime", "classify a (p, q) pair under the uniform baseline");
    regime->add_option("p", regime_args.p, "baseline target probability, 0 < p < 1/2")
        ->required();
    regime->add_option("q", regime_args.q, "informed target probability in [0,1]")->required();
    add_base_flag(regime, regime_args.base_flag);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "emit curve/surface CSV grids over Ber(p), Ber(q)");
    sweep
        ->add_option("--kind", sweep_args.kind,
                     "total_info_curve | entropy_curve | cai_surface | kl_surface")
        ->required()
        ->check(CLI::IsMember({"total_info_curve", "entropy_curve", "cai_surface", "kl_surface"}));
    sweep->add_option("--min", sweep_args.grid_min, "grid minimum in (0,1)")->required();
    sweep->add_option("--max", sweep_args.grid_max, "grid maximum in (0,1)")->required();
    sweep->add_option("--steps", sweep_args.grid_steps, "grid points per axis (>= 2)")->required();
    sweep->add_option("--out", sweep_args.out_path, "output CSV path")->required();
    add_base_flag(sweep, sweep_args.base_flag);

    MarkovArgs markov_args;
    auto* markov = app.add_subcommand(
        "markov", "trace target probability along a lazy random walk on a regular graph");
    markov->add_option("--graph", markov_args.graph_file, "graph JSON")->required();
    markov->add_option("--p1", markov_args.p1_file, "initial distribution JSON")->required();
    markov->add_option("--target", markov_args.target_file, "target event JSON")->required();
    markov->add_option("--steps", markov_args.steps, "number of walk steps")->required();
    markov->add_option("--laziness", markov_args.laziness,
                       "stay-put probability in [0,1); default 0.5 for bipartite graphs, else 0");
    markov->add_option("--out", markov_args.out_path, "output CSV path")->required();
    add_base_flag(markov, markov_args.base_flag);

    FinetuneArgs finetune_args;
    auto* finetune = app.add_subcommand(
        "finetune", "maximize target probability over a hyperparameter grid");
    finetune->add_option("--family", finetune_args.family_file, "family JSON")->required();
    finetune
        ->add_option("--target", finetune_args.target, "target interval: two numbers a b")
        ->required()
        ->expected(2);
    finetune->add_option("--delta", finetune_args.delta, "tuning level in (0,1)")->required();
    add_base_flag(finetune, finetune_args.base_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (measure->parsed()) run_measure(measure_args);
        if (regime->parsed()) run_regime(regime_args);
        if (sweep->parsed()) run_sweep(sweep_args);
        if (markov->parsed()) run_markov(markov_args);
        if (finetune->parsed()) run_finetune(finetune_args);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
