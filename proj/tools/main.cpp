// Command-line front end: scenario ensembles, R0 calibration, app-usage
// sweeps, graph extension and the economics report, all emitting CSV.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ctsim/config.hpp"
#include "ctsim/econ.hpp"
#include "ctsim/ensemble.hpp"
#include "ctsim/report.hpp"
#include "ctsim/synthetic.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string data_path;
    std::string out_dir = ".";
    int trials = -1;
    long long seed = -1;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON run configuration file");
    cmd->add_option("--data", args.data_path,
                    "proximity log path (bundled synthetic data when omitted)");
    cmd->add_option("--out", args.out_dir, "output directory for CSV artifacts");
    cmd->add_option("--trials", args.trials, "trials per ensemble");
    cmd->add_option("--seed", args.seed, "master RNG seed");
    cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
}

ctsim::RunConfig make_run_config(const CommonArgs& args) {
    ctsim::RunConfig cfg;
    if (!args.config_path.empty()) cfg = ctsim::RunConfig::from_json_file(args.config_path);
    if (!args.data_path.empty()) cfg.data_path = args.data_path;
    if (args.trials > 0) cfg.ensemble.trials = args.trials;
    if (args.seed >= 0) cfg.ensemble.master_seed = static_cast<std::uint64_t>(args.seed);
    if (args.threads > 0) cfg.ensemble.threads = args.threads;
    return cfg;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void print_summary(const ctsim::AggregateResult& agg) {
    std::cout << "trials=" << agg.trials << " infected=" << agg.mean_infected
              << " q_false=" << agg.mean_quarantine_false
              << " q_true=" << agg.mean_quarantine_true
              << " q_tested=" << agg.mean_quarantine_tested
              << " tests=" << agg.mean_tests_used << '\n';
}

int cmd_run(const CommonArgs& args, int scenario, double app, double asymp) {
    ctsim::RunConfig cfg = make_run_config(args);
    cfg.sim.scenario = ctsim::build_scenario(scenario, app, asymp);
    const auto graph = ctsim::load_run_graph(cfg);
    const auto agg = ctsim::run_ensemble(cfg.sim, graph, cfg.ensemble);
    print_summary(agg);
    auto metrics = open_out(args.out_dir, "metrics.csv");
    ctsim::write_metrics_csv(metrics, agg);
    auto series = open_out(args.out_dir, "series.csv");
    ctsim::write_series_csv(series, agg);
    return 0;
}

int cmd_calibrate(const CommonArgs& args) {
    ctsim::RunConfig cfg = make_run_config(args);
    const auto graph = ctsim::load_run_graph(cfg);
    const auto curve =
        ctsim::calibrate_r0(cfg.sim, graph, cfg.ensemble, ctsim::default_p_grid());
    auto out = open_out(args.out_dir, "r0_curve.csv");
    ctsim::write_r0_csv(out, curve);
    for (const auto& [p, r0] : curve)
        if (std::abs(p - 0.10) < 1e-9)
            std::cout << "p=0.10 -> R0=" << r0 << '\n';
    return 0;
}

int cmd_sweep(const CommonArgs& args, int scenario, double asymp) {
    ctsim::RunConfig cfg = make_run_config(args);
    cfg.sim.scenario = ctsim::build_scenario(scenario, 0.0, asymp);
    const auto graph = ctsim::load_run_graph(cfg);
    const auto curve = ctsim::sweep_app_usage(cfg.sim, graph, cfg.ensemble);
    auto out = open_out(args.out_dir, "sweep.csv");
    ctsim::write_sweep_csv(out, curve);
    std::cout << "sweep rows: " << curve.size() << '\n';
    return 0;
}

int cmd_extend(const CommonArgs& args, std::uint32_t target_n) {
    ctsim::RunConfig cfg = make_run_config(args);
    const auto graph = ctsim::load_run_graph(cfg);
    ctsim::Rng rng(ctsim::derived_seed(cfg.ensemble.master_seed, 1));
    const auto extended = ctsim::extend_graph(graph, target_n, rng);
    auto out = open_out(args.out_dir, "extended_graph.csv");
    ctsim::write_graph_csv(out, extended);
    std::cout << "population=" << extended.population
              << " mean_daily_degree=" << extended.mean_daily_degree()
              << " (original " << graph.mean_daily_degree() << ")\n";
    return 0;
}

int cmd_report(const CommonArgs& args, int scenario, double asymp,
               std::vector<double> usages) {
    if (usages.empty()) usages = {0.30, 0.50, 0.70, 0.95};
    ctsim::RunConfig cfg = make_run_config(args);
    const auto graph = ctsim::load_run_graph(cfg);
    const ctsim::CostModel model;

    ctsim::RunConfig base_cfg = cfg;
    base_cfg.sim.scenario = ctsim::build_scenario(1, 0.0, asymp);
    const auto baseline = ctsim::run_ensemble(base_cfg.sim, graph, base_cfg.ensemble);

    std::vector<ctsim::EconRow> rows;
    rows.push_back(ctsim::make_econ_row(1, 0.0, asymp, baseline, baseline, 0, model));
    for (double usage : usages) {
        ctsim::RunConfig run_cfg = cfg;
        run_cfg.sim.scenario = ctsim::build_scenario(scenario, usage, asymp);
        const auto agg = ctsim::run_ensemble(run_cfg.sim, graph, run_cfg.ensemble);
        const int users = static_cast<int>(
            std::llround(usage * run_cfg.sim.scenario.population));
        rows.push_back(ctsim::make_econ_row(scenario, usage, asymp, agg, baseline, users, model));
        std::cout << "scenario " << scenario << " @" << usage * 100
                  << "% app: infected=" << agg.mean_infected
                  << " per_user_value=" << rows.back().per_user_value << '\n';
    }
    auto out = open_out(args.out_dir, "econ_report.csv");
    ctsim::write_econ_csv(out, rows);
    return 0;
}

int cmd_synth(const std::string& out_path, std::uint64_t seed) {
    ctsim::SyntheticConfig cfg;
    if (seed != 0) cfg.seed = seed;
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    ctsim::write_synthetic_log(out, cfg);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"COVID-19 digital contact tracing simulator"};
    app.require_subcommand(1);

    CommonArgs common;
    int scenario = 1;
    double app_proportion = 0.0;
    double asymp = 0.40;
    std::uint32_t target_n = 5000;
    std::vector<double> usages;
    std::string synth_out = "synthetic_log.txt";
    std::uint64_t synth_seed = 0;

    auto* run = app.add_subcommand("run", "run one scenario ensemble");
    run->add_option("--scenario", scenario, "scenario id 1-5")->required();
    run->add_option("--app", app_proportion, "app usage proportion in [0,1]");
    run->add_option("--asymp", asymp, "asymptomatic ratio in [0,1]");
    add_common(run, common);

    auto* calibrate = app.add_subcommand("calibrate", "R0 vs p calibration sweep");
    add_common(calibrate, common);

    auto* sweep = app.add_subcommand("sweep", "app-usage sweep 0..100% in 5% steps");
    sweep->add_option("--scenario", scenario, "scenario id 1-5")->required();
    sweep->add_option("--asymp", asymp, "asymptomatic ratio in [0,1]");
    add_common(sweep, common);

    auto* extend = app.add_subcommand("extend", "extend the contact graph");
    extend->add_option("--target-n", target_n, "target population")->required();
    add_common(extend, common);

    auto* report = app.add_subcommand("report", "economics report vs scenario-1 baseline");
    report->add_option("--scenario", scenario, "scenario id 1-5")->required();
    report->add_option("--asymp", asymp, "asymptomatic ratio in [0,1]");
    report->add_option("--usages", usages, "app usage proportions");
    add_common(report, common);

    auto* synth = app.add_subcommand("synth", "write the bundled synthetic proximity log");
    synth->add_option("--out", synth_out, "output file");
    synth->add_option("--seed", synth_seed, "generator seed (0 = default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(common, scenario, app_proportion, asymp);
        if (calibrate->parsed()) return cmd_calibrate(common);
        if (sweep->parsed()) return cmd_sweep(common, scenario, asymp);
        if (extend->parsed()) return cmd_extend(common, target_n);
        if (report->parsed()) return cmd_report(common, scenario, asymp, usages);
        if (synth->parsed()) return cmd_synth(synth_out, synth_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
