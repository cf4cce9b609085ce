#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "driftbench/presets.hpp"
#include "driftbench/runner.hpp"

namespace {

// Exit codes: 0 success, 1 validation error, 2 runtime/IO error.
constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kRuntimeError = 2;

int run_command(const std::string& preset, const std::string& config_path,
                std::optional<std::uint64_t> seed, const std::string& out,
                const std::string& data_dir, int jobs) {
    try {
        if (!config_path.empty()) {
            driftbench::ExperimentConfig cfg = driftbench::load_config(config_path);
            if (seed) cfg.seeds = {*seed};
            if (!out.empty()) cfg.out = out;
            if (jobs > 0) cfg.jobs = jobs;
            auto runs = driftbench::run_experiment(cfg);
            for (const auto& r : runs)
                std::cout << r.learner_id << " seed=" << r.seed
                          << " accuracy=" << r.summary.overall_accuracy << " -> "
                          << r.csv_path.string() << '\n';
            return kOk;
        }
        driftbench::PresetOptions opts;
        opts.seed = seed;
        if (!out.empty()) opts.out = out;
        if (!data_dir.empty()) opts.data_dir = data_dir;
        if (jobs > 0) opts.jobs = jobs;
        driftbench::run_preset(preset, opts);
        return kOk;
    } catch (const driftbench::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const driftbench::DatasetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"driftbench: concept-drifting stream learners under prequential evaluation"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run an experiment preset or a config file");
    std::string preset;
    std::string config_path;
    std::string out;
    std::string data_dir = "data";
    std::uint64_t seed_value = 0;
    int jobs = 0;
    run->add_option("preset", preset,
                    "preset name (fig4-stationary, fig4-sudden, fig4-incremental, "
                    "fig4-gradual, fig5-tracking, fig6-constant-drift, table4, table6-timing)");
    run->add_option("--config", config_path, "experiment config file (JSON)")
        ->check(CLI::ExistingFile);
    auto* seed_opt = run->add_option("--seed", seed_value, "base seed override");
    run->add_option("--out", out, "output directory");
    run->add_option("--data", data_dir, "directory holding benchmark datasets");
    run->add_option("--jobs", jobs, "run (learner, seed) pairs concurrently");

    auto* list = app.add_subcommand("list-presets", "print available presets");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const auto& name : driftbench::preset_names()) std::cout << name << '\n';
        return kOk;
    }
    if (preset.empty() && config_path.empty()) {
        std::cerr << "error: run needs a preset name or --config\n";
        return kValidationError;
    }
    if (!preset.empty() && !config_path.empty()) {
        std::cerr << "error: pass either a preset name or --config, not both\n";
        return kValidationError;
    }
    std::optional<std::uint64_t> seed;
    if (seed_opt->count() > 0) seed = seed_value;
    return run_command(preset, config_path, seed, out, data_dir, jobs);
}
