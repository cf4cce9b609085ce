#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "driftbench/config.hpp"
#include "driftbench/evaluation.hpp"

namespace driftbench {

struct RunOutput {
    std::string learner_id;
    std::uint64_t seed = 0;
    RunSummary summary;
    std::vector<EvalRecord> records;
    std::vector<TrajectoryPoint> trajectory;
    std::filesystem::path csv_path;
};

// Executes every (learner, seed) pair of the experiment, writing one
// record CSV + summary sidecar per run plus per-seed accuracy plots into
// cfg.out, and echoing the resolved config as config.json. Runs are
// independent, so cfg.jobs > 1 executes them concurrently.
std::vector<RunOutput> run_experiment(const ExperimentConfig& cfg);

std::string sanitize_filename(const std::string& name);

}  // namespace driftbench
