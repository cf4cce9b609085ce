#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

struct EvalConfig {
    std::size_t window = 200;       // sliding-window width, instances
    DriftSchedule schedule;          // only tau0 is consulted here
    bool record_trajectory = false;
    bool timing = false;
    bool raw_tracking = false;       // squared distance without normalization
};

struct EvalRecord {
    std::size_t t = 0;               // stream timestep (0-based)
    bool correct = false;
    double window_acc = 0.0;
    std::optional<double> tracking_err;
    std::int64_t predict_ns = 0;
    std::int64_t update_ns = 0;
    double model_size = 0.0;
};

struct RunSummary {
    double overall_accuracy = 0.0;   // mean correctness over t in [tau0, T)
    std::int64_t total_ns = 0;       // whole prequential loop, pre-training included
    std::size_t instances = 0;
    std::size_t evaluated = 0;
    std::map<std::string, std::string> metadata;
};

struct TrajectoryPoint {
    std::size_t t = 0;
    std::vector<double> theta_true;
    std::vector<double> theta_hat;
};

struct RunResult {
    std::vector<EvalRecord> records;      // one per evaluated instance (t >= tau0)
    RunSummary summary;
    std::vector<TrajectoryPoint> trajectory;
};

// Squared distance between the boundary directions: both vectors are
// scaled to unit norm and the estimate's sign is aligned to maximize the
// dot product, so any positive rescaling of theta_hat is invisible. A
// zero-norm estimate reports the antipodal bound 4.0 (and sets *zero_flag).
double tracking_error(const std::vector<double>& theta_true,
                      const std::vector<double>& theta_hat,
                      bool* zero_flag = nullptr);

// Plain squared Euclidean distance, no normalization.
double tracking_error_raw(const std::vector<double>& theta_true,
                          const std::vector<double>& theta_hat);

// Test-then-train over the whole stream. Every instance is predicted and
// then used for one update; correctness is recorded from tau0 on. Throws
// if the stream ends before tau0.
RunResult prequential_run(Learner& learner, StreamSource& stream, const EvalConfig& cfg);

// Trailing mean of correctness recomputed from records; the warm-up
// prefix averages over the instances available so far.
std::vector<double> sliding_accuracy(const std::vector<EvalRecord>& records,
                                     std::size_t window);

}  // namespace driftbench
