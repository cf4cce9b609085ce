#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "driftbench/core.hpp"
#include "driftbench/dataset.hpp"
#include "driftbench/evaluation.hpp"
#include "driftbench/hyperplane.hpp"
#include "driftbench/random_tree.hpp"

namespace driftbench {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct StreamSpec {
    enum class Type { Hyperplane, RandomTree, Dataset };
    Type type = Type::Hyperplane;

    // Hyperplane
    std::size_t d = 2;
    DriftKind kind = DriftKind::None;
    double angle = 0.01;
    DriftSchedule schedule{1000, 5000, 6000, 10000};

    // Random tree
    int classes = 2;
    int depth = 5;

    // Dataset
    DatasetSpec dataset;
    NormalizeMode normalization = NormalizeMode::None;
};

struct LearnerSpec {
    std::string type;             // sgd | knn | ht | rls | reset
    double learning_rate = 0.01;  // sgd
    double l2 = 1e-4;             // sgd
    double momentum = 0.0;        // sgd
    int degree = 1;               // sgd
    std::size_t k = 10;           // knn
    std::size_t buffer = 100;     // knn
    double split_confidence = 1e-7;  // ht
    double tie_threshold = 0.05;     // ht
    std::size_t grace_period = 200;  // ht
    double rls_delta = 1e6;       // rls
    double forgetting = 1.0;      // rls
    std::size_t reset_window = 100;   // reset
    double sensitivity = 0.15;        // reset
    std::shared_ptr<LearnerSpec> inner;  // reset
};

struct ExperimentConfig {
    StreamSpec stream;
    std::vector<LearnerSpec> learners;
    std::size_t eval_window = 200;
    bool record_trajectory = false;
    bool timing = false;
    std::vector<std::uint64_t> seeds{1};
    std::filesystem::path out = "out";
    int jobs = 1;
};

// The config file is versioned JSON (config_version = 1); see the README
// for the schema. Validation errors name the offending field.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& cfg);
void validate(const ExperimentConfig& cfg);

std::unique_ptr<StreamSource> make_stream(const StreamSpec& spec, std::uint64_t seed);
std::unique_ptr<Learner> make_learner(const LearnerSpec& spec, std::size_t d, int classes);
std::string learner_spec_id(const LearnerSpec& spec);

// Human-readable stream description for run metadata.
std::string stream_description(const StreamSpec& spec);

}  // namespace driftbench
