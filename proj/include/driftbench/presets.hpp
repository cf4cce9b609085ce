#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace driftbench {

struct PresetOptions {
    std::optional<std::uint64_t> seed;  // overrides the preset default (1)
    std::filesystem::path out;          // empty: out/<preset-name>
    std::filesystem::path data_dir = "data";  // benchmark dataset location
    int jobs = 1;
};

constexpr std::uint64_t kDefaultSeed = 1;

std::vector<std::string> preset_names();

// Runs one of the named experiment presets; throws ConfigError for an
// unknown name (the message lists the available presets).
void run_preset(const std::string& name, const PresetOptions& opts);

}  // namespace driftbench
