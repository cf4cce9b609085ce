#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "driftbench/evaluation.hpp"

namespace driftbench {

// Locale-independent shortest round-trip formatting.
std::string format_double(double v);

// Writes the record CSV (`t,correct,window_acc,tracking_err,predict_ns,
// update_ns,model_size`, one row per record, header always present) and a
// `<path>.summary` sidecar of key=value lines. An absent tracking error is
// an empty field.
void emit_csv(const std::vector<EvalRecord>& records, const RunSummary& summary,
              const std::filesystem::path& path);

std::vector<EvalRecord> parse_records_csv(const std::filesystem::path& path);

}  // namespace driftbench
