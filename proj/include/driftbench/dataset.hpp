#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

enum class DatasetFormat { Csv, Arff };

struct DatasetSpec {
    std::filesystem::path path;
    DatasetFormat format = DatasetFormat::Csv;
    // Column index or attribute/header name of the label.
    std::variant<std::size_t, std::string> label_column = std::string("class");
    // When set, loading fails loudly on mismatch.
    std::optional<std::size_t> expect_instances;
    std::optional<std::size_t> expect_attributes;  // raw columns, before one-hot
    std::optional<std::size_t> expect_classes;
    // CSV only; unset means auto-detect (a first row with no numeric cell).
    std::optional<bool> header;
};

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedDataset {
    std::shared_ptr<const std::vector<LabeledInstance>> data;
    std::size_t dimensionality = 0;      // after one-hot encoding
    std::size_t raw_attributes = 0;      // columns excluding the label
    int classes = 0;
    std::vector<std::string> label_names;  // first-appearance order
    std::vector<std::string> warnings;
};

// Loads the whole file into memory, preserving row order (the order is
// the stream). Nominal attributes are one-hot encoded; labels are mapped
// to dense 0..K-1 indices in first-appearance order.
LoadedDataset load_dataset(const DatasetSpec& spec);

// Replayable in-memory stream over a loaded dataset.
class DatasetStream final : public StreamSource {
public:
    explicit DatasetStream(LoadedDataset ds) : ds_(std::move(ds)) {}

    std::size_t dimensionality() const override { return ds_.dimensionality; }
    int class_count() const override { return ds_.classes; }
    std::optional<LabeledInstance> next() override {
        if (cursor_ >= ds_.data->size()) return std::nullopt;
        return (*ds_.data)[cursor_++];
    }

    const LoadedDataset& dataset() const { return ds_; }

private:
    LoadedDataset ds_;
    std::size_t cursor_ = 0;
};

enum class NormalizeMode { None, OnlineStandardize };

std::optional<NormalizeMode> normalize_mode_from_string(const std::string& s);
std::string to_string(NormalizeMode mode);

// Causal per-attribute standardization: running mean/variance (Welford)
// over the instances seen so far, current one included, emitting
// (x - mean) / max(std, 1e-8). No lookahead, so normalizing a prefix
// equals the prefix of normalizing the whole stream.
std::unique_ptr<StreamSource> normalize(std::unique_ptr<StreamSource> inner,
                                        NormalizeMode mode);

}  // namespace driftbench
