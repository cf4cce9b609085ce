#pragma once

#include <deque>
#include <string>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

struct KnnConfig {
    std::size_t k = 10;
    std::size_t buffer = 100;  // w: oldest instance is evicted first
};

// Sliding-window kNN. Prediction is the majority class among the
// min(k, buffer size) nearest stored instances by Euclidean distance;
// class ties break to the smallest index, an empty buffer predicts 0.
class KnnClassifier final : public Learner {
public:
    KnnClassifier(std::size_t d, int classes, const KnnConfig& cfg);

    int predict(const Instance& x) const override;
    void update(const LabeledInstance& li) override;
    double model_size() const override { return static_cast<double>(buffer_.size()); }
    std::string id() const override { return "knn"; }

    std::size_t buffer_size() const { return buffer_.size(); }
    const std::deque<LabeledInstance>& buffer() const { return buffer_; }

private:
    std::size_t d_;
    int classes_;
    KnnConfig cfg_;
    std::deque<LabeledInstance> buffer_;
};

}  // namespace driftbench
