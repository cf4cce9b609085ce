#pragma once

#include <cstdint>
#include <vector>

#include "driftbench/core.hpp"
#include "driftbench/rng.hpp"

namespace driftbench {

struct RandomTreeConfig {
    std::size_t d = 10;
    int classes = 2;
    int depth = 5;
    std::size_t total = 10000;
    std::uint64_t seed = 1;
};

// RTG stream: a fixed random binary tree over [0,1]^d labels uniform
// feature vectors. Split attributes are drawn uniformly; thresholds are
// drawn uniformly inside the attribute's reachable interval along the
// path, so every leaf region has positive volume. Leaf classes are
// uniform over {0, ..., K-1}.
class RandomTreeStream final : public StreamSource {
public:
    struct Node {
        int attr = -1;       // -1 for leaves
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        int cls = -1;        // leaves only
    };

    explicit RandomTreeStream(const RandomTreeConfig& cfg);

    std::size_t dimensionality() const override { return cfg_.d; }
    int class_count() const override { return cfg_.classes; }
    std::optional<LabeledInstance> next() override;

    // Tree structure, exposed so tests can compute leaf-region volumes
    // independently of the sampling path.
    const std::vector<Node>& nodes() const { return nodes_; }
    int route(const Instance& x) const;
    const RandomTreeConfig& config() const { return cfg_; }

private:
    int build(int depth_left, std::vector<std::pair<double, double>>& ranges);

    RandomTreeConfig cfg_;
    Rng rng_;
    std::vector<Node> nodes_;
    std::size_t t_ = 0;
};

}  // namespace driftbench
