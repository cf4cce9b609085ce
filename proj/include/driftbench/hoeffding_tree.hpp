#pragma once

#include <optional>
#include <string>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

struct HoeffdingTreeConfig {
    double split_confidence = 1e-7;  // delta
    double tie_threshold = 0.05;     // tau
    std::size_t grace_period = 200;  // n_min instances between split attempts
    std::size_t nb_threshold = 10;   // below this a leaf predicts its majority class
    int split_candidates = 10;       // equal-width thresholds per attribute
};

// Hoeffding bound epsilon = sqrt(R^2 ln(1/delta) / (2 n)).
double hoeffding_bound(double range, double delta, double n);

// Split decision given best and second-best information gain.
inline bool should_split(double best_gain, double second_gain, double epsilon,
                         double tie_threshold) {
    if (best_gain <= 0.0) return false;
    return best_gain - second_gain > epsilon || epsilon < tie_threshold;
}

// Incremental decision tree. A leaf keeps class counts and per-attribute
// per-class Gaussian summaries; every grace_period instances it evaluates
// equal-width threshold candidates and splits when the Hoeffding bound
// separates the best candidate from the runner-up (or the bound falls
// below the tie threshold). Leaves predict naive Bayes from their
// Gaussian summaries once they hold nb_threshold instances.
class HoeffdingTree final : public Learner {
public:
    HoeffdingTree(std::size_t d, int classes, const HoeffdingTreeConfig& cfg);

    int predict(const Instance& x) const override;
    void update(const LabeledInstance& li) override;
    double model_size() const override { return static_cast<double>(leaf_count_); }
    std::string id() const override { return "ht"; }

    std::size_t leaf_count() const { return leaf_count_; }
    std::size_t depth() const;
    const HoeffdingTreeConfig& config() const { return cfg_; }

private:
    struct GaussStat {
        double n = 0.0;
        double mean = 0.0;
        double m2 = 0.0;

        void add(double v) {
            n += 1.0;
            double delta = v - mean;
            mean += delta / n;
            m2 += delta * (v - mean);
        }
        double variance() const { return n > 0.0 ? m2 / n : 0.0; }
    };

    struct LeafData {
        std::vector<double> class_counts;            // [class]
        std::vector<std::vector<GaussStat>> stats;   // [attr][class]
        std::vector<double> att_min, att_max;
        double total = 0.0;
        std::size_t since_check = 0;
    };

    struct Node {
        int attr = -1;  // -1: leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        int leaf = -1;  // index into leaves_ while a leaf
    };

    int route_leaf(const Instance& x) const;
    int make_leaf_node();
    void try_split(int node_idx);
    double split_gain(const LeafData& leaf, std::size_t attr, double thr) const;
    static double entropy_bits(const std::vector<double>& counts, double total);
    int majority(const LeafData& leaf) const;
    int naive_bayes(const LeafData& leaf, const Instance& x) const;

    std::size_t d_;
    int classes_;
    HoeffdingTreeConfig cfg_;
    std::vector<Node> nodes_;
    std::vector<LeafData> leaves_;
    std::size_t leaf_count_ = 1;
};

}  // namespace driftbench
