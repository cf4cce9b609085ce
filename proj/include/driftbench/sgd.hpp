#pragma once

#include <optional>
#include <string>
#include <vector>

#include "driftbench/core.hpp"
#include "driftbench/poly_basis.hpp"

namespace driftbench {

struct SgdConfig {
    double learning_rate = 0.01;  // never decayed over the stream
    double l2 = 1e-4;
    double momentum = 0.0;        // beta in [0, 1)
    int degree = 1;               // > 1 enables polynomial basis expansion
};

// Online linear classifier trained with hinge loss and a constant learning
// rate. Binary problems keep a single weight vector and classify by the
// sign of theta . phi(x) + bias (ties go to class 1); multiclass problems
// use one-vs-rest with argmax over per-class scores. The bias is excluded
// from L2 regularization.
class SgdClassifier final : public Learner {
public:
    SgdClassifier(std::size_t d, int classes, const SgdConfig& cfg);

    int predict(const Instance& x) const override;
    void update(const LabeledInstance& li) override;
    std::optional<std::vector<double>> weights() const override;
    double model_size() const override;
    std::string id() const override;

    // Warm start / test hook for the binary head.
    void set_weights(const std::vector<double>& w, double bias);
    double bias() const { return bias_[0]; }
    std::vector<double> scores(const Instance& x) const;

    const SgdConfig& config() const { return cfg_; }
    std::size_t expanded_dim() const { return dim_; }

private:
    std::vector<double> expand(const Instance& x) const;
    void update_head(std::size_t c, double target_sign, const std::vector<double>& phi);

    SgdConfig cfg_;
    std::size_t input_dim_;
    int classes_;
    std::size_t heads_;  // 1 for binary, K for multiclass
    std::size_t dim_;    // expanded feature dimension
    std::optional<PolyBasis> basis_;
    std::vector<std::vector<double>> w_;
    std::vector<std::vector<double>> vel_;
    std::vector<double> bias_;
    std::vector<double> bias_vel_;
};

}  // namespace driftbench
