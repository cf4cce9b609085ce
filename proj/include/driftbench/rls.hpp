#pragma once

#include <optional>
#include <string>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

// Recursive least squares. Maintains the inverse correlation matrix
// R^-1_t directly:
//   k      = R^-1 x
//   R^-1  <- (R^-1 - k k^T / (rho + x^T k)) / rho
//   theta <- theta + R^-1 x (y - x^T theta_prev)
// rho = 1 is plain RLS; rho < 1 is forgetting-RLS. R^-1 is initialized to
// delta * I.
class RlsRegressor {
public:
    RlsRegressor(std::size_t d, double delta = 1e6, double forgetting = 1.0);

    void update(const std::vector<double>& x, double y);
    double predict_value(const std::vector<double>& x) const;

    const std::vector<double>& weights() const { return w_; }
    // Row-major d x d matrix.
    const std::vector<double>& rinv() const { return rinv_; }
    std::size_t dim() const { return d_; }

private:
    std::size_t d_;
    double rho_;
    std::vector<double> w_;
    std::vector<double> rinv_;
};

struct RlsConfig {
    double delta = 1e6;
    double forgetting = 1.0;
};

// RLS used as a classifier: one regressor per class (a single one for
// binary problems) trained on +/-1 targets, predicting by sign / argmax.
class RlsClassifier final : public Learner {
public:
    RlsClassifier(std::size_t d, int classes, const RlsConfig& cfg);

    int predict(const Instance& x) const override;
    void update(const LabeledInstance& li) override;
    std::optional<std::vector<double>> weights() const override;
    double model_size() const override { return static_cast<double>(d_); }
    std::string id() const override { return "rls"; }

    const RlsRegressor& regressor(std::size_t c = 0) const { return heads_[c]; }

private:
    std::size_t d_;
    int classes_;
    std::vector<RlsRegressor> heads_;
};

}  // namespace driftbench
