#include "driftbench/rls.hpp"

#include <cmath>
#include <stdexcept>

namespace driftbench {

RlsRegressor::RlsRegressor(std::size_t d, double delta, double forgetting)
    : d_(d), rho_(forgetting) {
    if (d == 0) throw std::invalid_argument("RlsRegressor: d must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("RlsRegressor: delta must be > 0");
    if (!(forgetting > 0.0 && forgetting <= 1.0))
        throw std::invalid_argument("RlsRegressor: forgetting must be in (0, 1]");
    w_.assign(d, 0.0);
    rinv_.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) rinv_[i * d + i] = delta;
}

double RlsRegressor::predict_value(const std::vector<double>& x) const {
    if (x.size() != d_) throw std::invalid_argument("RlsRegressor: length mismatch");
    double dot = 0.0;
    for (std::size_t i = 0; i < d_; ++i) dot += w_[i] * x[i];
    return dot;
}

void RlsRegressor::update(const std::vector<double>& x, double y) {
    if (x.size() != d_) throw std::invalid_argument("RlsRegressor: length mismatch");
    if (!all_finite(x) || !std::isfinite(y))
        throw std::invalid_argument("RlsRegressor::update: non-finite input");

    const double err = y - predict_value(x);

    std::vector<double> k(d_, 0.0);  // R^-1 x
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0.0;
        const double* row = &rinv_[i * d_];
        for (std::size_t j = 0; j < d_; ++j) s += row[j] * x[j];
        k[i] = s;
    }
    double q = 0.0;
    for (std::size_t i = 0; i < d_; ++i) q += x[i] * k[i];
    const double denom = rho_ + q;

    for (std::size_t i = 0; i < d_; ++i) {
        const double ki = k[i] / denom;
        double* row = &rinv_[i * d_];
        for (std::size_t j = 0; j < d_; ++j) row[j] = (row[j] - ki * k[j]) / rho_;
    }
    // New-gain form: R^-1_t x = k / denom regardless of rho.
    for (std::size_t i = 0; i < d_; ++i) w_[i] += (k[i] / denom) * err;
}

RlsClassifier::RlsClassifier(std::size_t d, int classes, const RlsConfig& cfg)
    : d_(d), classes_(classes) {
    if (classes < 2) throw std::invalid_argument("RlsClassifier: classes must be >= 2");
    const std::size_t n_heads = classes == 2 ? 1 : static_cast<std::size_t>(classes);
    heads_.reserve(n_heads);
    for (std::size_t c = 0; c < n_heads; ++c)
        heads_.emplace_back(d, cfg.delta, cfg.forgetting);
}

int RlsClassifier::predict(const Instance& x) const {
    if (heads_.size() == 1)
        return heads_[0].predict_value(x.features) >= 0.0 ? 1 : 0;
    std::size_t best = 0;
    double best_score = heads_[0].predict_value(x.features);
    for (std::size_t c = 1; c < heads_.size(); ++c) {
        double s = heads_[c].predict_value(x.features);
        if (s > best_score) {
            best_score = s;
            best = c;
        }
    }
    return static_cast<int>(best);
}

void RlsClassifier::update(const LabeledInstance& li) {
    if (li.label < 0 || li.label >= classes_)
        throw std::invalid_argument("RlsClassifier::update: label out of range");
    if (heads_.size() == 1) {
        heads_[0].update(li.instance.features, li.label == 1 ? 1.0 : -1.0);
    } else {
        for (std::size_t c = 0; c < heads_.size(); ++c)
            heads_[c].update(li.instance.features,
                             static_cast<int>(c) == li.label ? 1.0 : -1.0);
    }
}

std::optional<std::vector<double>> RlsClassifier::weights() const {
    if (heads_.size() != 1) return std::nullopt;
    return heads_[0].weights();
}

}  // namespace driftbench
