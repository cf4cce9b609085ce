#include "driftbench/sgd.hpp"

#include <cmath>
#include <stdexcept>

namespace driftbench {

SgdClassifier::SgdClassifier(std::size_t d, int classes, const SgdConfig& cfg)
    : cfg_(cfg), input_dim_(d), classes_(classes) {
    if (d == 0) throw std::invalid_argument("SgdClassifier: d must be >= 1");
    if (classes < 2) throw std::invalid_argument("SgdClassifier: classes must be >= 2");
    if (!(cfg.learning_rate > 0.0))
        throw std::invalid_argument("SgdClassifier: learning_rate must be > 0");
    if (cfg.l2 < 0.0) throw std::invalid_argument("SgdClassifier: l2 must be >= 0");
    if (cfg.momentum < 0.0 || cfg.momentum >= 1.0)
        throw std::invalid_argument("SgdClassifier: momentum must be in [0, 1)");
    if (cfg.degree > 1) basis_.emplace(d, cfg.degree);
    dim_ = basis_ ? basis_->output_dim() : d;
    heads_ = classes == 2 ? 1 : static_cast<std::size_t>(classes);
    w_.assign(heads_, std::vector<double>(dim_, 0.0));
    vel_.assign(heads_, std::vector<double>(dim_, 0.0));
    bias_.assign(heads_, 0.0);
    bias_vel_.assign(heads_, 0.0);
}

std::vector<double> SgdClassifier::expand(const Instance& x) const {
    if (x.features.size() != input_dim_)
        throw std::invalid_argument("SgdClassifier: feature length mismatch");
    return basis_ ? basis_->expand(x.features) : x.features;
}

std::vector<double> SgdClassifier::scores(const Instance& x) const {
    const std::vector<double> phi = expand(x);
    std::vector<double> s(heads_);
    for (std::size_t c = 0; c < heads_; ++c) {
        double dot = bias_[c];
        const auto& w = w_[c];
        for (std::size_t i = 0; i < dim_; ++i) dot += w[i] * phi[i];
        s[c] = dot;
    }
    return s;
}

int SgdClassifier::predict(const Instance& x) const {
    const std::vector<double> s = scores(x);
    if (heads_ == 1) return s[0] >= 0.0 ? 1 : 0;
    std::size_t best = 0;
    for (std::size_t c = 1; c < heads_; ++c)
        if (s[c] > s[best]) best = c;
    return static_cast<int>(best);
}

void SgdClassifier::update_head(std::size_t c, double target_sign,
                                const std::vector<double>& phi) {
    auto& w = w_[c];
    double margin = bias_[c];
    for (std::size_t i = 0; i < dim_; ++i) margin += w[i] * phi[i];
    margin *= target_sign;

    if (margin < 1.0) {
        auto& v = vel_[c];
        for (std::size_t i = 0; i < dim_; ++i) {
            double g = target_sign * phi[i] - cfg_.l2 * w[i];
            v[i] = cfg_.momentum * v[i] + cfg_.learning_rate * g;
            w[i] += v[i];
        }
        bias_vel_[c] = cfg_.momentum * bias_vel_[c] + cfg_.learning_rate * target_sign;
        bias_[c] += bias_vel_[c];
    } else if (cfg_.l2 > 0.0) {
        // Off the hinge only the regularization shrink applies.
        const double shrink = 1.0 - cfg_.learning_rate * cfg_.l2;
        for (double& wi : w) wi *= shrink;
    }
}

void SgdClassifier::update(const LabeledInstance& li) {
    if (!all_finite(li.instance.features))
        throw std::invalid_argument("SgdClassifier::update: non-finite features");
    if (li.label < 0 || li.label >= classes_)
        throw std::invalid_argument("SgdClassifier::update: label out of range");
    const std::vector<double> phi = expand(li.instance);
    if (heads_ == 1) {
        update_head(0, li.label == 1 ? 1.0 : -1.0, phi);
    } else {
        for (std::size_t c = 0; c < heads_; ++c)
            update_head(c, static_cast<int>(c) == li.label ? 1.0 : -1.0, phi);
    }
}

std::optional<std::vector<double>> SgdClassifier::weights() const {
    if (heads_ != 1) return std::nullopt;
    return w_[0];
}

double SgdClassifier::model_size() const {
    return static_cast<double>(heads_ * (dim_ + 1));
}

std::string SgdClassifier::id() const {
    std::string base = basis_ ? "pbf-sgd-" + std::to_string(cfg_.degree) : "sgd";
    if (cfg_.momentum > 0.0) {
        std::string m = std::to_string(cfg_.momentum);
        m.erase(m.find_last_not_of('0') + 1);
        if (!m.empty() && m.back() == '.') m.pop_back();
        base += "-m" + m;
    }
    return base;
}

void SgdClassifier::set_weights(const std::vector<double>& w, double bias) {
    if (heads_ != 1) throw std::logic_error("set_weights: binary head only");
    if (w.size() != dim_) throw std::invalid_argument("set_weights: length mismatch");
    w_[0] = w;
    bias_[0] = bias;
}

}  // namespace driftbench
