#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "driftbench/core.hpp"

namespace driftbench {

struct ResetConfig {
    std::size_t window = 100;
    double sensitivity = 0.15;  // trigger margin above the reference error rate
};

// Detect-and-reset wrapper: monitors the inner learner's windowed error
// rate and replaces it with a freshly constructed one when the rate rises
// more than `sensitivity` above the reference (the first full window after
// each (re)start).
class DetectAndReset final : public Learner {
public:
    using Factory = std::function<std::unique_ptr<Learner>()>;

    DetectAndReset(Factory factory, const ResetConfig& cfg)
        : factory_(std::move(factory)), cfg_(cfg), inner_(factory_()) {
        if (cfg_.window == 0)
            throw std::invalid_argument("DetectAndReset: window must be >= 1");
        if (!inner_) throw std::invalid_argument("DetectAndReset: factory returned null");
    }

    int predict(const Instance& x) const override { return inner_->predict(x); }

    void update(const LabeledInstance& li) override {
        const bool err = inner_->predict(li.instance) != li.label;
        errors_.push_back(err ? 1 : 0);
        if (errors_.size() > cfg_.window) errors_.pop_front();
        if (errors_.size() == cfg_.window) {
            double rate = 0.0;
            for (char e : errors_) rate += e;
            rate /= static_cast<double>(cfg_.window);
            if (reference_ < 0.0) {
                reference_ = rate;
            } else if (rate > reference_ + cfg_.sensitivity) {
                inner_ = factory_();
                errors_.clear();
                reference_ = -1.0;
                ++resets_;
            }
        }
        inner_->update(li);
    }

    double model_size() const override { return inner_->model_size(); }
    std::string id() const override { return "reset(" + inner_->id() + ")"; }

    std::size_t resets() const { return resets_; }
    const Learner& inner() const { return *inner_; }

private:
    Factory factory_;
    ResetConfig cfg_;
    std::unique_ptr<Learner> inner_;
    std::deque<char> errors_;
    double reference_ = -1.0;  // unset until the first full window
    std::size_t resets_ = 0;
};

}  // namespace driftbench
