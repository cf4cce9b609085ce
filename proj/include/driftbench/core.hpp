#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace driftbench {

// A dense feature vector. Length is fixed by the stream that emits it.
struct Instance {
    std::vector<double> features;
};

struct LabeledInstance {
    Instance instance;
    int label = 0;  // class index in {0, ..., K-1}
};

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Timeline of a run: pre-training ends at tau0, drift is active in
// [tau1, tau2), the stream has `total` instances. Sudden drift is encoded
// as tau2 = tau1 + 1.
struct DriftSchedule {
    std::size_t tau0 = 0;
    std::size_t tau1 = 0;
    std::size_t tau2 = 0;
    std::size_t total = 0;

    void validate() const {
        if (!(tau0 <= tau1 && tau1 <= tau2 && tau2 <= total))
            throw std::invalid_argument(
                "DriftSchedule: requires 0 <= tau0 <= tau1 <= tau2 <= total");
    }
};

// A source of labeled instances. Implementations are deterministic given
// their seed and parameters.
class StreamSource {
public:
    virtual ~StreamSource() = default;

    virtual std::size_t dimensionality() const = 0;
    virtual int class_count() const = 0;

    // Emits the instance at the current timestep and advances, or nullopt
    // once the stream is exhausted.
    virtual std::optional<LabeledInstance> next() = 0;

    // Ground-truth concept parameters of the most recently emitted
    // instance, for streams that have them.
    virtual bool has_true_concept() const { return false; }
    virtual std::vector<double> true_theta() const {
        throw std::logic_error("true_theta: unsupported for this stream");
    }
};

// An incremental learner. predict must not mutate state (test-then-train
// discipline); a learner that has seen zero updates predicts class 0.
class Learner {
public:
    virtual ~Learner() = default;

    virtual int predict(const Instance& x) const = 0;
    virtual void update(const LabeledInstance& li) = 0;

    // Parameter vector, for parametric learners with a single weight vector.
    virtual std::optional<std::vector<double>> weights() const { return std::nullopt; }

    // Model-size scalar: leaf count (trees), buffer size (kNN), or weight
    // dimension (linear models).
    virtual double model_size() const = 0;

    virtual std::string id() const = 0;
};

}  // namespace driftbench
