#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "driftbench/core.hpp"
#include "driftbench/rng.hpp"

namespace driftbench {

enum class DriftKind {
    None,
    Sudden,
    Incremental,          // rotation active in [tau1, tau2)
    Gradual,              // Bernoulli mix of the two concepts over [tau1, tau2)
    ConstantIncremental,  // rotation active on the whole stream
};

std::string to_string(DriftKind kind);
std::optional<DriftKind> drift_kind_from_string(const std::string& s);

// Concept parameters theta ~ N(0, I), one entry per dimension.
std::vector<double> sample_concept(std::size_t d, Rng& rng);

// Class of x under the hyperplane concept: 1 iff theta . x >= 0.
int label(const std::vector<double>& theta, const Instance& x);

// One clockwise rotation step in the plane of the first two coordinates
// (identity on the rest). Requires d >= 2.
void rotate_step(std::vector<double>& theta, double angle);

struct HyperplaneConfig {
    std::size_t d = 2;
    DriftKind kind = DriftKind::None;
    double angle = 0.01;  // radians per step, incremental kinds only
    DriftSchedule schedule;
    std::uint64_t seed = 1;
    // Tests and presets may pin the concepts instead of sampling them.
    std::optional<std::vector<double>> theta_a;
    std::optional<std::vector<double>> theta_b;
};

// Synthetic stream: x_t has i.i.d. standard-normal entries, y_t is the
// hyperplane label of the active concept. Both concepts are always drawn
// at construction so that all kinds consume the same rng prefix and agree
// instance-for-instance until drift starts.
class HyperplaneStream final : public StreamSource {
public:
    explicit HyperplaneStream(const HyperplaneConfig& cfg);

    std::size_t dimensionality() const override { return cfg_.d; }
    int class_count() const override { return 2; }
    std::optional<LabeledInstance> next() override;

    bool has_true_concept() const override { return true; }
    std::vector<double> true_theta() const override { return theta_used_; }

    const std::vector<double>& concept_a() const { return theta_a_; }
    const std::vector<double>& concept_b() const { return theta_b_; }
    std::size_t timestep() const { return t_; }
    const HyperplaneConfig& config() const { return cfg_; }

private:
    bool rotation_pending(std::size_t entered_t) const;

    HyperplaneConfig cfg_;
    Rng rng_;
    std::vector<double> theta_a_;
    std::vector<double> theta_b_;
    std::vector<double> theta_rot_;   // theta_a after the rotations due at step t_
    std::vector<double> theta_used_;  // concept of the last emitted instance
    std::size_t t_ = 0;
};

}  // namespace driftbench
