#include "driftbench/hyperplane.hpp"

#include <cmath>
#include <stdexcept>

namespace driftbench {

std::string to_string(DriftKind kind) {
    switch (kind) {
        case DriftKind::None: return "none";
        case DriftKind::Sudden: return "sudden";
        case DriftKind::Incremental: return "incremental";
        case DriftKind::Gradual: return "gradual";
        case DriftKind::ConstantIncremental: return "constant-incremental";
    }
    return "unknown";
}

std::optional<DriftKind> drift_kind_from_string(const std::string& s) {
    if (s == "none") return DriftKind::None;
    if (s == "sudden") return DriftKind::Sudden;
    if (s == "incremental") return DriftKind::Incremental;
    if (s == "gradual") return DriftKind::Gradual;
    if (s == "constant-incremental") return DriftKind::ConstantIncremental;
    return std::nullopt;
}

std::vector<double> sample_concept(std::size_t d, Rng& rng) {
    if (d == 0) throw std::invalid_argument("sample_concept: d must be >= 1");
    std::vector<double> theta(d);
    for (double& v : theta) v = rng.normal();
    return theta;
}

int label(const std::vector<double>& theta, const Instance& x) {
    if (theta.size() != x.features.size())
        throw std::invalid_argument("label: theta/instance length mismatch");
    double dot = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) dot += theta[i] * x.features[i];
    return dot >= 0.0 ? 1 : 0;
}

void rotate_step(std::vector<double>& theta, double angle) {
    if (theta.size() < 2)
        throw std::invalid_argument("rotate_step: rotation undefined for d < 2");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double a = theta[0];
    const double b = theta[1];
    theta[0] = c * a + s * b;
    theta[1] = -s * a + c * b;
}

HyperplaneStream::HyperplaneStream(const HyperplaneConfig& cfg)
    : cfg_(cfg), rng_(cfg.seed) {
    cfg_.schedule.validate();
    if (!std::isfinite(cfg_.angle))
        throw std::invalid_argument("HyperplaneStream: angle must be finite");
    const bool rotational = cfg_.kind == DriftKind::Incremental ||
                            cfg_.kind == DriftKind::ConstantIncremental;
    if (rotational && cfg_.d < 2)
        throw std::invalid_argument("HyperplaneStream: incremental drift needs d >= 2");

    theta_a_ = cfg_.theta_a ? *cfg_.theta_a : sample_concept(cfg_.d, rng_);
    theta_b_ = cfg_.theta_b ? *cfg_.theta_b : sample_concept(cfg_.d, rng_);
    if (theta_a_.size() != cfg_.d || theta_b_.size() != cfg_.d)
        throw std::invalid_argument("HyperplaneStream: concept length != d");
    theta_rot_ = theta_a_;
    theta_used_ = theta_a_;
}

// A rotation is applied on entering step t when t is inside the active
// range: at tau1 the concept is still exactly theta_a, at tau2 it has
// drifted by (tau2 - tau1) * angle and stays fixed afterwards. Constant
// drift rotates on every step, so theta at step t is theta_0 rotated by
// t * angle.
bool HyperplaneStream::rotation_pending(std::size_t entered_t) const {
    if (cfg_.kind == DriftKind::ConstantIncremental) return true;
    if (cfg_.kind != DriftKind::Incremental) return false;
    return entered_t > cfg_.schedule.tau1 && entered_t <= cfg_.schedule.tau2;
}

std::optional<LabeledInstance> HyperplaneStream::next() {
    if (t_ >= cfg_.schedule.total) return std::nullopt;

    // Resolve the concept for this step. The gradual Bernoulli is drawn
    // before the features so the draw order is fixed.
    const std::vector<double>* active = &theta_rot_;
    switch (cfg_.kind) {
        case DriftKind::None:
            active = &theta_a_;
            break;
        case DriftKind::Sudden:
            active = t_ < cfg_.schedule.tau1 ? &theta_a_ : &theta_b_;
            break;
        case DriftKind::Gradual: {
            const auto& s = cfg_.schedule;
            if (s.tau2 == s.tau1) {  // degenerate ramp, treated as sudden
                active = t_ < s.tau1 ? &theta_a_ : &theta_b_;
            } else if (t_ < s.tau1) {
                active = &theta_a_;
            } else if (t_ >= s.tau2) {
                active = &theta_b_;
            } else {
                double alpha = static_cast<double>(t_ - s.tau1) /
                               static_cast<double>(s.tau2 - s.tau1);
                active = rng_.bernoulli(alpha) ? &theta_b_ : &theta_a_;
            }
            break;
        }
        case DriftKind::Incremental:
        case DriftKind::ConstantIncremental:
            active = &theta_rot_;
            break;
    }

    LabeledInstance li;
    li.instance.features.resize(cfg_.d);
    for (double& v : li.instance.features) v = rng_.normal();
    li.label = label(*active, li.instance);

    theta_used_ = *active;
    ++t_;
    if (rotation_pending(t_)) rotate_step(theta_rot_, cfg_.angle);
    return li;
}

}  // namespace driftbench
