#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace driftbench {

// Deterministic random source used by every stream and experiment.
// mt19937_64 is fully specified by the standard, and the uniform/normal
// transforms below are our own, so a (seed, parameters) pair replays
// bit-identically on any platform. The algorithm name is written into
// run metadata.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/boxmuller";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n). n must be ≥ 1.
    std::size_t uniform_below(std::size_t n) {
        std::size_t v = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return v >= n ? n - 1 : v;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller; the pair is cached so draws come in
    // a fixed order.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    static constexpr double kPi = 3.14159265358979323846;

    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace driftbench
