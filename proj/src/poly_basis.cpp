#include "driftbench/poly_basis.hpp"

#include <stdexcept>

namespace driftbench {

namespace {

void enumerate(std::size_t d, int remaining, std::size_t pos,
               std::vector<std::uint8_t>& current,
               std::vector<std::vector<std::uint8_t>>& out) {
    if (pos + 1 == d) {
        current[pos] = static_cast<std::uint8_t>(remaining);
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[pos] = static_cast<std::uint8_t>(e);
        enumerate(d, remaining - e, pos + 1, current, out);
    }
}

}  // namespace

PolyBasis::PolyBasis(std::size_t d, int degree) : d_(d), degree_(degree) {
    if (d == 0) throw std::invalid_argument("PolyBasis: d must be >= 1");
    if (degree < 1) throw std::invalid_argument("PolyBasis: degree must be >= 1");
    std::vector<std::uint8_t> current(d, 0);
    for (int g = 0; g <= degree; ++g) enumerate(d, g, 0, current, exponents_);
}

std::size_t PolyBasis::expected_dim(std::size_t d, int degree) {
    // C(d + degree, degree)
    std::size_t num = 1, den = 1;
    for (int i = 1; i <= degree; ++i) {
        num *= d + static_cast<std::size_t>(i);
        den *= static_cast<std::size_t>(i);
    }
    return num / den;
}

std::vector<double> PolyBasis::expand(const std::vector<double>& x) const {
    if (x.size() != d_) throw std::invalid_argument("PolyBasis::expand: length mismatch");
    // Per-attribute power table up to the degree.
    std::vector<double> powers(d_ * static_cast<std::size_t>(degree_ + 1));
    for (std::size_t i = 0; i < d_; ++i) {
        powers[i * (degree_ + 1)] = 1.0;
        for (int k = 1; k <= degree_; ++k)
            powers[i * (degree_ + 1) + k] = powers[i * (degree_ + 1) + k - 1] * x[i];
    }
    std::vector<double> out(exponents_.size());
    for (std::size_t m = 0; m < exponents_.size(); ++m) {
        double v = 1.0;
        const auto& exps = exponents_[m];
        for (std::size_t i = 0; i < d_; ++i)
            if (exps[i] != 0) v *= powers[i * (degree_ + 1) + exps[i]];
        out[m] = v;
    }
    return out;
}

}  // namespace driftbench
