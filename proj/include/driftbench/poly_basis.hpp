#pragma once

#include <cstdint>
#include <vector>

#include "driftbench/core.hpp"

namespace driftbench {

// Polynomial basis expansion: all monomials of total degree <= degree in
// graded-lexicographic order, constant term first. Output dimension is
// C(d + degree, degree).
class PolyBasis {
public:
    PolyBasis(std::size_t d, int degree);

    std::size_t input_dim() const { return d_; }
    std::size_t output_dim() const { return exponents_.size(); }
    int degree() const { return degree_; }

    std::vector<double> expand(const std::vector<double>& x) const;

    const std::vector<std::vector<std::uint8_t>>& exponents() const { return exponents_; }

    static std::size_t expected_dim(std::size_t d, int degree);

private:
    std::size_t d_;
    int degree_;
    std::vector<std::vector<std::uint8_t>> exponents_;
};

}  // namespace driftbench
