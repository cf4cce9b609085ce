#pragma once

#include <vector>

namespace driftbench {

double mean(const std::vector<double>& v);
double median(std::vector<double> v);

// Spearman rank correlation with average ranks for ties. Returns 0 for
// degenerate inputs (constant series or fewer than 2 points).
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace driftbench
