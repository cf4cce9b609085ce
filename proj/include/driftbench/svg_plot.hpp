#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace driftbench {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label = "t";
    std::string y_label;
    int width = 880;
    int height = 540;
};

// Standalone SVG line chart: one polyline per series plus a legend.
// Throws if there is no point to draw.
void emit_plot(const std::vector<Series>& series, const std::filesystem::path& path,
               const PlotOptions& opts = {});

}  // namespace driftbench
