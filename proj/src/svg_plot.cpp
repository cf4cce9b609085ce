#include "driftbench/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace driftbench {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// A rounded tick step so axis labels land on human-friendly values.
double nice_step(double span) {
    if (span <= 0.0) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double step;
    if (frac < 1.5)
        step = 1.0;
    else if (frac < 3.5)
        step = 2.0;
    else if (frac < 7.5)
        step = 5.0;
    else
        step = 10.0;
    return step * mag;
}

}  // namespace

void emit_plot(const std::vector<Series>& series, const std::filesystem::path& path,
               const PlotOptions& opts) {
    std::size_t points = 0;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("emit_plot: series x/y length mismatch");
        points += s.x.size();
    }
    if (points == 0) throw std::invalid_argument("emit_plot: nothing to plot");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }

    const double ml = 64, mr = 16, mt = 36, mb = 44;
    const double pw = opts.width - ml - mr;
    const double ph = opts.height - mt - mb;
    auto sx = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) { return mt + (1.0 - (v - ymin) / (ymax - ymin)) * ph; };

    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_plot: cannot open " + path.string());
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
      << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << ' '
      << opts.height << "\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!opts.title.empty())
        f << "<text x=\"" << opts.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
          << "font-family=\"sans-serif\" font-size=\"15\">" << opts.title << "</text>\n";

    // Axes and grid.
    f << "<g stroke=\"#cccccc\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    const double xstep = nice_step(xmax - xmin);
    for (double v = std::ceil(xmin / xstep) * xstep; v <= xmax + 1e-9; v += xstep) {
        f << "<line x1=\"" << fmt(sx(v)) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(sx(v))
          << "\" y2=\"" << fmt(mt + ph) << "\"/>\n";
        f << "<text x=\"" << fmt(sx(v)) << "\" y=\"" << fmt(mt + ph + 16)
          << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\">" << fmt(v)
          << "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin);
    for (double v = std::ceil(ymin / ystep) * ystep; v <= ymax + 1e-9; v += ystep) {
        f << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(sy(v)) << "\" x2=\"" << fmt(ml + pw)
          << "\" y2=\"" << fmt(sy(v)) << "\"/>\n";
        f << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(sy(v) + 4)
          << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333333\">" << fmt(v)
          << "</text>\n";
    }
    f << "</g>\n";
    f << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    f << "<text x=\"" << ml + pw / 2 << "\" y=\"" << opts.height - 8
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << opts.x_label << "</text>\n";
    if (!opts.y_label.empty())
        f << "<text x=\"14\" y=\"" << mt + ph / 2
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
          << "transform=\"rotate(-90 14 " << mt + ph / 2 << ")\">" << opts.y_label
          << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.x.empty()) continue;
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.4\" points=\"";
        for (std::size_t j = 0; j < s.x.size(); ++j)
            f << fmt(sx(s.x[j])) << ',' << fmt(sy(s.y[j])) << ' ';
        f << "\"/>\n";
    }

    // Legend, top-right of the plot area.
    double ly = mt + 14;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        f << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly - 4 << "\" x2=\""
          << ml + pw - 126 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
        f << "<text x=\"" << ml + pw - 120 << "\" y=\"" << ly
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].name
          << "</text>\n";
        ly += 16;
    }
    f << "</svg>\n";
    if (!f) throw std::runtime_error("emit_plot: write failed for " + path.string());
}

}  // namespace driftbench
