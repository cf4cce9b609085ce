#include "driftbench/csv_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace driftbench {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

static const char* kHeader = "t,correct,window_acc,tracking_err,predict_ns,update_ns,model_size";

void emit_csv(const std::vector<EvalRecord>& records, const RunSummary& summary,
              const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_csv: cannot open " + path.string());
    f << kHeader << '\n';
    for (const auto& r : records) {
        f << r.t << ',' << (r.correct ? 1 : 0) << ',' << format_double(r.window_acc) << ',';
        if (r.tracking_err) f << format_double(*r.tracking_err);
        f << ',' << r.predict_ns << ',' << r.update_ns << ',' << format_double(r.model_size)
          << '\n';
    }
    if (!f) throw std::runtime_error("emit_csv: write failed for " + path.string());
    f.close();

    std::filesystem::path sidecar = path;
    sidecar += ".summary";
    std::ofstream s(sidecar);
    if (!s) throw std::runtime_error("emit_csv: cannot open " + sidecar.string());
    s << "overall_accuracy=" << format_double(summary.overall_accuracy) << '\n';
    s << "total_ns=" << summary.total_ns << '\n';
    s << "instances=" << summary.instances << '\n';
    s << "evaluated=" << summary.evaluated << '\n';
    for (const auto& [k, v] : summary.metadata) s << k << '=' << v << '\n';
    if (!s) throw std::runtime_error("emit_csv: write failed for " + sidecar.string());
}

std::vector<EvalRecord> parse_records_csv(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("parse_records_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("parse_records_csv: empty file");
    if (line != kHeader) throw std::runtime_error("parse_records_csv: unexpected header");

    std::vector<EvalRecord> out;
    std::size_t line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (cells.size() != 7)
            throw std::runtime_error("parse_records_csv: bad row at line " +
                                     std::to_string(line_no));
        EvalRecord r;
        r.t = std::stoull(cells[0]);
        r.correct = cells[1] == "1";
        r.window_acc = std::strtod(cells[2].c_str(), nullptr);
        if (!cells[3].empty()) r.tracking_err = std::strtod(cells[3].c_str(), nullptr);
        r.predict_ns = std::stoll(cells[4]);
        r.update_ns = std::stoll(cells[5]);
        r.model_size = std::strtod(cells[6].c_str(), nullptr);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace driftbench
