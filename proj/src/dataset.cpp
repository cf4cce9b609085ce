#include "driftbench/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace driftbench {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                          (s.front() == '"' && s.back() == '"')))
        return s.substr(1, s.size() - 2);
    return s;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

struct RawTable {
    std::vector<std::string> column_names;                 // may be synthesized
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;                    // 1-based source lines
    // ARFF only: declared nominal domains per column (empty = numeric).
    std::vector<std::vector<std::string>> nominal_domains;
    bool domains_declared = false;
};

RawTable read_csv(const DatasetSpec& spec) {
    std::ifstream f(spec.path);
    if (!f) throw DatasetError("dataset: cannot open " + spec.path.string());
    RawTable t;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split_csv(line);
        if (first) {
            first = false;
            bool is_header;
            if (spec.header) {
                is_header = *spec.header;
            } else {
                // Auto-detect: a header row has no numeric cell.
                double tmp;
                is_header = std::none_of(cells.begin(), cells.end(),
                                         [&](const std::string& c) { return parse_number(c, tmp); });
            }
            if (is_header) {
                t.column_names = cells;
                continue;
            }
            t.column_names.resize(cells.size());
            for (std::size_t i = 0; i < cells.size(); ++i)
                t.column_names[i] = "col" + std::to_string(i);
        }
        if (cells.size() != t.column_names.size())
            throw DatasetError("dataset: malformed row at line " + std::to_string(line_no) +
                               ": expected " + std::to_string(t.column_names.size()) +
                               " cells, found " + std::to_string(cells.size()));
        t.rows.push_back(std::move(cells));
        t.row_lines.push_back(line_no);
    }
    if (t.rows.empty()) throw DatasetError("dataset: no data rows in " + spec.path.string());
    return t;
}

RawTable read_arff(const DatasetSpec& spec) {
    std::ifstream f(spec.path);
    if (!f) throw DatasetError("dataset: cannot open " + spec.path.string());
    RawTable t;
    t.domains_declared = true;
    std::string line;
    std::size_t line_no = 0;
    bool in_data = false;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '%') continue;
        if (!in_data) {
            const std::string low = lower(trimmed);
            if (low.rfind("@relation", 0) == 0) continue;
            if (low.rfind("@attribute", 0) == 0) {
                std::string rest = trim(trimmed.substr(std::string("@attribute").size()));
                std::string name, type;
                if (!rest.empty() && (rest[0] == '\'' || rest[0] == '"')) {
                    const char quote = rest[0];
                    const std::size_t close = rest.find(quote, 1);
                    if (close == std::string::npos)
                        throw DatasetError("dataset: unterminated attribute name at line " +
                                           std::to_string(line_no));
                    name = rest.substr(1, close - 1);
                    type = trim(rest.substr(close + 1));
                } else {
                    const std::size_t sp = rest.find_first_of(" \t");
                    if (sp == std::string::npos)
                        throw DatasetError("dataset: malformed @attribute at line " +
                                           std::to_string(line_no));
                    name = rest.substr(0, sp);
                    type = trim(rest.substr(sp));
                }
                t.column_names.push_back(name);
                if (!type.empty() && type[0] == '{') {
                    const std::size_t close = type.find('}');
                    if (close == std::string::npos)
                        throw DatasetError("dataset: unterminated nominal domain at line " +
                                           std::to_string(line_no));
                    std::vector<std::string> domain;
                    for (auto& v : split_csv(type.substr(1, close - 1)))
                        domain.push_back(unquote(v));
                    if (domain.empty())
                        throw DatasetError("dataset: empty nominal domain at line " +
                                           std::to_string(line_no));
                    t.nominal_domains.push_back(std::move(domain));
                } else {
                    const std::string low_type = lower(type);
                    if (low_type.rfind("numeric", 0) != 0 && low_type.rfind("real", 0) != 0 &&
                        low_type.rfind("integer", 0) != 0)
                        throw DatasetError("dataset: unsupported attribute type '" + type +
                                           "' at line " + std::to_string(line_no));
                    t.nominal_domains.emplace_back();
                }
                continue;
            }
            if (low.rfind("@data", 0) == 0) {
                if (t.column_names.empty())
                    throw DatasetError("dataset: @data before any @attribute");
                in_data = true;
                continue;
            }
            throw DatasetError("dataset: unexpected ARFF line " + std::to_string(line_no));
        }
        auto cells = split_csv(trimmed);
        if (cells.size() != t.column_names.size())
            throw DatasetError("dataset: malformed row at line " + std::to_string(line_no) +
                               ": expected " + std::to_string(t.column_names.size()) +
                               " cells, found " + std::to_string(cells.size()));
        for (auto& c : cells) c = unquote(c);
        t.rows.push_back(std::move(cells));
        t.row_lines.push_back(line_no);
    }
    if (t.rows.empty()) throw DatasetError("dataset: no data rows in " + spec.path.string());
    return t;
}

std::size_t resolve_label_column(const DatasetSpec& spec, const RawTable& t) {
    if (std::holds_alternative<std::size_t>(spec.label_column)) {
        const std::size_t idx = std::get<std::size_t>(spec.label_column);
        if (idx >= t.column_names.size())
            throw DatasetError("dataset: label column index " + std::to_string(idx) +
                               " out of range (have " + std::to_string(t.column_names.size()) +
                               " columns)");
        return idx;
    }
    const std::string& name = std::get<std::string>(spec.label_column);
    for (std::size_t i = 0; i < t.column_names.size(); ++i)
        if (lower(t.column_names[i]) == lower(name)) return i;
    throw DatasetError("dataset: label column '" + name + "' not found");
}

}  // namespace

LoadedDataset load_dataset(const DatasetSpec& spec) {
    RawTable t = spec.format == DatasetFormat::Arff ? read_arff(spec) : read_csv(spec);
    const std::size_t label_col = resolve_label_column(spec, t);
    const std::size_t n_cols = t.column_names.size();
    const std::size_t n_attrs = n_cols - 1;

    // Column typing: numeric iff every value parses; otherwise nominal
    // with categories in declared (ARFF) or first-appearance order.
    std::vector<bool> numeric(n_cols, true);
    if (t.domains_declared) {
        for (std::size_t c = 0; c < n_cols; ++c) numeric[c] = t.nominal_domains[c].empty();
    } else {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == label_col) continue;
            double tmp;
            for (const auto& row : t.rows) {
                if (row[c] == "?")
                    continue;  // reported as an error below, not a typing signal
                if (!parse_number(row[c], tmp)) {
                    numeric[c] = false;
                    break;
                }
            }
        }
    }
    std::vector<std::map<std::string, std::size_t>> categories(n_cols);
    std::vector<std::vector<std::string>> category_names(n_cols);
    if (t.domains_declared) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == label_col || numeric[c]) continue;
            for (const auto& v : t.nominal_domains[c]) {
                categories[c].emplace(v, category_names[c].size());
                category_names[c].push_back(v);
            }
        }
    } else {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == label_col || numeric[c]) continue;
            for (const auto& row : t.rows)
                if (categories[c].emplace(row[c], category_names[c].size()).second)
                    category_names[c].push_back(row[c]);
        }
    }

    std::vector<std::size_t> offsets(n_cols, 0);
    std::size_t dim = 0;
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (c == label_col) continue;
        offsets[c] = dim;
        dim += numeric[c] ? 1 : category_names[c].size();
    }

    LoadedDataset out;
    out.dimensionality = dim;
    out.raw_attributes = n_attrs;
    std::map<std::string, int> label_map;
    auto data = std::make_shared<std::vector<LabeledInstance>>();
    data->reserve(t.rows.size());

    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        LabeledInstance li;
        li.instance.features.assign(dim, 0.0);
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == label_col) continue;
            const std::string& cell = row[c];
            if (cell == "?" || cell.empty())
                throw DatasetError("dataset: missing value at line " +
                                   std::to_string(t.row_lines[r]) + ", column " +
                                   t.column_names[c]);
            if (numeric[c]) {
                double v;
                if (!parse_number(cell, v) || !std::isfinite(v))
                    throw DatasetError("dataset: bad numeric value '" + cell + "' at line " +
                                       std::to_string(t.row_lines[r]) + ", column " +
                                       t.column_names[c]);
                li.instance.features[offsets[c]] = v;
            } else {
                auto it = categories[c].find(cell);
                if (it == categories[c].end())
                    throw DatasetError("dataset: undeclared nominal value '" + cell +
                                       "' at line " + std::to_string(t.row_lines[r]) +
                                       ", column " + t.column_names[c]);
                li.instance.features[offsets[c] + it->second] = 1.0;
            }
        }
        const std::string& label_cell = row[label_col];
        if (label_cell == "?" || label_cell.empty())
            throw DatasetError("dataset: missing label at line " +
                               std::to_string(t.row_lines[r]));
        auto [it, inserted] = label_map.emplace(label_cell, static_cast<int>(out.label_names.size()));
        if (inserted) out.label_names.push_back(label_cell);
        li.label = it->second;
        data->push_back(std::move(li));
    }
    out.classes = static_cast<int>(out.label_names.size());
    out.data = std::move(data);

    if (spec.expect_instances && *spec.expect_instances != out.data->size())
        throw DatasetError("dataset: expected " + std::to_string(*spec.expect_instances) +
                           " instances, found " + std::to_string(out.data->size()));
    if (spec.expect_attributes && *spec.expect_attributes != n_attrs)
        throw DatasetError("dataset: expected " + std::to_string(*spec.expect_attributes) +
                           " attributes, found " + std::to_string(n_attrs));
    if (spec.expect_classes && *spec.expect_classes != static_cast<std::size_t>(out.classes))
        throw DatasetError("dataset: expected " + std::to_string(*spec.expect_classes) +
                           " classes, found " + std::to_string(out.classes));
    return out;
}

std::optional<NormalizeMode> normalize_mode_from_string(const std::string& s) {
    if (s == "none") return NormalizeMode::None;
    if (s == "online-standardize") return NormalizeMode::OnlineStandardize;
    return std::nullopt;
}

std::string to_string(NormalizeMode mode) {
    return mode == NormalizeMode::None ? "none" : "online-standardize";
}

namespace {

class StandardizingStream final : public StreamSource {
public:
    explicit StandardizingStream(std::unique_ptr<StreamSource> inner)
        : inner_(std::move(inner)),
          n_(0),
          mean_(inner_->dimensionality(), 0.0),
          m2_(inner_->dimensionality(), 0.0) {}

    std::size_t dimensionality() const override { return inner_->dimensionality(); }
    int class_count() const override { return inner_->class_count(); }
    bool has_true_concept() const override { return inner_->has_true_concept(); }
    std::vector<double> true_theta() const override { return inner_->true_theta(); }

    std::optional<LabeledInstance> next() override {
        auto li = inner_->next();
        if (!li) return std::nullopt;
        n_ += 1.0;
        auto& x = li->instance.features;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double delta = x[i] - mean_[i];
            mean_[i] += delta / n_;
            m2_[i] += delta * (x[i] - mean_[i]);
            const double sd = std::sqrt(m2_[i] / n_);
            x[i] = (x[i] - mean_[i]) / std::max(sd, 1e-8);
        }
        return li;
    }

private:
    std::unique_ptr<StreamSource> inner_;
    double n_;
    std::vector<double> mean_;
    std::vector<double> m2_;
};

}  // namespace

std::unique_ptr<StreamSource> normalize(std::unique_ptr<StreamSource> inner,
                                        NormalizeMode mode) {
    if (mode == NormalizeMode::None) return inner;
    return std::make_unique<StandardizingStream>(std::move(inner));
}

}  // namespace driftbench
