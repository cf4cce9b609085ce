#include "driftbench/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "driftbench/hoeffding_tree.hpp"
#include "driftbench/knn.hpp"
#include "driftbench/reset_wrapper.hpp"
#include "driftbench/rls.hpp"
#include "driftbench/sgd.hpp"

namespace driftbench {

using nlohmann::json;

namespace {

constexpr int kConfigVersion = 1;

double require_finite(const json& j, const std::string& field, double fallback,
                      bool required = false) {
    if (!j.contains(field)) {
        if (required) throw ConfigError(field, "missing");
        return fallback;
    }
    if (!j[field].is_number()) throw ConfigError(field, "must be a number");
    const double v = j[field].get<double>();
    if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
    return v;
}

std::uint64_t require_uint(const json& j, const std::string& field, std::uint64_t fallback) {
    if (!j.contains(field)) return fallback;
    if (!j[field].is_number_unsigned() && !j[field].is_number_integer())
        throw ConfigError(field, "must be a non-negative integer");
    const auto v = j[field].get<std::int64_t>();
    if (v < 0) throw ConfigError(field, "must be non-negative");
    return static_cast<std::uint64_t>(v);
}

StreamSpec parse_stream(const json& j) {
    if (!j.is_object()) throw ConfigError("stream", "must be an object");
    StreamSpec s;
    const std::string type = j.value("type", std::string("hyperplane"));
    if (type == "hyperplane" || type == "rtg") {
        s.type = type == "rtg" ? StreamSpec::Type::RandomTree : StreamSpec::Type::Hyperplane;
        s.d = static_cast<std::size_t>(require_uint(j, "d", type == "rtg" ? 10 : 2));
        if (s.d == 0) throw ConfigError("stream.d", "must be >= 1");
        if (j.contains("drift")) {
            auto kind = drift_kind_from_string(j["drift"].get<std::string>());
            if (!kind)
                throw ConfigError("stream.drift",
                                  "must be one of none|sudden|incremental|gradual|constant-incremental");
            s.kind = *kind;
        }
        s.angle = require_finite(j, "angle", 0.01);
        if (j.contains("schedule")) {
            const json& sch = j["schedule"];
            if (!sch.is_object()) throw ConfigError("stream.schedule", "must be an object");
            s.schedule.tau0 = static_cast<std::size_t>(require_uint(sch, "tau0", 1000));
            s.schedule.tau1 = static_cast<std::size_t>(require_uint(sch, "tau1", 5000));
            s.schedule.tau2 = static_cast<std::size_t>(require_uint(sch, "tau2", 6000));
            s.schedule.total = static_cast<std::size_t>(require_uint(sch, "total", 10000));
        }
        try {
            s.schedule.validate();
        } catch (const std::exception& e) {
            throw ConfigError("stream.schedule", e.what());
        }
        s.classes = static_cast<int>(require_uint(j, "classes", 2));
        s.depth = static_cast<int>(require_uint(j, "depth", 5));
    } else if (type == "dataset") {
        s.type = StreamSpec::Type::Dataset;
        if (!j.contains("path")) throw ConfigError("stream.path", "missing");
        s.dataset.path = j["path"].get<std::string>();
        const std::string fmt = j.value("format", std::string("csv"));
        if (fmt == "csv")
            s.dataset.format = DatasetFormat::Csv;
        else if (fmt == "arff")
            s.dataset.format = DatasetFormat::Arff;
        else
            throw ConfigError("stream.format", "must be csv or arff");
        if (j.contains("label")) {
            if (j["label"].is_number_unsigned() || j["label"].is_number_integer())
                s.dataset.label_column = static_cast<std::size_t>(j["label"].get<std::int64_t>());
            else if (j["label"].is_string())
                s.dataset.label_column = j["label"].get<std::string>();
            else
                throw ConfigError("stream.label", "must be a column index or name");
        }
        if (j.contains("header")) s.dataset.header = j["header"].get<bool>();
        if (j.contains("expect_instances"))
            s.dataset.expect_instances = static_cast<std::size_t>(require_uint(j, "expect_instances", 0));
        if (j.contains("expect_attributes"))
            s.dataset.expect_attributes = static_cast<std::size_t>(require_uint(j, "expect_attributes", 0));
        if (j.contains("expect_classes"))
            s.dataset.expect_classes = static_cast<std::size_t>(require_uint(j, "expect_classes", 0));
        if (j.contains("normalize")) {
            auto mode = normalize_mode_from_string(j["normalize"].get<std::string>());
            if (!mode) throw ConfigError("stream.normalize", "must be none or online-standardize");
            s.normalization = *mode;
        }
        if (j.contains("schedule")) {
            const json& sch = j["schedule"];
            s.schedule.tau0 = static_cast<std::size_t>(require_uint(sch, "tau0", 0));
            s.schedule.tau1 = s.schedule.tau0;
            s.schedule.tau2 = s.schedule.tau0;
            s.schedule.total = static_cast<std::size_t>(require_uint(sch, "total", 0));
        } else {
            s.schedule = DriftSchedule{0, 0, 0, 0};
        }
    } else {
        throw ConfigError("stream.type", "must be hyperplane, rtg, or dataset");
    }
    return s;
}

LearnerSpec parse_learner(const json& j, const std::string& prefix) {
    if (!j.is_object()) throw ConfigError(prefix, "must be an object");
    LearnerSpec l;
    if (!j.contains("type")) throw ConfigError(prefix + ".type", "missing");
    l.type = j["type"].get<std::string>();
    if (l.type != "sgd" && l.type != "knn" && l.type != "ht" && l.type != "rls" &&
        l.type != "reset")
        throw ConfigError(prefix + ".type", "must be sgd, knn, ht, rls, or reset");

    l.learning_rate = require_finite(j, "lambda", l.learning_rate);
    if (l.learning_rate <= 0.0) throw ConfigError(prefix + ".lambda", "must be > 0");
    l.l2 = require_finite(j, "l2", l.l2);
    if (l.l2 < 0.0) throw ConfigError(prefix + ".l2", "must be >= 0");
    l.momentum = require_finite(j, "momentum", l.momentum);
    if (l.momentum < 0.0 || l.momentum >= 1.0)
        throw ConfigError(prefix + ".momentum", "must be in [0, 1)");
    l.degree = static_cast<int>(require_uint(j, "degree", 1));
    if (l.degree < 1) throw ConfigError(prefix + ".degree", "must be >= 1");
    l.k = static_cast<std::size_t>(require_uint(j, "k", l.k));
    l.buffer = static_cast<std::size_t>(require_uint(j, "buffer", l.buffer));
    l.split_confidence = require_finite(j, "delta", l.split_confidence);
    l.tie_threshold = require_finite(j, "tie", l.tie_threshold);
    l.grace_period = static_cast<std::size_t>(require_uint(j, "nmin", l.grace_period));
    l.rls_delta = require_finite(j, "rls_delta", l.rls_delta);
    l.forgetting = require_finite(j, "forgetting", l.forgetting);
    l.reset_window = static_cast<std::size_t>(require_uint(j, "window", l.reset_window));
    l.sensitivity = require_finite(j, "sensitivity", l.sensitivity);
    if (l.type == "reset") {
        if (!j.contains("inner")) throw ConfigError(prefix + ".inner", "missing");
        l.inner = std::make_shared<LearnerSpec>(parse_learner(j["inner"], prefix + ".inner"));
        if (l.inner->type == "reset")
            throw ConfigError(prefix + ".inner", "reset wrappers do not nest");
    }
    return l;
}

json stream_to_json(const StreamSpec& s) {
    json j;
    switch (s.type) {
        case StreamSpec::Type::Hyperplane:
        case StreamSpec::Type::RandomTree: {
            j["type"] = s.type == StreamSpec::Type::RandomTree ? "rtg" : "hyperplane";
            j["d"] = s.d;
            j["drift"] = to_string(s.kind);
            j["angle"] = s.angle;
            j["schedule"] = {{"tau0", s.schedule.tau0},
                             {"tau1", s.schedule.tau1},
                             {"tau2", s.schedule.tau2},
                             {"total", s.schedule.total}};
            if (s.type == StreamSpec::Type::RandomTree) {
                j["classes"] = s.classes;
                j["depth"] = s.depth;
            }
            break;
        }
        case StreamSpec::Type::Dataset: {
            j["type"] = "dataset";
            j["path"] = s.dataset.path.string();
            j["format"] = s.dataset.format == DatasetFormat::Arff ? "arff" : "csv";
            if (std::holds_alternative<std::size_t>(s.dataset.label_column))
                j["label"] = std::get<std::size_t>(s.dataset.label_column);
            else
                j["label"] = std::get<std::string>(s.dataset.label_column);
            if (s.dataset.header) j["header"] = *s.dataset.header;
            if (s.dataset.expect_instances) j["expect_instances"] = *s.dataset.expect_instances;
            if (s.dataset.expect_attributes) j["expect_attributes"] = *s.dataset.expect_attributes;
            if (s.dataset.expect_classes) j["expect_classes"] = *s.dataset.expect_classes;
            j["normalize"] = to_string(s.normalization);
            j["schedule"] = {{"tau0", s.schedule.tau0}, {"total", s.schedule.total}};
            break;
        }
    }
    return j;
}

json learner_to_json(const LearnerSpec& l) {
    json j;
    j["type"] = l.type;
    if (l.type == "sgd") {
        j["lambda"] = l.learning_rate;
        j["l2"] = l.l2;
        j["momentum"] = l.momentum;
        j["degree"] = l.degree;
    } else if (l.type == "knn") {
        j["k"] = l.k;
        j["buffer"] = l.buffer;
    } else if (l.type == "ht") {
        j["delta"] = l.split_confidence;
        j["tie"] = l.tie_threshold;
        j["nmin"] = l.grace_period;
    } else if (l.type == "rls") {
        j["rls_delta"] = l.rls_delta;
        j["forgetting"] = l.forgetting;
    } else if (l.type == "reset") {
        j["window"] = l.reset_window;
        j["sensitivity"] = l.sensitivity;
        j["inner"] = learner_to_json(*l.inner);
    }
    return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config", "top level must be an object");
    const int version = static_cast<int>(require_uint(j, "config_version", kConfigVersion));
    if (version != kConfigVersion)
        throw ConfigError("config_version",
                          "unsupported version " + std::to_string(version));

    ExperimentConfig cfg;
    if (!j.contains("stream")) throw ConfigError("stream", "missing");
    cfg.stream = parse_stream(j["stream"]);

    if (!j.contains("learners") || !j["learners"].is_array() || j["learners"].empty())
        throw ConfigError("learners", "must be a non-empty array");
    for (std::size_t i = 0; i < j["learners"].size(); ++i)
        cfg.learners.push_back(
            parse_learner(j["learners"][i], "learners[" + std::to_string(i) + "]"));

    if (j.contains("eval")) {
        const json& e = j["eval"];
        cfg.eval_window = static_cast<std::size_t>(require_uint(e, "window", 200));
        if (cfg.eval_window == 0) throw ConfigError("eval.window", "must be >= 1");
        cfg.record_trajectory = e.value("record_trajectory", false);
        cfg.timing = e.value("timing", false);
    }

    if (j.contains("seeds")) {
        if (!j["seeds"].is_array() || j["seeds"].empty())
            throw ConfigError("seeds", "must be a non-empty array");
        cfg.seeds.clear();
        for (const auto& s : j["seeds"]) {
            if (!s.is_number_integer() && !s.is_number_unsigned())
                throw ConfigError("seeds", "entries must be integers");
            cfg.seeds.push_back(s.get<std::uint64_t>());
        }
    } else if (j.contains("seed")) {
        cfg.seeds = {require_uint(j, "seed", 1)};
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    cfg.jobs = static_cast<int>(require_uint(j, "jobs", 1));
    if (cfg.jobs < 1) throw ConfigError("jobs", "must be >= 1");
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config", "cannot open " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.learners.empty()) throw ConfigError("learners", "must be a non-empty array");
    if (cfg.seeds.empty()) throw ConfigError("seeds", "must be a non-empty array");
    if (!std::isfinite(cfg.stream.angle)) throw ConfigError("stream.angle", "must be finite");
    if (cfg.stream.type != StreamSpec::Type::Dataset) {
        try {
            cfg.stream.schedule.validate();
        } catch (const std::exception& e) {
            throw ConfigError("stream.schedule", e.what());
        }
        if (cfg.stream.schedule.total == 0) throw ConfigError("stream.schedule.total", "must be >= 1");
    }
    const bool rotational = cfg.stream.kind == DriftKind::Incremental ||
                            cfg.stream.kind == DriftKind::ConstantIncremental;
    if (cfg.stream.type == StreamSpec::Type::Hyperplane && rotational && cfg.stream.d < 2)
        throw ConfigError("stream.d", "incremental drift needs d >= 2");
}

std::string serialize_config(const ExperimentConfig& cfg) {
    json j;
    j["config_version"] = kConfigVersion;
    j["stream"] = stream_to_json(cfg.stream);
    j["learners"] = json::array();
    for (const auto& l : cfg.learners) j["learners"].push_back(learner_to_json(l));
    j["eval"] = {{"window", cfg.eval_window},
                 {"record_trajectory", cfg.record_trajectory},
                 {"timing", cfg.timing}};
    j["seeds"] = cfg.seeds;
    j["out"] = cfg.out.string();
    j["jobs"] = cfg.jobs;
    j["rng"] = Rng::kAlgorithm;
    j["rotation_plane"] = "coords(0,1)";
    return j.dump(2) + "\n";
}

std::unique_ptr<StreamSource> make_stream(const StreamSpec& spec, std::uint64_t seed) {
    switch (spec.type) {
        case StreamSpec::Type::Hyperplane: {
            HyperplaneConfig c;
            c.d = spec.d;
            c.kind = spec.kind;
            c.angle = spec.angle;
            c.schedule = spec.schedule;
            c.seed = seed;
            return std::make_unique<HyperplaneStream>(c);
        }
        case StreamSpec::Type::RandomTree: {
            RandomTreeConfig c;
            c.d = spec.d;
            c.classes = spec.classes;
            c.depth = spec.depth;
            c.total = spec.schedule.total;
            c.seed = seed;
            return std::make_unique<RandomTreeStream>(c);
        }
        case StreamSpec::Type::Dataset: {
            auto ds = load_dataset(spec.dataset);
            return normalize(std::make_unique<DatasetStream>(std::move(ds)), spec.normalization);
        }
    }
    throw ConfigError("stream.type", "unknown stream type");
}

std::unique_ptr<Learner> make_learner(const LearnerSpec& spec, std::size_t d, int classes) {
    if (spec.type == "sgd") {
        SgdConfig c;
        c.learning_rate = spec.learning_rate;
        c.l2 = spec.l2;
        c.momentum = spec.momentum;
        c.degree = spec.degree;
        return std::make_unique<SgdClassifier>(d, classes, c);
    }
    if (spec.type == "knn") {
        KnnConfig c;
        c.k = spec.k;
        c.buffer = spec.buffer;
        return std::make_unique<KnnClassifier>(d, classes, c);
    }
    if (spec.type == "ht") {
        HoeffdingTreeConfig c;
        c.split_confidence = spec.split_confidence;
        c.tie_threshold = spec.tie_threshold;
        c.grace_period = spec.grace_period;
        return std::make_unique<HoeffdingTree>(d, classes, c);
    }
    if (spec.type == "rls") {
        RlsConfig c;
        c.delta = spec.rls_delta;
        c.forgetting = spec.forgetting;
        return std::make_unique<RlsClassifier>(d, classes, c);
    }
    if (spec.type == "reset") {
        ResetConfig c;
        c.window = spec.reset_window;
        c.sensitivity = spec.sensitivity;
        LearnerSpec inner = *spec.inner;
        return std::make_unique<DetectAndReset>(
            [inner, d, classes] { return make_learner(inner, d, classes); }, c);
    }
    throw ConfigError("learner.type", "unknown learner type " + spec.type);
}

std::string learner_spec_id(const LearnerSpec& spec) {
    if (spec.type == "reset") return "reset(" + learner_spec_id(*spec.inner) + ")";
    if (spec.type == "sgd") {
        // Mirror SgdClassifier::id without needing stream dimensions.
        std::string base = spec.degree > 1 ? "pbf-sgd-" + std::to_string(spec.degree) : "sgd";
        if (spec.momentum > 0.0) {
            std::string m = std::to_string(spec.momentum);
            m.erase(m.find_last_not_of('0') + 1);
            if (!m.empty() && m.back() == '.') m.pop_back();
            base += "-m" + m;
        }
        return base;
    }
    return spec.type;
}

std::string stream_description(const StreamSpec& spec) {
    switch (spec.type) {
        case StreamSpec::Type::Hyperplane: {
            std::ostringstream os;
            os << "hyperplane d=" << spec.d << " drift=" << to_string(spec.kind);
            if (spec.kind == DriftKind::Incremental || spec.kind == DriftKind::ConstantIncremental)
                os << " angle=" << spec.angle;
            os << " tau0=" << spec.schedule.tau0 << " tau1=" << spec.schedule.tau1
               << " tau2=" << spec.schedule.tau2 << " T=" << spec.schedule.total;
            return os.str();
        }
        case StreamSpec::Type::RandomTree: {
            std::ostringstream os;
            os << "rtg d=" << spec.d << " classes=" << spec.classes << " depth=" << spec.depth
               << " T=" << spec.schedule.total;
            return os.str();
        }
        case StreamSpec::Type::Dataset: {
            std::ostringstream os;
            os << "dataset " << spec.dataset.path.string()
               << " normalize=" << to_string(spec.normalization);
            return os.str();
        }
    }
    return "unknown";
}

}  // namespace driftbench
