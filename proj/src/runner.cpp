#include "driftbench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "driftbench/csv_io.hpp"
#include "driftbench/rng.hpp"
#include "driftbench/svg_plot.hpp"

namespace driftbench {

std::string sanitize_filename(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_')
            out += c;
        else
            out += '_';
    }
    return out;
}

namespace {

EvalConfig make_eval_config(const ExperimentConfig& cfg) {
    EvalConfig e;
    e.window = cfg.eval_window;
    e.record_trajectory = cfg.record_trajectory;
    e.timing = cfg.timing;
    e.schedule = cfg.stream.schedule;
    if (cfg.stream.type == StreamSpec::Type::Dataset) {
        // Dataset length may be unknown up front; only tau0 matters here.
        e.schedule.tau1 = e.schedule.tau0;
        e.schedule.tau2 = e.schedule.tau0;
        e.schedule.total = std::numeric_limits<std::size_t>::max();
    }
    return e;
}

// Caps a dataset stream at the configured instance count.
class LimitStream final : public StreamSource {
public:
    LimitStream(std::unique_ptr<StreamSource> inner, std::size_t limit)
        : inner_(std::move(inner)), limit_(limit) {}
    std::size_t dimensionality() const override { return inner_->dimensionality(); }
    int class_count() const override { return inner_->class_count(); }
    std::optional<LabeledInstance> next() override {
        if (emitted_ >= limit_) return std::nullopt;
        auto li = inner_->next();
        if (li) ++emitted_;
        return li;
    }

private:
    std::unique_ptr<StreamSource> inner_;
    std::size_t limit_;
    std::size_t emitted_ = 0;
};

std::unique_ptr<StreamSource> build_stream(const ExperimentConfig& cfg, std::uint64_t seed) {
    auto stream = make_stream(cfg.stream, seed);
    if (cfg.stream.type == StreamSpec::Type::Dataset && cfg.stream.schedule.total > 0)
        stream = std::make_unique<LimitStream>(std::move(stream), cfg.stream.schedule.total);
    return stream;
}

void write_trajectory_csv(const std::vector<TrajectoryPoint>& traj,
                          const std::filesystem::path& path) {
    if (traj.empty()) return;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    const std::size_t d = traj.front().theta_true.size();
    f << "t";
    for (std::size_t i = 0; i < d; ++i) f << ",theta" << i;
    for (std::size_t i = 0; i < d; ++i) f << ",theta_hat" << i;
    f << '\n';
    for (const auto& p : traj) {
        f << p.t;
        for (double v : p.theta_true) f << ',' << format_double(v);
        for (double v : p.theta_hat) f << ',' << format_double(v);
        f << '\n';
    }
}

}  // namespace

std::vector<RunOutput> run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::filesystem::create_directories(cfg.out);
    {
        std::ofstream f(cfg.out / "config.json");
        if (!f) throw std::runtime_error("cannot write " + (cfg.out / "config.json").string());
        f << serialize_config(cfg);
    }

    struct Task {
        std::size_t learner_idx;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::uint64_t seed : cfg.seeds)
        for (std::size_t li = 0; li < cfg.learners.size(); ++li) tasks.push_back({li, seed});

    std::vector<RunOutput> outputs(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const Task& task = tasks[i];
                const LearnerSpec& lspec = cfg.learners[task.learner_idx];
                auto stream = build_stream(cfg, task.seed);
                auto learner =
                    make_learner(lspec, stream->dimensionality(), stream->class_count());

                RunOutput out;
                out.learner_id = learner->id();
                out.seed = task.seed;
                RunResult res = prequential_run(*learner, *stream, make_eval_config(cfg));
                res.summary.metadata["seed"] = std::to_string(task.seed);
                res.summary.metadata["stream"] = stream_description(cfg.stream);
                res.summary.metadata["rng"] = Rng::kAlgorithm;
                res.summary.metadata["eval_window"] = std::to_string(cfg.eval_window);
                if (cfg.stream.type == StreamSpec::Type::Hyperplane)
                    res.summary.metadata["rotation_plane"] = "coords(0,1)";

                const std::string base = sanitize_filename(out.learner_id) + "__seed" +
                                         std::to_string(task.seed);
                out.csv_path = cfg.out / (base + ".csv");
                emit_csv(res.records, res.summary, out.csv_path);
                if (!res.trajectory.empty())
                    write_trajectory_csv(res.trajectory, cfg.out / (base + "_trajectory.csv"));

                out.summary = std::move(res.summary);
                out.records = std::move(res.records);
                out.trajectory = std::move(res.trajectory);
                outputs[i] = std::move(out);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.jobs, 1)), tasks.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Per-seed sliding-accuracy overlay.
    for (std::uint64_t seed : cfg.seeds) {
        std::vector<Series> acc_series;
        std::vector<Series> trk_series;
        for (const auto& out : outputs) {
            if (out.seed != seed) continue;
            Series s{out.learner_id, {}, {}};
            s.x.reserve(out.records.size());
            s.y.reserve(out.records.size());
            for (const auto& r : out.records) {
                s.x.push_back(static_cast<double>(r.t));
                s.y.push_back(r.window_acc);
            }
            acc_series.push_back(std::move(s));
            Series tr{out.learner_id, {}, {}};
            for (const auto& r : out.records) {
                if (!r.tracking_err) continue;
                tr.x.push_back(static_cast<double>(r.t));
                tr.y.push_back(*r.tracking_err);
            }
            if (!tr.x.empty()) trk_series.push_back(std::move(tr));
        }
        if (!acc_series.empty()) {
            PlotOptions opts;
            opts.title = "Sliding-window accuracy (w=" + std::to_string(cfg.eval_window) +
                         "), seed " + std::to_string(seed);
            opts.y_label = "accuracy";
            emit_plot(acc_series, cfg.out / ("accuracy_seed" + std::to_string(seed) + ".svg"),
                      opts);
        }
        if (!trk_series.empty()) {
            PlotOptions opts;
            opts.title = "Concept tracking error, seed " + std::to_string(seed);
            opts.y_label = "tracking error";
            emit_plot(trk_series, cfg.out / ("tracking_seed" + std::to_string(seed) + ".svg"),
                      opts);
        }
    }
    return outputs;
}

}  // namespace driftbench
