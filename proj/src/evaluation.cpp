#include "driftbench/evaluation.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace driftbench {

namespace {

double unit_dot(const std::vector<double>& a, const std::vector<double>& b,
                double na, double nb) {
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot / (na * nb);
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double tracking_error(const std::vector<double>& theta_true,
                      const std::vector<double>& theta_hat, bool* zero_flag) {
    if (theta_true.size() != theta_hat.size())
        throw std::invalid_argument("tracking_error: length mismatch");
    if (zero_flag) *zero_flag = false;
    const double nt = norm(theta_true);
    const double nh = norm(theta_hat);
    if (nt == 0.0 || nh == 0.0) {
        if (zero_flag) *zero_flag = true;
        return 4.0;
    }
    double cos = unit_dot(theta_true, theta_hat, nt, nh);
    if (cos < 0.0) cos = -cos;  // sign-align the estimate
    if (cos > 1.0) cos = 1.0;
    return 2.0 - 2.0 * cos;
}

double tracking_error_raw(const std::vector<double>& theta_true,
                          const std::vector<double>& theta_hat) {
    if (theta_true.size() != theta_hat.size())
        throw std::invalid_argument("tracking_error_raw: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < theta_true.size(); ++i) {
        const double diff = theta_true[i] - theta_hat[i];
        s += diff * diff;
    }
    return s;
}

RunResult prequential_run(Learner& learner, StreamSource& stream, const EvalConfig& cfg) {
    if (cfg.window == 0) throw std::invalid_argument("prequential_run: window must be >= 1");
    cfg.schedule.validate();
    if (cfg.record_trajectory && !learner.weights())
        throw std::logic_error("prequential_run: trajectory capture needs a parametric learner");

    using clock = std::chrono::steady_clock;
    RunResult out;
    std::deque<char> window;
    std::size_t window_correct = 0;
    std::size_t correct_total = 0;
    std::size_t t = 0;

    const auto run_start = clock::now();
    while (auto li = stream.next()) {
        std::int64_t predict_ns = 0, update_ns = 0;
        int pred;
        if (cfg.timing) {
            const auto t0 = clock::now();
            pred = learner.predict(li->instance);
            predict_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        } else {
            pred = learner.predict(li->instance);
        }

        // theta_hat as used for this prediction, captured before the update.
        std::optional<double> tracking;
        if (stream.has_true_concept()) {
            if (auto w = learner.weights(); w && w->size() == stream.dimensionality()) {
                const auto truth = stream.true_theta();
                tracking = cfg.raw_tracking ? tracking_error_raw(truth, *w)
                                            : tracking_error(truth, *w);
                if (cfg.record_trajectory)
                    out.trajectory.push_back({t, truth, std::move(*w)});
            }
        }

        const bool evaluated = t >= cfg.schedule.tau0;
        if (evaluated) {
            const bool correct = pred == li->label;
            correct_total += correct;
            window.push_back(correct ? 1 : 0);
            window_correct += correct;
            if (window.size() > cfg.window) {
                window_correct -= window.front();
                window.pop_front();
            }
        }

        if (cfg.timing) {
            const auto t0 = clock::now();
            learner.update(*li);
            update_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        } else {
            learner.update(*li);
        }

        if (evaluated) {
            EvalRecord rec;
            rec.t = t;
            rec.correct = window.back() != 0;
            rec.window_acc = static_cast<double>(window_correct) / static_cast<double>(window.size());
            rec.tracking_err = tracking;
            rec.predict_ns = predict_ns;
            rec.update_ns = update_ns;
            rec.model_size = learner.model_size();
            out.records.push_back(std::move(rec));
        }
        ++t;
    }
    out.summary.total_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - run_start).count();

    if (out.records.empty())
        throw std::invalid_argument("prequential_run: stream ended before tau0, nothing to evaluate");

    out.summary.instances = t;
    out.summary.evaluated = out.records.size();
    out.summary.overall_accuracy =
        static_cast<double>(correct_total) / static_cast<double>(out.records.size());
    out.summary.metadata["learner"] = learner.id();
    return out;
}

std::vector<double> sliding_accuracy(const std::vector<EvalRecord>& records,
                                     std::size_t window) {
    if (window == 0) throw std::invalid_argument("sliding_accuracy: window must be >= 1");
    std::vector<double> out;
    out.reserve(records.size());
    std::size_t correct = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        correct += records[i].correct;
        if (i >= window) correct -= records[i - window].correct;
        const std::size_t have = std::min(window, i + 1);
        out.push_back(static_cast<double>(correct) / static_cast<double>(have));
    }
    return out;
}

}  // namespace driftbench
