#include "driftbench/knn.hpp"

#include <algorithm>
#include <stdexcept>

namespace driftbench {

KnnClassifier::KnnClassifier(std::size_t d, int classes, const KnnConfig& cfg)
    : d_(d), classes_(classes), cfg_(cfg) {
    if (cfg.k == 0) throw std::invalid_argument("KnnClassifier: k must be >= 1");
    if (cfg.buffer == 0) throw std::invalid_argument("KnnClassifier: buffer must be >= 1");
}

int KnnClassifier::predict(const Instance& x) const {
    if (buffer_.empty()) return 0;
    if (x.features.size() != d_)
        throw std::invalid_argument("KnnClassifier: feature length mismatch");

    // (squared distance, buffer index): index makes tie order deterministic.
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(buffer_.size());
    for (std::size_t i = 0; i < buffer_.size(); ++i) {
        const auto& f = buffer_[i].instance.features;
        double d2 = 0.0;
        for (std::size_t j = 0; j < d_; ++j) {
            double diff = f[j] - x.features[j];
            d2 += diff * diff;
        }
        dist.emplace_back(d2, i);
    }
    const std::size_t k = std::min(cfg_.k, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());

    std::vector<int> votes(static_cast<std::size_t>(classes_), 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(buffer_[dist[i].second].label)];
    int best = 0;
    for (int c = 1; c < classes_; ++c)
        if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) best = c;
    return best;
}

void KnnClassifier::update(const LabeledInstance& li) {
    if (li.instance.features.size() != d_)
        throw std::invalid_argument("KnnClassifier: feature length mismatch");
    if (li.label < 0 || li.label >= classes_)
        throw std::invalid_argument("KnnClassifier: label out of range");
    buffer_.push_back(li);
    if (buffer_.size() > cfg_.buffer) buffer_.pop_front();
}

}  // namespace driftbench
