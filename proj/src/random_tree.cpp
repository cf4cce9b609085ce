#include "driftbench/random_tree.hpp"

#include <stdexcept>

namespace driftbench {

RandomTreeStream::RandomTreeStream(const RandomTreeConfig& cfg)
    : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.d == 0) throw std::invalid_argument("RandomTreeStream: d must be >= 1");
    if (cfg_.classes < 2) throw std::invalid_argument("RandomTreeStream: classes must be >= 2");
    if (cfg_.depth < 1) throw std::invalid_argument("RandomTreeStream: depth must be >= 1");
    std::vector<std::pair<double, double>> ranges(cfg_.d, {0.0, 1.0});
    build(cfg_.depth, ranges);
}

int RandomTreeStream::build(int depth_left, std::vector<std::pair<double, double>>& ranges) {
    int idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (depth_left == 0) {
        nodes_[idx].cls = static_cast<int>(rng_.uniform_below(static_cast<std::size_t>(cfg_.classes)));
        return idx;
    }
    int attr = static_cast<int>(rng_.uniform_below(cfg_.d));
    auto [lo, hi] = ranges[attr];
    double thr = rng_.uniform(lo, hi);
    nodes_[idx].attr = attr;
    nodes_[idx].threshold = thr;

    ranges[attr] = {lo, thr};
    int left = build(depth_left - 1, ranges);
    ranges[attr] = {thr, hi};
    int right = build(depth_left - 1, ranges);
    ranges[attr] = {lo, hi};

    nodes_[idx].left = left;
    nodes_[idx].right = right;
    return idx;
}

int RandomTreeStream::route(const Instance& x) const {
    if (x.features.size() != cfg_.d)
        throw std::invalid_argument("RandomTreeStream::route: dimension mismatch");
    int idx = 0;
    while (nodes_[idx].attr >= 0) {
        const Node& n = nodes_[idx];
        idx = x.features[static_cast<std::size_t>(n.attr)] <= n.threshold ? n.left : n.right;
    }
    return nodes_[idx].cls;
}

std::optional<LabeledInstance> RandomTreeStream::next() {
    if (t_ >= cfg_.total) return std::nullopt;
    LabeledInstance li;
    li.instance.features.resize(cfg_.d);
    for (double& v : li.instance.features) v = rng_.uniform();
    li.label = route(li.instance);
    ++t_;
    return li;
}

}  // namespace driftbench
