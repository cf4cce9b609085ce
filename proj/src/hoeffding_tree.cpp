#include "driftbench/hoeffding_tree.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace driftbench {

namespace {
constexpr double kVarFloor = 1e-6;
constexpr double kLog2 = 0.6931471805599453;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
}  // namespace

double hoeffding_bound(double range, double delta, double n) {
    return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * n));
}

HoeffdingTree::HoeffdingTree(std::size_t d, int classes, const HoeffdingTreeConfig& cfg)
    : d_(d), classes_(classes), cfg_(cfg) {
    if (d == 0) throw std::invalid_argument("HoeffdingTree: d must be >= 1");
    if (classes < 2) throw std::invalid_argument("HoeffdingTree: classes must be >= 2");
    if (cfg.grace_period == 0) throw std::invalid_argument("HoeffdingTree: grace_period must be >= 1");
    if (!(cfg.split_confidence > 0.0 && cfg.split_confidence < 1.0))
        throw std::invalid_argument("HoeffdingTree: split_confidence must be in (0, 1)");
    nodes_.emplace_back();
    nodes_[0].leaf = make_leaf_node();
}

int HoeffdingTree::make_leaf_node() {
    LeafData leaf;
    leaf.class_counts.assign(static_cast<std::size_t>(classes_), 0.0);
    leaf.stats.assign(d_, std::vector<GaussStat>(static_cast<std::size_t>(classes_)));
    leaf.att_min.assign(d_, std::numeric_limits<double>::infinity());
    leaf.att_max.assign(d_, -std::numeric_limits<double>::infinity());
    leaves_.push_back(std::move(leaf));
    return static_cast<int>(leaves_.size()) - 1;
}

int HoeffdingTree::route_leaf(const Instance& x) const {
    if (x.features.size() != d_)
        throw std::invalid_argument("HoeffdingTree: feature length mismatch");
    int idx = 0;
    while (nodes_[static_cast<std::size_t>(idx)].attr >= 0) {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        idx = x.features[static_cast<std::size_t>(n.attr)] <= n.threshold ? n.left : n.right;
    }
    return idx;
}

void HoeffdingTree::update(const LabeledInstance& li) {
    if (!all_finite(li.instance.features))
        throw std::invalid_argument("HoeffdingTree::update: non-finite features");
    if (li.label < 0 || li.label >= classes_)
        throw std::invalid_argument("HoeffdingTree::update: label out of range");

    const int node_idx = route_leaf(li.instance);
    LeafData& leaf = leaves_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(node_idx)].leaf)];
    const auto cls = static_cast<std::size_t>(li.label);
    leaf.class_counts[cls] += 1.0;
    leaf.total += 1.0;
    for (std::size_t a = 0; a < d_; ++a) {
        const double v = li.instance.features[a];
        leaf.stats[a][cls].add(v);
        if (v < leaf.att_min[a]) leaf.att_min[a] = v;
        if (v > leaf.att_max[a]) leaf.att_max[a] = v;
    }
    if (++leaf.since_check >= cfg_.grace_period) {
        leaf.since_check = 0;
        try_split(node_idx);
    }
}

double HoeffdingTree::entropy_bits(const std::vector<double>& counts, double total) {
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (double c : counts) {
        if (c <= 0.0) continue;
        const double p = c / total;
        h -= p * std::log(p) / kLog2;
    }
    return h;
}

// Information gain of splitting at `thr` on `attr`, with the per-class
// mass left of the threshold estimated from the Gaussian summaries.
double HoeffdingTree::split_gain(const LeafData& leaf, std::size_t attr, double thr) const {
    std::vector<double> left(static_cast<std::size_t>(classes_), 0.0);
    std::vector<double> right(static_cast<std::size_t>(classes_), 0.0);
    double nl = 0.0, nr = 0.0;
    for (std::size_t c = 0; c < static_cast<std::size_t>(classes_); ++c) {
        const double count = leaf.class_counts[c];
        if (count <= 0.0) continue;
        const GaussStat& g = leaf.stats[attr][c];
        double frac;
        const double var = g.variance();
        if (var < kVarFloor)
            frac = g.mean <= thr ? 1.0 : 0.0;
        else
            frac = normal_cdf((thr - g.mean) / std::sqrt(var));
        left[c] = count * frac;
        right[c] = count - left[c];
        nl += left[c];
        nr += right[c];
    }
    const double n = nl + nr;
    if (n <= 0.0) return 0.0;
    const double h = entropy_bits(leaf.class_counts, leaf.total);
    return h - (nl / n) * entropy_bits(left, nl) - (nr / n) * entropy_bits(right, nr);
}

void HoeffdingTree::try_split(int node_idx) {
    const LeafData& leaf =
        leaves_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(node_idx)].leaf)];
    if (leaf.total <= 0.0) return;

    // Pure leaves carry no gain.
    int present = 0;
    for (double c : leaf.class_counts)
        if (c > 0.0) ++present;
    if (present < 2) return;

    double best_gain = 0.0, second_gain = 0.0;
    std::size_t best_attr = 0;
    double best_thr = 0.0;
    for (std::size_t a = 0; a < d_; ++a) {
        const double lo = leaf.att_min[a], hi = leaf.att_max[a];
        if (!(hi > lo)) continue;
        double attr_gain = 0.0, attr_thr = 0.0;
        for (int i = 1; i <= cfg_.split_candidates; ++i) {
            const double thr = lo + (hi - lo) * i / (cfg_.split_candidates + 1);
            const double g = split_gain(leaf, a, thr);
            if (g > attr_gain) {
                attr_gain = g;
                attr_thr = thr;
            }
        }
        if (attr_gain > best_gain) {
            second_gain = best_gain;
            best_gain = attr_gain;
            best_attr = a;
            best_thr = attr_thr;
        } else if (attr_gain > second_gain) {
            second_gain = attr_gain;
        }
    }

    const double range = std::log2(static_cast<double>(classes_));
    const double eps = hoeffding_bound(range, cfg_.split_confidence, leaf.total);
    if (!should_split(best_gain, second_gain, eps, cfg_.tie_threshold)) return;

    // Children are created before the node reference is taken: growing
    // nodes_ invalidates references into it.
    const int left_idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_.back().leaf = make_leaf_node();
    const int right_idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_.back().leaf = make_leaf_node();

    Node& node = nodes_[static_cast<std::size_t>(node_idx)];
    node.attr = static_cast<int>(best_attr);
    node.threshold = best_thr;
    node.leaf = -1;
    node.left = left_idx;
    node.right = right_idx;
    ++leaf_count_;
}

int HoeffdingTree::majority(const LeafData& leaf) const {
    int best = 0;
    for (int c = 1; c < classes_; ++c)
        if (leaf.class_counts[static_cast<std::size_t>(c)] >
            leaf.class_counts[static_cast<std::size_t>(best)])
            best = c;
    return best;
}

int HoeffdingTree::naive_bayes(const LeafData& leaf, const Instance& x) const {
    double best_score = -std::numeric_limits<double>::infinity();
    int best = 0;
    for (int c = 0; c < classes_; ++c) {
        const double count = leaf.class_counts[static_cast<std::size_t>(c)];
        if (count <= 0.0) continue;
        double score = std::log(count / leaf.total);
        for (std::size_t a = 0; a < d_; ++a) {
            const GaussStat& g = leaf.stats[a][static_cast<std::size_t>(c)];
            const double var = std::max(g.variance(), kVarFloor);
            const double diff = x.features[a] - g.mean;
            score += -0.5 * std::log(2.0 * M_PI * var) - diff * diff / (2.0 * var);
        }
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    return best;
}

int HoeffdingTree::predict(const Instance& x) const {
    const int node_idx = route_leaf(x);
    const LeafData& leaf =
        leaves_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(node_idx)].leaf)];
    if (leaf.total < static_cast<double>(cfg_.nb_threshold)) return majority(leaf);
    return naive_bayes(leaf, x);
}

std::size_t HoeffdingTree::depth() const {
    std::size_t max_depth = 0;
    // Iterative DFS over the index-linked tree.
    std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.attr < 0) {
            if (depth > max_depth) max_depth = depth;
        } else {
            stack.push_back({n.left, depth + 1});
            stack.push_back({n.right, depth + 1});
        }
    }
    return max_depth;
}

}  // namespace driftbench
