#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "driftbench/hyperplane.hpp"
#include "driftbench/random_tree.hpp"

using namespace driftbench;

namespace {

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

HyperplaneConfig base_config(DriftKind kind, std::uint64_t seed = 9) {
    HyperplaneConfig c;
    c.d = 2;
    c.kind = kind;
    c.angle = 0.01;
    c.schedule = DriftSchedule{0, 50, 80, 200};
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("sample_concept: deterministic, standard-normal entries") {
    Rng a(5), b(5);
    auto t1 = sample_concept(2, a);
    auto t2 = sample_concept(2, b);
    CHECK(t1 == t2);
    CHECK(t1.size() == 2);

    Rng c(5);
    CHECK_THROWS_AS(sample_concept(0, c), std::invalid_argument);

    auto single = sample_concept(1, c);
    CHECK(std::isfinite(single[0]));

    // CLT: mean of 1e4 i.i.d. N(0,1) entries within +-0.05.
    Rng d(17);
    auto big = sample_concept(10000, d);
    double sum = 0.0;
    for (double v : big) sum += v;
    CHECK(std::abs(sum / 10000.0) < 0.05);
}

TEST_CASE("label: sign rule with ties to class 1") {
    CHECK(label({1, 0}, {{0.5, -3.0}}) == 1);
    CHECK(label({1, 0}, {{-0.5, 3.0}}) == 0);
    CHECK(label({1, 1}, {{1.0, -1.0}}) == 1);  // theta.x == 0
    CHECK_THROWS_AS(label({1, 0, 0}, {{1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("sudden drift switches concepts exactly at tau1") {
    auto cfg = base_config(DriftKind::Sudden);
    cfg.schedule = DriftSchedule{0, 50, 51, 120};
    HyperplaneStream s(cfg);
    const auto a = s.concept_a();
    const auto b = s.concept_b();
    for (std::size_t t = 0; t < 120; ++t) {
        auto li = s.next();
        REQUIRE(li.has_value());
        const auto truth = s.true_theta();
        if (t < 50)
            CHECK(truth == a);
        else
            CHECK(truth == b);
        CHECK(li->label == label(truth, li->instance));
    }
}

TEST_CASE("degenerate resample: theta_a == theta_b leaves the stream unchanged") {
    auto cfg = base_config(DriftKind::Sudden);
    cfg.theta_a = std::vector<double>{1.0, -0.5};
    cfg.theta_b = std::vector<double>{1.0, -0.5};
    HyperplaneStream sudden(cfg);
    auto none_cfg = cfg;
    none_cfg.kind = DriftKind::None;
    HyperplaneStream none(none_cfg);
    for (int t = 0; t < 200; ++t) {
        auto x = sudden.next();
        auto y = none.next();
        REQUIRE(x.has_value());
        REQUIRE(y.has_value());
        CHECK(x->instance.features == y->instance.features);
        CHECK(x->label == y->label);
    }
}

TEST_CASE("incremental drift: closed-form rotation composition") {
    // 100 steps of 0.01 rad applied to (1, 0) sweep 1 radian in total.
    auto cfg = base_config(DriftKind::Incremental);
    cfg.schedule = DriftSchedule{0, 0, 100, 150};
    cfg.theta_a = std::vector<double>{1.0, 0.0};
    HyperplaneStream s(cfg);
    for (int t = 0; t <= 100; ++t) s.next();
    auto theta = s.true_theta();  // instance 100 saw the fully drifted concept
    CHECK(theta[0] == doctest::Approx(std::cos(1.0)).epsilon(1e-9));
    CHECK(std::abs(theta[1]) == doctest::Approx(std::sin(1.0)).epsilon(1e-9));

    // Past tau2 the concept stays put.
    for (int t = 0; t < 30; ++t) s.next();
    CHECK(s.true_theta() == theta);
}

TEST_CASE("incremental drift: zero angle is a no-op") {
    auto cfg = base_config(DriftKind::Incremental);
    cfg.angle = 0.0;
    HyperplaneStream s(cfg);
    const auto start = s.concept_a();
    for (int t = 0; t < 150; ++t) s.next();
    CHECK(s.true_theta() == start);
}

TEST_CASE("rotation preserves the concept norm over 1e5 steps") {
    std::vector<double> theta{0.7, -1.3, 0.4};
    const double n0 = norm(theta);
    for (int i = 0; i < 100000; ++i) rotate_step(theta, 0.01);
    CHECK(std::abs(norm(theta) - n0) / n0 < 1e-6);

    std::vector<double> one{1.0};
    CHECK_THROWS_AS(rotate_step(one, 0.01), std::invalid_argument);
}

TEST_CASE("incremental drift rejects d < 2") {
    auto cfg = base_config(DriftKind::Incremental);
    cfg.d = 1;
    CHECK_THROWS_AS(HyperplaneStream{cfg}, std::invalid_argument);
}

TEST_CASE("gradual drift: pure concepts at the ramp ends") {
    auto cfg = base_config(DriftKind::Gradual, 21);
    cfg.schedule = DriftSchedule{0, 40, 90, 140};
    HyperplaneStream s(cfg);
    const auto a = s.concept_a();
    const auto b = s.concept_b();
    for (std::size_t t = 0; t < 140; ++t) {
        s.next();
        const auto truth = s.true_theta();
        if (t <= 40) CHECK(truth == a);   // alpha = 0 at tau1
        if (t >= 90) CHECK(truth == b);   // alpha = 1 from tau2 on
    }
}

TEST_CASE("gradual drift: midpoint selects each concept half the time") {
    // 2000 independent streams, inspected at the ramp midpoint.
    int picked_b = 0;
    const int n = 2000;
    for (int seed = 0; seed < n; ++seed) {
        HyperplaneConfig cfg;
        cfg.d = 2;
        cfg.kind = DriftKind::Gradual;
        cfg.schedule = DriftSchedule{0, 4, 12, 16};
        cfg.seed = static_cast<std::uint64_t>(seed);
        cfg.theta_a = std::vector<double>{1.0, 0.0};
        cfg.theta_b = std::vector<double>{0.0, 1.0};
        HyperplaneStream s(cfg);
        for (int t = 0; t <= 8; ++t) s.next();  // t = 8: alpha = 0.5
        picked_b += s.true_theta()[1] == 1.0;
    }
    const double freq = static_cast<double>(picked_b) / n;
    // 3 sigma for a fair coin over 2000 draws is ~0.034.
    CHECK(std::abs(freq - 0.5) < 0.04);
}

TEST_CASE("gradual drift: selection frequency follows the ramp") {
    HyperplaneConfig cfg;
    cfg.d = 2;
    cfg.kind = DriftKind::Gradual;
    cfg.schedule = DriftSchedule{0, 1000, 9000, 10000};
    cfg.seed = 33;
    cfg.theta_a = std::vector<double>{1.0, 0.0};
    cfg.theta_b = std::vector<double>{0.0, 1.0};
    HyperplaneStream s(cfg);
    std::vector<int> picked_b(10000, 0);
    for (std::size_t t = 0; t < 10000; ++t) {
        s.next();
        picked_b[t] = s.true_theta()[1] == 1.0;
    }
    // 400-instance buckets: the empirical frequency stays within 3 sigma of
    // the ramp value at the bucket center (plus the ramp's in-bucket spread).
    for (std::size_t base = 1000; base + 400 <= 9000; base += 400) {
        int count = 0;
        for (std::size_t i = base; i < base + 400; ++i) count += picked_b[i];
        const double alpha = (static_cast<double>(base) + 200.0 - 1000.0) / 8000.0;
        const double bound = 3.0 * std::sqrt(alpha * (1.0 - alpha) / 400.0 + 1e-9) + 0.03;
        CHECK(std::abs(count / 400.0 - alpha) < bound);
    }
}

TEST_CASE("gradual drift with tau2 == tau1 degenerates to sudden") {
    auto cfg = base_config(DriftKind::Gradual);
    cfg.schedule = DriftSchedule{0, 50, 50, 100};
    HyperplaneStream s(cfg);
    const auto a = s.concept_a();
    const auto b = s.concept_b();
    for (std::size_t t = 0; t < 100; ++t) {
        s.next();
        CHECK(s.true_theta() == (t < 50 ? a : b));
    }
}

TEST_CASE("next_instance: stationary labels match the fixed concept") {
    auto cfg = base_config(DriftKind::None, 2);
    HyperplaneStream s(cfg);
    const auto a = s.concept_a();
    while (auto li = s.next()) CHECK(li->label == label(a, li->instance));
}

TEST_CASE("next_instance: emits exactly T instances, then end-of-stream") {
    auto cfg = base_config(DriftKind::None);
    cfg.schedule = DriftSchedule{1000, 5000, 6000, 10000};
    HyperplaneStream s(cfg);
    std::size_t count = 0;
    while (s.next()) ++count;
    CHECK(count == 10000);
    CHECK_FALSE(s.next().has_value());
}

TEST_CASE("next_instance: classes are balanced under a random concept") {
    auto cfg = base_config(DriftKind::None, 101);
    cfg.schedule = DriftSchedule{0, 10000, 10000, 10000};
    HyperplaneStream s(cfg);
    int ones = 0;
    while (auto li = s.next()) ones += li->label;
    CHECK(std::abs(ones / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("sudden stream is pointwise identical to a stationary one before tau1") {
    auto sudden_cfg = base_config(DriftKind::Sudden, 55);
    auto none_cfg = base_config(DriftKind::None, 55);
    HyperplaneStream sudden(sudden_cfg), none(none_cfg);
    for (std::size_t t = 0; t < sudden_cfg.schedule.tau1; ++t) {
        auto x = sudden.next();
        auto y = none.next();
        CHECK(x->instance.features == y->instance.features);
        CHECK(x->label == y->label);
    }
}

TEST_CASE("constant incremental: theta at step t is theta_0 rotated t times") {
    auto cfg = base_config(DriftKind::ConstantIncremental, 8);
    cfg.schedule = DriftSchedule{0, 0, 200, 200};
    HyperplaneStream s(cfg);
    std::vector<double> expected = s.concept_a();
    for (int t = 0; t < 200; ++t) {
        s.next();
        auto truth = s.true_theta();
        CHECK(truth[0] == doctest::Approx(expected[0]).epsilon(1e-9));
        CHECK(truth[1] == doctest::Approx(expected[1]).epsilon(1e-9));
        rotate_step(expected, cfg.angle);
    }
}

TEST_CASE("rtg: routing semantics and determinism") {
    RandomTreeConfig cfg;
    cfg.d = 3;
    cfg.classes = 2;
    cfg.depth = 1;
    cfg.total = 50;
    cfg.seed = 4;
    RandomTreeStream s(cfg);
    const auto& nodes = s.nodes();
    REQUIRE(nodes.size() == 3);
    const auto& root = nodes[0];
    CHECK(root.attr >= 0);

    // A point below the threshold routes left, above routes right.
    Instance lo{{0.0, 0.0, 0.0}};
    Instance hi{{1.0, 1.0, 1.0}};
    lo.features[static_cast<std::size_t>(root.attr)] = root.threshold - 1e-6;
    hi.features[static_cast<std::size_t>(root.attr)] = root.threshold + 1e-6;
    CHECK(s.route(lo) == nodes[static_cast<std::size_t>(root.left)].cls);
    CHECK(s.route(hi) == nodes[static_cast<std::size_t>(root.right)].cls);

    RandomTreeStream s1(cfg), s2(cfg);
    while (auto a = s1.next()) {
        auto b = s2.next();
        CHECK(a->instance.features == b->instance.features);
        CHECK(a->label == b->label);
    }
}

TEST_CASE("rtg: label distribution matches analytic leaf-region volumes") {
    RandomTreeConfig cfg;
    cfg.d = 4;
    cfg.classes = 3;
    cfg.depth = 5;
    cfg.total = 10000;
    cfg.seed = 12;
    RandomTreeStream s(cfg);

    // Oracle: each leaf region is an axis-aligned box; accumulate exact
    // volumes per class by walking the tree structure.
    std::vector<double> volume(static_cast<std::size_t>(cfg.classes), 0.0);
    struct Frame {
        int idx;
        std::vector<std::pair<double, double>> box;
    };
    std::vector<Frame> stack{{0, std::vector<std::pair<double, double>>(cfg.d, {0.0, 1.0})}};
    const auto& nodes = s.nodes();
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const auto& n = nodes[static_cast<std::size_t>(f.idx)];
        if (n.attr < 0) {
            double v = 1.0;
            for (auto [lo, hi] : f.box) v *= hi - lo;
            volume[static_cast<std::size_t>(n.cls)] += v;
            continue;
        }
        Frame left{n.left, f.box};
        left.box[static_cast<std::size_t>(n.attr)].second = n.threshold;
        Frame right{n.right, std::move(f.box)};
        right.box[static_cast<std::size_t>(n.attr)].first = n.threshold;
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
    }
    double total_volume = 0.0;
    for (double v : volume) total_volume += v;
    CHECK(total_volume == doctest::Approx(1.0).epsilon(1e-9));

    std::vector<int> counts(static_cast<std::size_t>(cfg.classes), 0);
    while (auto li = s.next()) ++counts[static_cast<std::size_t>(li->label)];
    for (int c = 0; c < cfg.classes; ++c)
        CHECK(std::abs(counts[static_cast<std::size_t>(c)] / 10000.0 -
                       volume[static_cast<std::size_t>(c)]) < 0.02);
}

TEST_CASE("true_theta is unsupported on rtg streams") {
    RandomTreeConfig cfg;
    cfg.total = 10;
    RandomTreeStream s(cfg);
    CHECK_FALSE(s.has_true_concept());
    CHECK_THROWS_AS(s.true_theta(), std::logic_error);
}
