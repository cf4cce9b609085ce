#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "driftbench/hoeffding_tree.hpp"
#include "driftbench/reset_wrapper.hpp"
#include "driftbench/rng.hpp"

using namespace driftbench;

namespace {

LabeledInstance li(std::vector<double> x, int y) { return {{std::move(x)}, y}; }

HoeffdingTreeConfig vanilla() { return HoeffdingTreeConfig{}; }

}  // namespace

TEST_CASE("hoeffding bound: direct formula evaluation") {
    // delta=1e-7, R=1, n=1000 -> sqrt(ln(1e7)/2000) ~= 0.0898
    CHECK(hoeffding_bound(1.0, 1e-7, 1000.0) == doctest::Approx(0.0898).epsilon(1e-3));
    // Bound shrinks to 0 as n grows.
    CHECK(hoeffding_bound(1.0, 1e-7, 1e9) < 1e-3);
}

TEST_CASE("split decision rule") {
    CHECK(should_split(0.5, 0.1, 0.2, 0.05));        // gap beats epsilon
    CHECK_FALSE(should_split(0.5, 0.45, 0.2, 0.05)); // gap too small, eps >= tie
    CHECK(should_split(0.5, 0.49, 0.04, 0.05));      // tie threshold fires
    CHECK_FALSE(should_split(0.0, 0.0, 0.04, 0.05)); // no gain, no split
}

TEST_CASE("single-class data never splits") {
    HoeffdingTree t(2, 2, vanilla());
    Rng rng(1);
    for (int n = 0; n < 2000; ++n) t.update(li({rng.normal(), rng.normal()}, 1));
    CHECK(t.leaf_count() == 1);
    CHECK(t.predict({{0.0, 0.0}}) == 1);
}

TEST_CASE("empty tree predicts class 0") {
    HoeffdingTree t(2, 2, vanilla());
    CHECK(t.predict({{1.0, 1.0}}) == 0);
    Instance x{{0.5, -0.5}};
    CHECK(t.predict(x) == t.predict(x));
}

TEST_CASE("axis-aligned separable data forces a split") {
    HoeffdingTree t(2, 2, vanilla());
    Rng rng(2);
    for (int n = 0; n < 10000; ++n) {
        std::vector<double> x{rng.normal(), rng.normal()};
        const int y = x[0] > 0.0 ? 1 : 0;
        t.update(li(std::move(x), y));
    }
    CHECK(t.leaf_count() >= 2);
    // The learned boundary should route these confidently.
    CHECK(t.predict({{2.0, 0.0}}) == 1);
    CHECK(t.predict({{-2.0, 0.0}}) == 0);
}

TEST_CASE("leaf count is bounded by 1 + n/n_min and never decreases") {
    HoeffdingTree t(3, 2, vanilla());
    Rng rng(3);
    std::size_t last = t.leaf_count();
    for (int n = 1; n <= 20000; ++n) {
        std::vector<double> x{rng.normal(), rng.normal(), rng.normal()};
        const int y = (x[0] + 0.3 * x[1] > 0.0) ? 1 : 0;
        t.update(li(std::move(x), y));
        CHECK(t.leaf_count() >= last);
        last = t.leaf_count();
        CHECK(t.leaf_count() <= 1 + static_cast<std::size_t>(n) / t.config().grace_period);
    }
}

TEST_CASE("naive Bayes leaf: priors dominate uninformative attributes") {
    HoeffdingTreeConfig cfg;
    cfg.grace_period = 1000;  // keep everything in the root leaf
    HoeffdingTree t(1, 2, cfg);
    Rng rng(4);
    // 90/10 class mix, same attribute distribution for both classes.
    for (int n = 0; n < 100; ++n) t.update(li({rng.normal()}, n % 10 == 0 ? 1 : 0));
    CHECK(t.predict({{0.0}}) == 0);
}

TEST_CASE("naive Bayes leaf: Gaussian likelihood separates shifted classes") {
    HoeffdingTreeConfig cfg;
    cfg.grace_period = 1000;
    HoeffdingTree t(1, 2, cfg);
    Rng rng(5);
    for (int n = 0; n < 160; ++n) {
        const int y = n % 2;
        t.update(li({(y == 0 ? 0.0 : 5.0) + rng.normal()}, y));
    }
    CHECK(t.leaf_count() == 1);
    CHECK(t.predict({{4.9}}) == 1);
    CHECK(t.predict({{0.2}}) == 0);
}

TEST_CASE("majority fallback below the naive Bayes threshold") {
    HoeffdingTree t(1, 2, vanilla());
    // 5 instances (< 10): majority class wins even if means differ.
    for (int n = 0; n < 4; ++n) t.update(li({static_cast<double>(n)}, 0));
    t.update(li({10.0}, 1));
    CHECK(t.predict({{10.0}}) == 0);
}

TEST_CASE("update rejects bad input without touching the tree") {
    HoeffdingTree t(2, 2, vanilla());
    t.update(li({1.0, 2.0}, 1));
    CHECK_THROWS_AS(t.update(li({std::nan(""), 0.0}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(t.update(li({0.0, 0.0}, 7)), std::invalid_argument);
    CHECK(t.leaf_count() == 1);
}

TEST_CASE("depth grows with splits") {
    HoeffdingTree t(2, 2, vanilla());
    CHECK(t.depth() == 0);
    Rng rng(6);
    for (int n = 0; n < 12000; ++n) {
        std::vector<double> x{rng.normal(), rng.normal()};
        const int y = x[0] > 0.0 ? (x[1] > 0.0 ? 1 : 0) : 0;
        t.update(li(std::move(x), y));
    }
    CHECK(t.depth() >= 1);
    CHECK(t.leaf_count() >= t.depth() + 1);  // binary tree shape invariant
}

namespace {

// Perfectly predictable learner for exercising the reset detector: it
// predicts a stored class so the test controls the error signal.
class Puppet final : public Learner {
public:
    int predict(const Instance&) const override { return answer; }
    void update(const LabeledInstance&) override {}
    double model_size() const override { return 1.0; }
    std::string id() const override { return "puppet"; }
    static int answer;
};
int Puppet::answer = 0;

}  // namespace

TEST_CASE("detect-and-reset: no errors, no resets") {
    DetectAndReset wrap([] { return std::make_unique<Puppet>(); }, ResetConfig{20, 0.15});
    Puppet::answer = 1;
    for (int n = 0; n < 500; ++n) wrap.update(li({0.0}, 1));
    CHECK(wrap.resets() == 0);
    CHECK(wrap.id() == "reset(puppet)");
}

TEST_CASE("detect-and-reset: a sustained error step triggers within one window") {
    DetectAndReset wrap([] { return std::make_unique<Puppet>(); }, ResetConfig{50, 0.15});
    Puppet::answer = 1;
    // Warm-up at a 10% error rate fixes the reference.
    for (int n = 0; n < 100; ++n) wrap.update(li({0.0}, n % 10 == 0 ? 0 : 1));
    CHECK(wrap.resets() == 0);
    // Error rate steps to 90%; the windowed rate crosses 0.25 within 50 steps.
    int steps = 0;
    while (wrap.resets() == 0 && steps < 50) {
        wrap.update(li({0.0}, steps % 10 == 0 ? 1 : 0));
        ++steps;
    }
    CHECK(wrap.resets() == 1);
    CHECK(steps <= 50);
}

TEST_CASE("detect-and-reset: infinite sensitivity never resets") {
    DetectAndReset wrap([] { return std::make_unique<Puppet>(); },
                        ResetConfig{10, std::numeric_limits<double>::infinity()});
    Puppet::answer = 0;
    for (int n = 0; n < 1000; ++n) wrap.update(li({0.0}, 1));  // always wrong
    CHECK(wrap.resets() == 0);
}

TEST_CASE("detect-and-reset: resetting swaps in a fresh inner learner") {
    int built = 0;
    DetectAndReset wrap(
        [&built] {
            ++built;
            return std::make_unique<Puppet>();
        },
        ResetConfig{10, 0.1});
    Puppet::answer = 1;
    for (int n = 0; n < 20; ++n) wrap.update(li({0.0}, 1));   // reference ~ 0
    for (int n = 0; n < 20; ++n) wrap.update(li({0.0}, 0));   // all wrong
    CHECK(wrap.resets() >= 1);
    CHECK(built == 1 + static_cast<int>(wrap.resets()));
}
