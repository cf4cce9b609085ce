#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "driftbench/core.hpp"
#include "driftbench/rng.hpp"

using namespace driftbench;

TEST_CASE("rng: identical seeds replay bit-identically") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());
    Rng c(42), d(42);
    for (int i = 0; i < 100; ++i) CHECK(c.uniform() == d.uniform());
}

TEST_CASE("rng: different seeds diverge") {
    Rng a(1), b(2);
    bool differs = false;
    for (int i = 0; i < 10 && !differs; ++i) differs = a.normal() != b.normal();
    CHECK(differs);
}

TEST_CASE("rng: standard-normal mean over 1e6 draws is 0 +- 0.01") {
    Rng rng(7);
    double sum = 0.0, sumsq = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        double v = rng.normal();
        sum += v;
        sumsq += v * v;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("rng: uniform stays in [0, 1) and bernoulli respects p") {
    Rng rng(3);
    int hits = 0;
    for (int i = 0; i < 10000; ++i) {
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        hits += rng.bernoulli(0.25);
    }
    CHECK(hits > 2200);
    CHECK(hits < 2800);
}

TEST_CASE("rng: uniform_below covers the range") {
    Rng rng(11);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 5000; ++i) ++counts[rng.uniform_below(5)];
    for (int c : counts) CHECK(c > 800);
}

TEST_CASE("drift schedule validates its ordering") {
    DriftSchedule ok{10, 50, 60, 100};
    CHECK_NOTHROW(ok.validate());
    DriftSchedule sudden{10, 50, 51, 100};
    CHECK_NOTHROW(sudden.validate());
    CHECK_THROWS_AS((DriftSchedule{50, 10, 60, 100}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DriftSchedule{0, 10, 5, 100}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DriftSchedule{0, 10, 200, 100}.validate()), std::invalid_argument);
}

TEST_CASE("all_finite flags bad vectors") {
    CHECK(all_finite({0.0, -1.5, 3.0}));
    CHECK_FALSE(all_finite({0.0, std::nan("")}));
    CHECK_FALSE(all_finite({1.0 / 0.0}));
}
