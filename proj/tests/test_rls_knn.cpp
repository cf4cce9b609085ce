#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "driftbench/knn.hpp"
#include "driftbench/rls.hpp"
#include "driftbench/rng.hpp"

using namespace driftbench;

namespace {

// Batch least-squares oracle: solve (X^T X) theta = X^T y by Gaussian
// elimination with partial pivoting. Independent of the RLS recursion.
std::vector<double> normal_equations(const std::vector<std::vector<double>>& X,
                                     const std::vector<double>& y) {
    const std::size_t d = X.front().size();
    std::vector<std::vector<double>> A(d, std::vector<double>(d + 1, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t n = 0; n < X.size(); ++n) A[i][j] += X[n][i] * X[n][j];
        for (std::size_t n = 0; n < X.size(); ++n) A[i][d] += X[n][i] * y[n];
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
        std::swap(A[col], A[pivot]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c <= d; ++c) A[r][c] -= f * A[col][c];
        }
    }
    std::vector<double> theta(d);
    for (std::size_t i = 0; i < d; ++i) theta[i] = A[i][d] / A[i][i];
    return theta;
}

LabeledInstance li(std::vector<double> x, int y) { return {{std::move(x)}, y}; }

}  // namespace

TEST_CASE("rls: hand evaluation of the d=1 recursion") {
    // delta=1, x=1, y=1, theta=0  ->  Rinv = 0.5, theta = 0.5
    RlsRegressor r(1, 1.0);
    r.update({1.0}, 1.0);
    CHECK(r.rinv()[0] == doctest::Approx(0.5));
    CHECK(r.weights()[0] == doctest::Approx(0.5));
}

TEST_CASE("rls: zero input is a zero-gain update") {
    RlsRegressor r(2, 10.0);
    r.update({1.0, 0.5}, 2.0);
    const auto w = r.weights();
    const auto rinv = r.rinv();
    r.update({0.0, 0.0}, 123.0);
    CHECK(r.weights() == w);
    CHECK(r.rinv() == rinv);
}

TEST_CASE("rls: matches the batch normal-equations solution on stationary data") {
    for (std::size_t d : {2ul, 5ul, 10ul}) {
        Rng rng(40 + d);
        std::vector<double> theta_star(d);
        for (double& v : theta_star) v = rng.normal();

        RlsRegressor r(d, 1e6);
        std::vector<std::vector<double>> X;
        std::vector<double> y;
        for (int n = 0; n < 200; ++n) {
            std::vector<double> x(d);
            for (double& v : x) v = rng.normal();
            double target = 0.0;
            for (std::size_t i = 0; i < d; ++i) target += theta_star[i] * x[i];
            r.update(x, target);
            X.push_back(std::move(x));
            y.push_back(target);
        }
        const auto batch = normal_equations(X, y);
        for (std::size_t i = 0; i < d; ++i)
            CHECK(std::abs(r.weights()[i] - batch[i]) < 1e-4);
    }
}

TEST_CASE("rls: Rinv stays symmetric through many updates") {
    Rng rng(91);
    RlsRegressor r(6, 1e6);
    for (int n = 0; n < 500; ++n) {
        std::vector<double> x(6);
        for (double& v : x) v = rng.normal();
        r.update(x, rng.normal());
        const auto& m = r.rinv();
        double asym = 0.0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                asym = std::max(asym, std::abs(m[i * 6 + j] - m[j * 6 + i]));
        CHECK(asym < 1e-8);
    }
}

TEST_CASE("rls: forgetting factor 1 is plain RLS") {
    RlsRegressor plain(3, 100.0);
    RlsRegressor forgetting(3, 100.0, 1.0);
    Rng rng(5);
    for (int n = 0; n < 50; ++n) {
        std::vector<double> x{rng.normal(), rng.normal(), rng.normal()};
        const double y = rng.normal();
        plain.update(x, y);
        forgetting.update(x, y);
    }
    CHECK(plain.weights() == forgetting.weights());
}

TEST_CASE("rls: forgetting tracks a moving target faster") {
    Rng rng(6);
    RlsRegressor slow(1, 1e3, 1.0);
    RlsRegressor fast(1, 1e3, 0.9);
    // Target jumps from 2x to -2x halfway.
    for (int n = 0; n < 400; ++n) {
        const double x = rng.normal();
        const double y = (n < 200 ? 2.0 : -2.0) * x;
        slow.update({x}, y);
        fast.update({x}, y);
    }
    CHECK(std::abs(fast.weights()[0] - (-2.0)) < std::abs(slow.weights()[0] - (-2.0)));
}

TEST_CASE("rls: rejects non-finite input") {
    RlsRegressor r(2);
    CHECK_THROWS_AS(r.update({std::nan(""), 0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(r.update({0.0, 0.0}, INFINITY), std::invalid_argument);
}

TEST_CASE("rls classifier: learns a separable binary stream") {
    Rng rng(8);
    RlsClassifier m(2, 2, RlsConfig{});
    CHECK(m.predict({{0.4, 0.2}}) == 1);  // zero weights tie to class 1
    for (int n = 0; n < 300; ++n) {
        std::vector<double> x{rng.normal(), rng.normal()};
        const int y = x[0] + 2.0 * x[1] >= 0.0 ? 1 : 0;
        m.update(li(x, y));
    }
    int correct = 0;
    for (int n = 0; n < 500; ++n) {
        std::vector<double> x{rng.normal(), rng.normal()};
        const int y = x[0] + 2.0 * x[1] >= 0.0 ? 1 : 0;
        correct += m.predict({{x}}) == y;
    }
    CHECK(correct > 480);
    CHECK(m.id() == "rls");
    CHECK(m.model_size() == 2.0);
}

TEST_CASE("knn: nearest neighbor, majority, and tie rules") {
    KnnClassifier m(2, 2, KnnConfig{1, 10});
    m.update(li({0.0, 0.0}, 0));
    m.update(li({1.0, 1.0}, 1));
    CHECK(m.predict({{0.1, 0.0}}) == 0);

    KnnClassifier m3(1, 2, KnnConfig{3, 10});
    m3.update(li({0.0}, 1));
    m3.update(li({0.1}, 1));
    m3.update(li({0.2}, 0));
    CHECK(m3.predict({{0.05}}) == 1);  // votes {1,1,0}

    KnnClassifier tie(1, 3, KnnConfig{2, 10});
    tie.update(li({0.0}, 2));
    tie.update(li({0.1}, 1));
    CHECK(tie.predict({{0.05}}) == 1);  // 1-1 vote, smallest class index wins
}

TEST_CASE("knn: empty buffer predicts class 0") {
    KnnClassifier m(3, 4, KnnConfig{5, 10});
    CHECK(m.predict({{1.0, 2.0, 3.0}}) == 0);
}

TEST_CASE("knn: strict FIFO eviction") {
    KnnClassifier m(1, 2, KnnConfig{1, 2});
    m.update(li({1.0}, 0));  // a
    m.update(li({2.0}, 0));  // b
    m.update(li({3.0}, 1));  // c evicts a
    REQUIRE(m.buffer_size() == 2);
    CHECK(m.buffer()[0].instance.features[0] == 2.0);
    CHECK(m.buffer()[1].instance.features[0] == 3.0);
}

TEST_CASE("knn: buffer never exceeds w") {
    KnnClassifier m(1, 2, KnnConfig{10, 100});
    Rng rng(3);
    for (int n = 0; n < 100; ++n) m.update(li({rng.normal()}, n % 2));
    CHECK(m.buffer_size() == 100);
    for (int n = 0; n < 100000; ++n) {
        m.update(li({rng.normal()}, n % 2));
        if (n % 10000 == 0) CHECK(m.buffer_size() == 100);
    }
    CHECK(m.buffer_size() == 100);
    CHECK(m.model_size() == 100.0);
}

TEST_CASE("knn: predict is repeatable without updates") {
    KnnClassifier m(1, 2, KnnConfig{3, 8});
    Rng rng(19);
    for (int n = 0; n < 8; ++n) m.update(li({rng.normal()}, n % 2));
    Instance x{{0.123}};
    CHECK(m.predict(x) == m.predict(x));
}
