#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "pairrank/errors.hpp"
#include "pairrank/llsm.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace pairrank;

namespace {

IncompletePairwiseMatrix consistent_3x3() {
    IncompletePairwiseMatrix m(testgen::team_codes(3));
    m.set_pair(0, 1, 2.0);
    m.set_pair(0, 2, 4.0);
    m.set_pair(1, 2, 2.0);
    return m;
}

double weight_sum(const WeightVector& w) {
    return std::accumulate(w.weights.begin(), w.weights.end(), 0.0);
}

} // namespace

TEST_CASE("consistent complete matrix recovers the exact ratios") {
    const auto w = solve_llsm(consistent_3x3());
    CHECK(w.weights[0] == doctest::Approx(4.0 / 7.0).epsilon(1e-13));
    CHECK(w.weights[1] == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
    CHECK(w.weights[2] == doctest::Approx(1.0 / 7.0).epsilon(1e-13));
    CHECK(w.objective_value <= 1e-20);
    CHECK(w.residual_norm < 1e-10);
    CHECK(std::fabs(weight_sum(w) - 1.0) <= 1e-12);
}

TEST_CASE("tree-structured incomplete matrix is exactly satisfiable") {
    IncompletePairwiseMatrix m(testgen::team_codes(3));
    m.set_pair(0, 1, 2.0); // w0/w1 = 2
    m.set_pair(1, 2, 3.0); // w1/w2 = 3
    const auto w = solve_llsm(m);
    CHECK(w.weights[0] == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(w.weights[1] == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(w.weights[2] == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(w.objective_value <= 1e-20);
    CHECK(objective_value(m, w.weights) <= 1e-20);
}

TEST_CASE("cyclic triangle weights match the geometric row means") {
    IncompletePairwiseMatrix m(testgen::team_codes(3));
    m.set_pair(0, 1, 4.0);
    m.set_pair(1, 2, 3.0);
    m.set_pair(2, 0, 2.0);

    // row geometric means: (2, 3/4, 2/3)^(1/3), normalized
    const double g0 = std::cbrt(2.0), g1 = std::cbrt(0.75), g2 = std::cbrt(2.0 / 3.0);
    const double sum = g0 + g1 + g2;

    const auto w = solve_llsm(m);
    CHECK(w.weights[0] == doctest::Approx(g0 / sum).epsilon(1e-12));
    CHECK(w.weights[1] == doctest::Approx(g1 / sum).epsilon(1e-12));
    CHECK(w.weights[2] == doctest::Approx(g2 / sum).epsilon(1e-12));
    CHECK(w.weights[0] == doctest::Approx(0.4142).epsilon(1e-4));
    CHECK(w.weights[1] == doctest::Approx(0.2987).epsilon(1e-4));
    CHECK(w.weights[2] == doctest::Approx(0.2872).epsilon(1e-4));

    const auto gm = geometric_mean_weights(m);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(w.weights[i] == doctest::Approx(gm.weights[i]).epsilon(1e-12));
}

TEST_CASE("geometric mean weights") {
    const auto gm = geometric_mean_weights(consistent_3x3());
    CHECK(gm.weights[0] == doctest::Approx(4.0 / 7.0).epsilon(1e-13));
    CHECK(gm.weights[1] == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
    CHECK(gm.weights[2] == doctest::Approx(1.0 / 7.0).epsilon(1e-13));

    IncompletePairwiseMatrix ones(testgen::team_codes(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) ones.set_pair(i, j, 1.0);
    for (double w : geometric_mean_weights(ones).weights)
        CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    IncompletePairwiseMatrix incomplete(testgen::team_codes(3));
    incomplete.set_pair(0, 1, 2.0);
    CHECK_THROWS_AS(geometric_mean_weights(incomplete), ValidationError);
}

TEST_CASE("objective value is minimal at the solution") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = testgen::random_connected_matrix(rng, 3 + rng() % 6, 0.5);
        const auto w = solve_llsm(m);
        CHECK(objective_value(m, w.weights) ==
              doctest::Approx(w.objective_value).epsilon(1e-10));

        auto perturbed = w.weights;
        perturbed[0] *= 1.07;
        CHECK(objective_value(m, perturbed) > w.objective_value);
    }
}

TEST_CASE("consistent recovery on random connected incomplete matrices") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + rng() % 18;
        const auto [m, hidden] = testgen::random_consistent_matrix(rng, n, 0.3);
        const auto w = solve_llsm(m);
        CHECK(w.objective_value <= 1e-20);
        for (const auto& [key, value] : m.entries()) {
            const double reproduced = w.weights[key.first] / w.weights[key.second];
            CHECK(std::fabs(reproduced - value) <= 1e-10 * std::fabs(value));
        }
    }
}

TEST_CASE("complete case equals the closed form") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 14;
        const auto m = testgen::random_complete_matrix(rng, n);
        const auto direct = solve_llsm(m);
        const auto closed = geometric_mean_weights(m);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(direct.weights[i] - closed.weights[i]) <= 1e-12);
    }
}

TEST_CASE("solver matches the brute-force minimizer") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 3 + rng() % 3; // up to 5 alternatives
        const auto m = testgen::random_connected_matrix(rng, n, 0.4);
        const auto w = solve_llsm(m);
        const auto reference = oracle::minimize_weights(m, rng);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(w.weights[i] - reference[i]) <= 1e-6);
    }
}

TEST_CASE("residual norm stays tiny up to n = 100") {
    std::mt19937 rng(9);
    for (const std::size_t n : {10u, 40u, 100u}) {
        const auto m = testgen::random_connected_matrix(rng, n, 0.1);
        const auto w = solve_llsm(m);
        CHECK(w.residual_norm < 1e-10);
        CHECK(std::fabs(weight_sum(w) - 1.0) <= 1e-12);
        for (double weight : w.weights) CHECK(weight > 0.0);
    }
}

TEST_CASE("disconnected graphs are refused with components named") {
    IncompletePairwiseMatrix m(testgen::team_codes(5));
    m.set_pair(0, 1, 2.0);
    m.set_pair(1, 2, 2.0);
    m.set_pair(3, 4, 3.0);
    try {
        solve_llsm(m);
        FAIL("expected DisconnectedError");
    } catch (const DisconnectedError& e) {
        REQUIRE(e.components().size() == 2);
        CHECK(e.components()[0] == std::vector<std::string>{"T00", "T01", "T02"});
        CHECK(e.components()[1] == std::vector<std::string>{"T03", "T04"});
    }

    // one bridging comparison flips it to solvable
    m.set_pair(2, 3, 1.0);
    CHECK_NOTHROW(solve_llsm(m));
}

TEST_CASE("draw entries still connect the graph") {
    IncompletePairwiseMatrix m(testgen::team_codes(4));
    m.set_pair(0, 1, 2.0);
    m.set_pair(1, 2, 1.0); // a draw carries information too
    m.set_pair(2, 3, 5.0);
    const auto w = solve_llsm(m);
    CHECK(w.objective_value <= 1e-20);
    CHECK(w.weights[1] == doctest::Approx(w.weights[2]).epsilon(1e-12));
}

TEST_CASE("permutation equivariance") {
    std::mt19937 rng(55);
    const auto m = testgen::random_connected_matrix(rng, 7, 0.5);
    const auto base = solve_llsm(m);

    std::vector<std::size_t> permutation(7);
    std::iota(permutation.begin(), permutation.end(), 0u);
    std::shuffle(permutation.begin(), permutation.end(), rng);

    std::vector<std::string> labels(7);
    for (std::size_t i = 0; i < 7; ++i) labels[permutation[i]] = m.labels()[i];
    IncompletePairwiseMatrix relabeled(labels);
    for (const auto& [key, value] : m.entries())
        if (key.first < key.second)
            relabeled.set_pair(permutation[key.first], permutation[key.second], value);

    const auto mapped = solve_llsm(relabeled);
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(mapped.weights[permutation[i]] == doctest::Approx(base.weights[i]).epsilon(1e-12));
}

TEST_CASE("gauge covariance under per-alternative rescaling") {
    std::mt19937 rng(66);
    const std::size_t n = 6;
    const auto m = testgen::random_connected_matrix(rng, n, 0.5);
    const auto base = solve_llsm(m);

    std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
    std::vector<double> s(n);
    for (double& v : s) v = std::exp(log_scale(rng));

    IncompletePairwiseMatrix scaled(m.labels());
    for (const auto& [key, value] : m.entries())
        if (key.first < key.second)
            scaled.set_pair(key.first, key.second, value * s[key.first] / s[key.second]);

    const auto mapped = solve_llsm(scaled);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += base.weights[i] * s[i];
    for (std::size_t i = 0; i < n; ++i)
        CHECK(mapped.weights[i] == doctest::Approx(base.weights[i] * s[i] / sum).epsilon(1e-9));

    // constant rescaling leaves the matrix, hence the weights, untouched
    IncompletePairwiseMatrix unchanged(m.labels());
    for (const auto& [key, value] : m.entries())
        if (key.first < key.second) unchanged.set_pair(key.first, key.second, value);
    const auto same = solve_llsm(unchanged);
    CHECK(same.weights == base.weights);
}
