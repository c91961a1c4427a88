#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "disagree/experiments.hpp"
#include "oracles.hpp"

using namespace disagree;
using oracles::brute_force_power;

namespace {

std::vector<double> random_pmf(std::mt19937_64& rng, std::size_t n, bool allow_zero) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
        x = u(rng);
        if (allow_zero && x < 0.2) x = 0.0;
        s += x;
    }
    if (s == 0.0) {
        p[0] = 1.0;
        s = 1.0;
    }
    for (auto& x : p) x /= s;
    return p;
}

}  // namespace

TEST_CASE("uninformative experiment: power equals size") {
    DichotomousExperiment x(std::vector<double>{0.0, 1.0, 2.0}, {0.2, 0.5, 0.3}, {0.2, 0.5, 0.3});
    CHECK(power_curve(x)(0.3) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("bandit power at size zero") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    const auto x = view_experiment(pair, 0.3).swapped();  // null L
    CHECK(power_curve(x)(0.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(brute_force_power(x.p_null(), x.p_alt(), 0.0) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("bandit r = 0.5 power against brute force") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0);
    const auto x = view_experiment(pair, 0.3).swapped();
    const double oracle = brute_force_power(x.p_null(), x.p_alt(), 0.1);
    CHECK(oracle == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(std::abs(power_curve(x)(0.1) - oracle) <= 1e-12);
}

TEST_CASE("power curves agree with brute force on random experiments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 5;
        auto p0 = random_pmf(rng, n, true);
        auto p1 = random_pmf(rng, n, true);
        std::vector<double> support(n);
        for (std::size_t i = 0; i < n; ++i) support[i] = static_cast<double>(i);
        DichotomousExperiment x(support, p0, p1);
        const auto curve = power_curve(x);
        double prev = -1.0;
        for (int k = 0; k <= 20; ++k) {
            const double a = k / 20.0;
            const double pw = curve(a);
            CHECK(std::abs(pw - brute_force_power(p0, p1, a)) <= 1e-12);
            CHECK(pw >= a - 1e-12);
            CHECK(pw <= 1.0 + 1e-12);
            CHECK(pw >= prev - 1e-12);
            prev = pw;
        }
        const double a = u(rng);
        CHECK(std::abs(curve(a) - brute_force_power(p0, p1, a)) <= 1e-12);
        // concavity on the midpoint of random pairs
        const double a1 = u(rng), a2 = u(rng);
        CHECK(curve(0.5 * (a1 + a2)) >= 0.5 * (curve(a1) + curve(a2)) - 1e-12);
    }
}

TEST_CASE("pooled classes carry exactly the null mass up to size") {
    // two atoms with the same ratio are pooled into one boundary class
    const std::vector<double> p0{0.25, 0.25, 0.5};
    const std::vector<double> p1{0.5, 0.5, 0.0};
    const auto cls = pooled_ratio_classes(p0, p1);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].ratio == doctest::Approx(2.0));
    CHECK(cls[0].null_mass == doctest::Approx(0.5));
    CHECK(cls[1].ratio == 0.0);
    const std::vector<double> q0{0.0, 0.5, 0.5};
    const std::vector<double> q1{0.2, 0.8, 0.0};
    CHECK(std::isinf(pooled_ratio_classes(q0, q1).front().ratio));
}

TEST_CASE("product is commutative and at least as informative as each factor") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0);
    const auto a = view_experiment(pair, 0.3);
    const auto b = view_experiment(pair, 0.6);
    const auto ab = product(a, b);
    const auto ba = product(b, a);
    for (int k = 0; k <= 100; ++k) {
        const double al = k / 100.0;
        CHECK(power_curve(ab)(al) == doctest::Approx(power_curve(ba)(al)).epsilon(1e-12));
    }
    CHECK(blackwell_geq(ab, a).dominates);
    CHECK(blackwell_geq(ab, b).dominates);

    // an uninformative factor adds nothing
    const auto zero = view_experiment(pair, 0.0);
    CHECK(blackwell_geq(product(a, zero), a).equivalent);
}

TEST_CASE("blackwell verdicts") {
    const auto bandit = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    const auto x = view_experiment(bandit, 0.4);
    CHECK(blackwell_geq(x, x).equivalent);
    const auto v = blackwell_geq(x, view_experiment(bandit, 0.2));
    CHECK(v.dominates);
    CHECK_FALSE(v.equivalent);
    CHECK_FALSE(blackwell_geq(view_experiment(bandit, 0.2), x).dominates);

    const auto inv = TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, 1.0}, 8.0, 101);
    CHECK(blackwell_geq(view_experiment(inv, 0.5), view_experiment(inv, 2.0)).dominates);
    CHECK_FALSE(blackwell_geq(view_experiment(inv, 2.0), view_experiment(inv, 0.5)).dominates);
}

TEST_CASE("informativeness order across grid pairs") {
    auto check_family = [](const TechnologyViewPair& pair, bool increasing) {
        const double b = pair.effort_bound();
        constexpr int n = 9;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto lo = view_experiment(pair, b * i / (n - 1));
                const auto hi = view_experiment(pair, b * j / (n - 1));
                CAPTURE(i);
                CAPTURE(j);
                CHECK(blackwell_geq(increasing ? hi : lo, increasing ? lo : hi).dominates);
            }
    };
    check_family(TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0), true);
    check_family(TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0), true);
    check_family(TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Gaussian, 1.0}, 2.0, 101), true);
    check_family(TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, 1.0}, 8.0, 101), false);
}

TEST_CASE("equal falsifiability") {
    const EffortGrid grid{1.0, 21, 10};
    CHECK(check_equal_falsifiability(TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0), grid));
    CHECK_FALSE(check_equal_falsifiability(TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0), grid));
    const EffortGrid g2{2.0, 21, 10};
    CHECK(check_equal_falsifiability(
        TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Gaussian, 1.0}, 2.0, 101), g2));
    CHECK(check_equal_falsifiability(
        TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Triangular, 1.0}, 2.0, 101), g2));
}
