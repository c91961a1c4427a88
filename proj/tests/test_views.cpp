#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disagree/payoff.hpp"
#include "disagree/views.hpp"
#include "oracles.hpp"

using namespace disagree;
using oracles::simpson;

namespace {

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

}  // namespace

TEST_CASE("bandit likelihoods") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    CHECK(evaluate_likelihood(pair, Stance::H, 0.3, 1.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(evaluate_likelihood(pair, Stance::H, 0.0, 0.0) == 1.0);
    CHECK(evaluate_likelihood(pair, Stance::L, 0.3, 1.0) == 0.0);
    CHECK(evaluate_likelihood(pair, Stance::L, 0.3, 0.0) == 1.0);
    // y outside the support is not an error
    CHECK(evaluate_likelihood(pair, Stance::H, 0.3, 0.7) == 0.0);
    CHECK_THROWS_AS(evaluate_likelihood(pair, Stance::H, 1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(evaluate_likelihood(pair, Stance::H, -0.1, 1.0), std::domain_error);
}

TEST_CASE("bandit with r > 0 puts failure mass on r under L") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0);
    const auto h = pair.distribution(Stance::H, 0.3);
    const auto l = pair.distribution(Stance::L, 0.3);
    REQUIRE(h.values == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(h.probs[0] == doctest::Approx(0.7));
    CHECK(h.probs[1] == 0.0);
    CHECK(h.probs[2] == doctest::Approx(0.3));
    CHECK(l.probs[1] == doctest::Approx(0.3));
    CHECK(l.probs[2] == 0.0);
}

TEST_CASE("uniform view L density on the grid") {
    const auto pair = TechnologyViewPair::uniform_linear({1.0, 5.0}, 10.0);
    const double dy = pair.grid_spacing();
    CHECK(dy == doctest::Approx(0.1));
    // analytic uniform density 1/(2 psi) times the cell width
    CHECK(evaluate_likelihood(pair, Stance::L, 2.0, 0.0) == doctest::Approx(dy / 10.0).epsilon(1e-12));
    double total = 0.0;
    for (double p : pair.distribution(Stance::L, 2.0).probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expected output") {
    const auto bandit = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    CHECK(expected_output(bandit, Stance::H, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(expected_output(bandit, Stance::H, 0.0) == 0.0);
    CHECK(expected_output(bandit, Stance::L, 0.7) == 0.0);
    CHECK_THROWS_AS(expected_output(bandit, Stance::H, 2.0), std::domain_error);

    const auto uni = TechnologyViewPair::uniform_linear({1.0, 5.0}, 10.0);
    // quadrature of y times the uniform density over [e - psi, e + psi]
    const double e = 1.2;
    const double oracle = simpson([](double y) { return y / 10.0; }, e - 5.0, e + 5.0);
    CHECK(oracle == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(expected_output(uni, Stance::H, e) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("gaussian cell masses match quadrature of the truncated density") {
    const double sigma = 0.8;
    const auto pair = TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Gaussian, sigma}, 4.0, 101);
    const double e = 1.7;
    const auto d = pair.distribution(Stance::H, e);
    const double mu = 1.7;
    const double h = pair.grid_spacing();
    std::vector<double> oracle(d.size());
    double total = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const double lo = std::max(d.values[j] - 0.5 * h, mu - 4.0 * sigma);
        const double hi = std::min(d.values[j] + 0.5 * h, mu + 4.0 * sigma);
        oracle[j] = simpson([&](double y) { return std_normal_pdf((y - mu) / sigma) / sigma; }, lo, hi, 100);
        total += oracle[j];
    }
    double oracle_mean = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        CHECK(d.probs[j] == doctest::Approx(oracle[j] / total).epsilon(1e-8));
        oracle_mean += d.values[j] * oracle[j] / total;
    }
    CHECK(d.mean() == doctest::Approx(oracle_mean).epsilon(1e-9));
    CHECK(std::abs(d.mean() - mu) < 1e-6);
}

TEST_CASE("symmetric noise: L is the reflection of H about the midpoint") {
    for (NoiseShape shape : {NoiseShape::Gaussian, NoiseShape::Triangular}) {
        const auto pair = TechnologyViewPair::additive_noise({1.0, 0.4, shape, 1.0}, 3.0, 81);
        const auto h = pair.distribution(Stance::H, 2.0);
        const auto l = pair.distribution(Stance::L, 2.0);
        REQUIRE(h.values == l.values);
        for (std::size_t j = 0; j < h.size(); ++j) CHECK(h.probs[j] == doctest::Approx(l.probs[h.size() - 1 - j]).epsilon(1e-12));
    }
}

TEST_CASE("assumptions on the bandit illustration") {
    const auto pair = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    const auto rep = validate_assumptions(pair, PayoffSpec::quadratic(4.0, 2.0), EffortGrid{1.0, 401, 10});
    CHECK(rep.fosd_Q);
    CHECK(rep.fosd_H);
    CHECK(rep.fosd_L);
    CHECK(rep.dominance_H_over_L);
    CHECK(rep.unique_maximizers);
    CHECK(rep.informativeness_monotone);
    CHECK_FALSE(rep.informativeness_reversed);
    CHECK(rep.all_hold());
    CHECK(rep.e_H == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep.e_L == 0.0);
}

TEST_CASE("inverse informativeness is detected") {
    const auto pair = TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, 1.0}, 8.0, 101);
    const auto rep = validate_assumptions(pair, PayoffSpec::quadratic(1.0, -2.0), EffortGrid{8.0, 41, 10});
    CHECK_FALSE(rep.informativeness_monotone);
    CHECK(rep.informativeness_reversed);
    CHECK(rep.dominance_H_over_L);
}

TEST_CASE("inverse-info constraint is enforced") {
    CHECK_THROWS_AS(TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, 1.0}, 11.0), std::invalid_argument);
    CHECK_THROWS_AS(TechnologyViewPair::inverse_info_linear({5.0, 1.0, 0.5, 1.0}, 8.0), std::invalid_argument);
}

TEST_CASE("FOSD and H dominance hold pointwise on the model CDFs") {
    std::vector<TechnologyViewPair> pairs{
        TechnologyViewPair::discrete_bandit({0.5, 1.0, 1.0}, 1.0),
        TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Gaussian, 1.0}, 2.0, 101),
        TechnologyViewPair::additive_noise({1.0, 0.5, NoiseShape::Triangular, 1.0}, 2.0, 101),
        TechnologyViewPair::uniform_linear({1.0, 5.0}, 10.0),
        TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, 1.0}, 8.0, 101),
    };
    for (const auto& pair : pairs) {
        CAPTURE(pair.describe());
        const double b = pair.effort_bound();
        for (int i = 0; i + 1 < 11; ++i) {
            const double e = b * i / 10.0;
            const double e2 = b * (i + 1) / 10.0;
            for (double y : pair.cdf_probe_points(e, e2)) {
                for (Stance s : {Stance::H, Stance::L})
                    CHECK(pair.model_cdf(s, e2, y) <= pair.model_cdf(s, e, y) + 1e-12);
                if (e2 > 0) CHECK(pair.model_cdf(Stance::H, e2, y) <= pair.model_cdf(Stance::L, e2, y) + 1e-12);
            }
            for (Stance s : {Stance::H, Stance::L})
                CHECK(pair.expected_output(s, e2) >= pair.expected_output(s, e) - 1e-12);
        }
    }
}

TEST_CASE("true process: members, uniform shift and tables") {
    const auto uni = TechnologyViewPair::uniform_linear({1.0, 5.0}, 10.0);
    const auto q = TrueProcess::uniform_shift(uni, 0.8, 101);
    for (double e : {0.0, 1.0, 2.5, 3.33, 10.0}) CHECK(q.expected_output(uni, e) == doctest::Approx(0.8 * e).epsilon(1e-9));

    const auto bandit = TechnologyViewPair::discrete_bandit({0.0, 1.0, 1.0}, 1.0);
    CHECK(TrueProcess::member(Stance::H).expected_output(bandit, 0.4) == doctest::Approx(0.4));
    CHECK(TrueProcess::member(Stance::L).expected_output(bandit, 0.4) == 0.0);

    // success probability 0.5 e, interpolated linearly between rows
    TrueProcess::Table t{{0.0, 1.0}, {0.0, 1.0}, {{1.0, 0.0}, {0.5, 0.5}}};
    const auto tq = TrueProcess::table(t);
    CHECK(tq.expected_output(bandit, 0.3) == doctest::Approx(0.15).epsilon(1e-14));
    CHECK(tq.cdf(bandit, 0.3, 0.0) == doctest::Approx(0.85).epsilon(1e-14));

    TrueProcess::Table bad{{0.0, 1.0}, {0.0, 1.0}, {{1.0, 0.0}, {0.6, 0.6}}};
    CHECK_THROWS_AS(TrueProcess::table(bad), std::invalid_argument);
}

TEST_CASE("effort grid") {
    EffortGrid g{1.0, 401, 10};
    CHECK(g.at(0) == 0.0);
    CHECK(g.at(400) == 1.0);
    CHECK(g.at(100) == 0.25);
    CHECK(g.values().size() == 401);
}
