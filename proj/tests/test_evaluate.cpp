#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "disagree/config.hpp"
#include "disagree/evaluate.hpp"
#include "fixtures.hpp"

using namespace disagree;
using fixtures::H;
using fixtures::L;

namespace {

double team_output(const GameConfig& g) { return solve_and_evaluate(g).outcome.total; }

// Two-period output of the bandit illustration with models (H, L) under Q = H,
// alpha = 0, r = 0: Ann works e^H(1 + beta e^H), Bob 0, Bob converts on a
// breakthrough and then works e^H.
double illustration_oracle(double beta, double c) {
    const double eh = 1.0 / c;
    const double ea = eh * (1.0 + beta * eh);
    return ea + 0.0 + eh + ea * eh;
}

}  // namespace

TEST_CASE("exact team output on the illustration") {
    const auto g = fixtures::bandit();
    CHECK(team_output(g.with_models(H, H)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(team_output(g.with_models(L, L)) == 0.0);
    const auto ev = solve_and_evaluate(g);
    CHECK(std::abs(ev.outcome.total - illustration_oracle(2.0, 4.0)) <= 1e-9);
    CHECK(illustration_oracle(2.0, 4.0) == doctest::Approx(0.71875));
    CHECK(ev.outcome.switch_probability[1] == doctest::Approx(0.375).epsilon(1e-9));
    CHECK(ev.outcome.switch_probability[0] == 0.0);

    double sum = 0.0;
    for (const auto& per : ev.outcome.output)
        for (double y : per) sum += y;
    CHECK(std::abs(sum - ev.outcome.total) <= 1e-12);
    // the optimist's own payoff: E[u] both periods plus beta times Bob's output
    const auto& o = ev.outcome;
    const double ea = o.play.actions[0].effort;
    const double pay_a = ea - 2.0 * ea * ea + 0.25 - 2.0 * 0.0625 + 2.0 * (o.output[1][0] + o.output[1][1]);
    CHECK(o.payoff[0] == doctest::Approx(pay_a).epsilon(1e-12));
}

TEST_CASE("symmetry in the model pair") {
    for (const auto& g : {fixtures::bandit(), fixtures::bandit(2.0, 0.5, 0.1), fixtures::uniform()}) {
        CHECK(team_output(g.with_models(L, H)) == doctest::Approx(team_output(g)).epsilon(1e-12));
    }
    const auto g2 = fixtures::bandit_two_tech(0.5, 0.05);
    for (const auto& ma : all_models(2))
        for (const auto& mb : all_models(2))
            CHECK(team_output(g2.with_models(ma, mb)) == doctest::Approx(team_output(g2.with_models(mb, ma))).epsilon(1e-12));
}

TEST_CASE("strong externalities") {
    const auto g6 = fixtures::bandit(6.0);
    const double hl = team_output(g6);
    CHECK(std::abs(hl - illustration_oracle(6.0, 4.0)) <= 1e-9);
    CHECK(hl == doctest::Approx(1.03125).epsilon(1e-9));
    CHECK(hl > team_output(g6.with_models(H, H)));
    const auto g2 = fixtures::bandit(2.0);
    CHECK(team_output(g2) < team_output(g2.with_models(H, H)));

    // threshold (2 - R/c) / ((R/c)(1 + R/c)) = 5.6 sits between the two
    const double rc = 0.25;
    CHECK((2.0 - rc) / (rc * (1.0 + rc)) == doctest::Approx(5.6));

    const auto rep = strong_externality_threshold(g6);
    CHECK(rep.delta == doctest::Approx(6.0 * 0.25).epsilon(1e-12));
    CHECK(rep.e_hat_attainable);
    CHECK(rep.e_hat == doctest::Approx(1.0).epsilon(1e-9));
    // -(1 - 4e) / 1 is largest at e = e_hat
    CHECK(rep.max_bound == doctest::Approx(3.0).epsilon(1e-6));
    CHECK_FALSE(rep.condition_holds);
    CHECK(rep.conclusion_holds);
    CHECK(rep.implication_ok);
}

TEST_CASE("finite-difference gradients match the bandit closed forms") {
    const auto g = fixtures::bandit();
    const auto& pair = g.pair(0);
    const double h = g.grid.step();
    const std::vector<TechnologyViewPair> views{pair};
    auto eu = [&](double e) { return g.payoff.expected_u(pair.distribution(Stance::H, e), e); };
    auto phi = [&](double e) {
        const auto t = SwitchTest::build(L, H, {e, 0.0}, {0, 0}, views, 0.0);
        return switch_probability(t, H, {e, 0.0}, {0, 0}, views);
    };
    for (double e : {0.25, 0.4, 0.6, 0.9}) {
        CHECK(central_difference(eu, e, h) == doctest::Approx(1.0 - 4.0 * e).epsilon(1e-6));
        CHECK(central_difference(phi, e, h) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("benchmark modes") {
    for (Stance q : {Stance::H, Stance::L}) {
        const auto base = fixtures::bandit(2.0, 0.5, 0.1).with_truth({TrueProcess::member(q)});
        double like[2][3];
        for (int mi = 0; mi < 3; ++mi) {
            const auto g = base.with_mode(static_cast<Mode>(mi));
            like[0][mi] = team_output(g.with_models(H, H));
            like[1][mi] = team_output(g.with_models(L, L));
        }
        for (int mi = 1; mi < 3; ++mi) {
            CHECK(like[0][mi] == like[0][0]);
            CHECK(like[1][mi] == like[1][0]);
        }
        const double u_hl = team_output(base.with_mode(Mode::Unaware));
        CHECK(std::abs(2.0 * u_hl - (like[0][2] + like[1][2])) <= 1e-12);
        const double o_hl = team_output(base.with_mode(Mode::Myopic));
        if (q == Stance::H)
            CHECK(2.0 * o_hl >= like[0][1] + like[1][1] - 1e-12);
        else
            CHECK(2.0 * o_hl <= like[0][1] + like[1][1] + 1e-12);
    }
}

TEST_CASE("team-comparison verifier") {
    const auto rep = verify_team_comparisons(fixtures::bandit());
    for (const auto& q : rep.checks) {
        CAPTURE(format_inequality(q));
        CHECK((!q.applicable || q.holds));
    }
    CHECK(rep.all_hold());
}

TEST_CASE("two-technology verifier") {
    for (const auto& g : {fixtures::bandit_two_tech(), fixtures::bandit_two_tech(0.5, 0.05)}) {
        const auto rep = verify_two_tech(g);
        for (const auto& q : rep.checks) {
            CAPTURE(format_inequality(q));
            CHECK((!q.applicable || q.holds));
        }
        CHECK(rep.all_hold());
    }
    const auto ev = solve_and_evaluate(fixtures::bandit_two_tech());
    CHECK(ev.outcome.total == doctest::Approx(1.25).epsilon(1e-9));
}

TEST_CASE("negative externalities with inverse informativeness") {
    const auto loaded = load_config(fixtures::source_path("configs/claim1.json"));
    const auto rep = verify_claim1_direction(loaded.game);
    for (const auto& q : rep.checks) {
        CAPTURE(format_inequality(q));
        CHECK((!q.applicable || q.holds));
    }
    CHECK(rep.all_hold());
    bool strict_seen = false;
    for (const auto& q : rep.checks) strict_seen |= q.applicable && q.relation != "==" && q.strict;
    CHECK(strict_seen);
}

TEST_CASE("the most productive equilibrium is reported") {
    const auto g = fixtures::bandit_two_tech(0.5, 0.05);
    const auto prof = solve_equilibrium(g);
    double best = -1e300;
    for (const auto& play : prof.equilibria) best = std::max(best, evaluate_play(g, prof, play).total);
    CHECK(expected_team_output(g, prof).total == best);
}

TEST_CASE("Monte Carlo") {
    const auto g = fixtures::bandit();
    const auto prof = solve_equilibrium(g);
    CHECK_THROWS_AS(simulate_play(g, prof, prof.primary(), MonteCarloSpec{1000, std::nullopt}), std::domain_error);

    const MonteCarloSpec mc{200'000, 99};
    const auto a = simulate_play(g, prof, prof.primary(), mc);
    const auto b = simulate_play(g, prof, prof.primary(), mc);
    CHECK(a.total == b.total);
    CHECK(a.std_error > 0.0);
    CHECK(simulate_play(g, prof, prof.primary(), MonteCarloSpec{200'000, 100}).total != a.total);

    for (const auto& cfg : {fixtures::bandit(), fixtures::uniform(), fixtures::bandit_two_tech(0.5, 0.05)}) {
        const auto cc = cross_check(cfg, mc);
        CAPTURE(cc.exact);
        CAPTURE(cc.simulated);
        CHECK(std::abs(cc.z()) <= 4.0);
    }
}
